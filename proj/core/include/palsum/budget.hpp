#pragma once

#include <cstddef>
#include <cstdint>

namespace palsum {

/// Desk-scale limits for the brute-force searches. Defaults keep every
/// search within seconds; callers may raise them explicitly.
struct Budget {
  /// Largest k accepted by verify_twin_not_2p.
  std::size_t max_twin_exponent = 8;
  /// Largest limit accepted by two_p_table, and the widest range scan_hoffman
  /// will walk.
  std::uint64_t max_table_limit = 100'000'000;
};

}  // namespace palsum
