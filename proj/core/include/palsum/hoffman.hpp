#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "palsum/budget.hpp"
#include "palsum/decimal.hpp"
#include "palsum/sums.hpp"

namespace palsum {

/// The Hoffman predicate evaluated at a non-palindromic n:
/// does n - n_* or n - n_** lie in 2P?
struct HoffmanReport {
  DecimalNat n;
  DecimalNat n_star;       // prev_palindrome(n)
  DecimalNat n_star_star;  // prev_palindrome(n_star)
  DecimalNat d1;           // n - n_star
  DecimalNat d2;           // n - n_star_star
  std::optional<PalindromeWitness> w1;
  std::optional<PalindromeWitness> w2;
  bool holds = false;

  friend bool operator==(const HoffmanReport&, const HoffmanReport&) = default;
};

/// One member of the infinite family of Hoffman failures.
///   t = 11 * 10^(2j) + 1, p = 10^(2m) + 1, n = p + t, with 10^m > t.
struct CounterexampleRecord {
  std::size_t j = 0;
  std::size_t m = 0;
  DecimalNat t;
  DecimalNat p;
  DecimalNat n;

  friend bool operator==(const CounterexampleRecord&, const CounterexampleRecord&) = default;
};

/// 11 * 10^k + offset for offset in {1, 3}. Throws DomainError for k < 2 or
/// any other offset.
DecimalNat make_twin(std::size_t k, unsigned offset);

/// True when 11 * 10^k + offset is known not to be a sum of two palindromes:
/// offset 1 for every k >= 2, offset 3 only for even k >= 2.
bool twin_known_outside_2p(std::size_t k, unsigned offset) noexcept;

/// Exhaustively searches for a 2P witness of make_twin(k, offset). An empty
/// result confirms the instance; a witness falsifies it and callers must
/// surface it. Throws BudgetExceeded for k > budget.max_twin_exponent.
std::optional<PalindromeWitness> verify_twin_not_2p(std::size_t k, unsigned offset,
                                                    const Budget& budget = {});

/// Builds the j-th counterexample. Without m, uses the smallest admissible
/// m = 2j + 2. All record invariants are checked before returning.
/// Throws DomainError for j = 0 or a supplied m with 10^m <= t.
CounterexampleRecord counterexample(std::size_t j, std::optional<std::size_t> m = std::nullopt);

/// Throws DomainError for n < 2 or palindromic n.
HoffmanReport hoffman_check(const DecimalNat& n);

struct ScanOptions {
  Budget budget{};
  /// Worker count; the result does not depend on it.
  std::size_t threads = 1;
};

/// hoffman_check over every non-palindromic n in [lo, hi], answered from a
/// shared 2P table. Returns only the failures, ascending.
/// Requires 2 <= lo <= hi and hi representable as a 64-bit integer; throws
/// BudgetExceeded if the range or the largest difference exceeds the table
/// budget.
std::vector<HoffmanReport> scan_hoffman(const DecimalNat& lo, const DecimalNat& hi,
                                        const ScanOptions& options = {});

}  // namespace palsum
