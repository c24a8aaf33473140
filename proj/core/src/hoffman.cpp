#include "palsum/hoffman.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <iterator>
#include <stdexcept>
#include <string>

#include "palsum/errors.hpp"
#include "palsum/palindrome.hpp"

namespace palsum {

namespace {

const DecimalNat kOne = DecimalNat::from_uint(1);
const DecimalNat kTwo = DecimalNat::from_uint(2);
const DecimalNat kEleven = DecimalNat::from_uint(11);

void check_invariant(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("counterexample invariant violated: " + what);
}

std::uint64_t require_machine(const DecimalNat& n) {
  const auto value = n.to_uint();
  if (!value) throw DomainError("scan bound " + n.str() + " exceeds the 64-bit range");
  return *value;
}

// Failures among n in [lo, hi]. `pals` is ascending and contains every
// palindrome from lo's n_** up to hi.
std::vector<HoffmanReport> scan_chunk(const std::vector<std::uint64_t>& pals,
                                      const TwoPTable& table, std::uint64_t lo,
                                      std::uint64_t hi) {
  std::vector<HoffmanReport> failures;
  // k indexes the largest palindrome strictly below n.
  std::size_t k =
      static_cast<std::size_t>(std::lower_bound(pals.begin(), pals.end(), lo) - pals.begin()) - 1;
  for (std::uint64_t n = lo;; ++n) {
    while (k + 1 < pals.size() && pals[k + 1] < n) ++k;
    const bool palindromic = k + 1 < pals.size() && pals[k + 1] == n;
    if (!palindromic) {
      const std::uint64_t star = pals[k];
      const std::uint64_t star_star = pals[k - 1];
      if (!table.contains(n - star) && !table.contains(n - star_star)) {
        HoffmanReport r;
        r.n = DecimalNat::from_uint(n);
        r.n_star = DecimalNat::from_uint(star);
        r.n_star_star = DecimalNat::from_uint(star_star);
        r.d1 = DecimalNat::from_uint(n - star);
        r.d2 = DecimalNat::from_uint(n - star_star);
        r.holds = false;
        failures.push_back(std::move(r));
      }
    }
    if (n == hi) break;
  }
  return failures;
}

}  // namespace

DecimalNat make_twin(std::size_t k, unsigned offset) {
  if (k < 2) throw DomainError("twin exponent must be at least 2, got " + std::to_string(k));
  if (offset != 1 && offset != 3)
    throw DomainError("twin offset must be 1 or 3, got " + std::to_string(offset));
  return add(shift_left(kEleven, k), DecimalNat::from_uint(offset));
}

bool twin_known_outside_2p(std::size_t k, unsigned offset) noexcept {
  if (k < 2) return false;
  if (offset == 1) return true;
  return offset == 3 && k % 2 == 0;
}

std::optional<PalindromeWitness> verify_twin_not_2p(std::size_t k, unsigned offset,
                                                    const Budget& budget) {
  const DecimalNat t = make_twin(k, offset);
  if (k > budget.max_twin_exponent)
    throw BudgetExceeded("twin exponent " + std::to_string(k) + " exceeds budget " +
                         std::to_string(budget.max_twin_exponent));
  return two_palindrome_witness(t);
}

CounterexampleRecord counterexample(std::size_t j, std::optional<std::size_t> m) {
  if (j == 0) throw DomainError("counterexample index starts at 1");
  CounterexampleRecord rec;
  rec.j = j;
  rec.t = make_twin(2 * j, 1);
  rec.m = m.value_or(2 * j + 2);
  if (DecimalNat::pow10(rec.m) <= rec.t)
    throw DomainError("m = " + std::to_string(rec.m) + " too small: need 10^m > " + rec.t.str());
  rec.p = add(DecimalNat::pow10(2 * rec.m), kOne);
  rec.n = add(rec.p, rec.t);

  check_invariant(is_palindrome(rec.p), "p palindromic");
  check_invariant(!is_palindrome(rec.n), "n not palindromic");
  check_invariant(prev_palindrome(rec.n) == rec.p, "n_* = p");
  check_invariant(prev_palindrome(rec.p) == sub(rec.p, kTwo), "p_* = p - 2");
  if (!m) {
    // 10000^(j+1) + 11 * 100^j + 2
    const DecimalNat closed =
        add(add(DecimalNat::pow10(4 * j + 4), shift_left(kEleven, 2 * j)), kTwo);
    check_invariant(rec.n == closed, "closed form");
  }
  return rec;
}

HoffmanReport hoffman_check(const DecimalNat& n) {
  if (n < kTwo) throw DomainError("hoffman_check needs n >= 2, got " + n.str());
  if (is_palindrome(n)) throw DomainError(n.str() + " is palindromic");
  HoffmanReport r;
  r.n = n;
  r.n_star = prev_palindrome(n);
  r.n_star_star = prev_palindrome(r.n_star);
  r.d1 = sub(n, r.n_star);
  r.d2 = sub(n, r.n_star_star);
  r.w1 = two_palindrome_witness(r.d1);
  r.w2 = two_palindrome_witness(r.d2);
  r.holds = r.w1.has_value() || r.w2.has_value();
  return r;
}

std::vector<HoffmanReport> scan_hoffman(const DecimalNat& lo, const DecimalNat& hi,
                                        const ScanOptions& options) {
  if (lo < kTwo) throw DomainError("scan needs lo >= 2, got " + lo.str());
  if (lo > hi) throw DomainError("empty scan range: " + lo.str() + " > " + hi.str());
  const std::uint64_t lo_u = require_machine(lo);
  const std::uint64_t hi_u = require_machine(hi);
  if (hi_u - lo_u >= options.budget.max_table_limit)
    throw BudgetExceeded("scan width " + std::to_string(hi_u - lo_u + 1) + " exceeds budget " +
                         std::to_string(options.budget.max_table_limit));

  // Every n_* and n_** needed lies at or above lo's n_**.
  DecimalNat base = prev_palindrome(lo);
  if (!base.is_zero()) base = prev_palindrome(base);
  std::vector<std::uint64_t> pals;
  for (const DecimalNat& p : palindromes_between(base, hi)) pals.push_back(*p.to_uint());

  // The table only has to reach the largest n - n_** in range. Inside the
  // gap after pals[i-1] that difference peaks at the last n before the next
  // palindrome (or at hi).
  std::uint64_t widest = 0;
  for (std::size_t i = 2; i <= pals.size(); ++i) {
    const std::uint64_t bottom = std::max(pals[i - 1] + 1, lo_u);
    const std::uint64_t top = (i < pals.size()) ? std::min(pals[i] - 1, hi_u) : hi_u;
    if (bottom <= top) widest = std::max(widest, top - pals[i - 2]);
  }
  const TwoPTable table = two_p_table(widest, options.budget);

  const std::size_t threads = std::max<std::size_t>(1, options.threads);
  const std::uint64_t width = hi_u - lo_u + 1;
  const std::uint64_t chunk = (width + threads - 1) / threads;
  std::vector<std::future<std::vector<HoffmanReport>>> parts;
  for (std::uint64_t start = lo_u; start <= hi_u; start += chunk) {
    const std::uint64_t stop = std::min(hi_u, start + chunk - 1);
    parts.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async,
                               scan_chunk, std::cref(pals), std::cref(table), start, stop));
    if (stop == hi_u) break;
  }
  std::vector<HoffmanReport> failures;
  for (auto& part : parts) {
    auto chunk_failures = part.get();
    std::move(chunk_failures.begin(), chunk_failures.end(), std::back_inserter(failures));
  }
  return failures;
}

}  // namespace palsum
