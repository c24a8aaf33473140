#include "palsum/sums.hpp"

#include <string>

#include "palsum/errors.hpp"
#include "palsum/palindrome.hpp"

namespace palsum {

PalindromeWitness::PalindromeWitness(const DecimalNat& n, DecimalNat p, DecimalNat q)
    : p_(std::move(p)), q_(std::move(q)) {
  if (!is_palindrome(p_) || !is_palindrome(q_))
    throw DomainError("witness summands must be palindromic: " + p_.str() + " + " + q_.str());
  if (p_ > q_) throw DomainError("witness requires p <= q: " + p_.str() + " > " + q_.str());
  if (add(p_, q_) != n)
    throw DomainError("witness " + p_.str() + " + " + q_.str() + " does not sum to " + n.str());
}

std::optional<PalindromeWitness> two_palindrome_witness(const DecimalNat& n) {
  DecimalNat q = floor_palindrome(n);
  for (;;) {
    const DecimalNat rest = sub(n, q);
    if (q < rest) return std::nullopt;
    if (is_palindrome(rest)) return PalindromeWitness(n, rest, q);
    if (q.is_zero()) return std::nullopt;
    q = prev_palindrome(q);
  }
}

bool in_2p(const DecimalNat& n) { return two_palindrome_witness(n).has_value(); }

bool TwoPTable::contains(std::uint64_t n) const {
  if (n > limit_)
    throw DomainError("2P table covers [0, " + std::to_string(limit_) + "], asked for " +
                      std::to_string(n));
  return bits_[n];
}

std::size_t TwoPTable::population() const noexcept {
  std::size_t count = 0;
  for (bool b : bits_) count += b;
  return count;
}

std::vector<std::uint64_t> palindromes_upto(std::uint64_t limit) {
  __extension__ using Wide = unsigned __int128;
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 0; d <= 9 && d <= limit; ++d) out.push_back(d);

  // Each length-len palindrome is determined by its high half.
  for (int len = 2; len <= 20; ++len) {
    const int half = (len + 1) / 2;
    std::uint64_t first = 1;
    for (int i = 1; i < half; ++i) first *= 10;
    const std::uint64_t last = first * 10;
    for (std::uint64_t high = first; high < last; ++high) {
      Wide value = high;
      std::uint64_t tail = (len % 2 == 0) ? high : high / 10;
      for (int i = half; i < len; ++i) {
        value = value * 10 + tail % 10;
        tail /= 10;
      }
      if (value > limit) return out;
      out.push_back(static_cast<std::uint64_t>(value));
    }
  }
  return out;
}

TwoPTable two_p_table(std::uint64_t limit, const Budget& budget) {
  if (limit > budget.max_table_limit)
    throw BudgetExceeded("2P table limit " + std::to_string(limit) + " exceeds budget " +
                         std::to_string(budget.max_table_limit));
  const std::vector<std::uint64_t> pals = palindromes_upto(limit);
  std::vector<bool> bits(limit + 1, false);
  for (std::size_t i = 0; i < pals.size(); ++i) {
    const std::uint64_t p = pals[i];
    if (p > limit - p) break;
    for (std::size_t j = i; j < pals.size() && pals[j] <= limit - p; ++j) bits[p + pals[j]] = true;
  }
  return TwoPTable(limit, std::move(bits));
}

GreedyDecomposition greedy_decompose(const DecimalNat& n) {
  GreedyDecomposition result{n, {}};
  DecimalNat rest = n;
  while (!rest.is_zero()) {
    DecimalNat step = floor_palindrome(rest);
    rest = sub(rest, step);
    result.summands.push_back(std::move(step));
  }
  return result;
}

std::size_t a088601(const DecimalNat& n) { return greedy_decompose(n).count(); }

DecimalNat greedy_adversary_step(const DecimalNat& previous, std::size_t m) {
  if (DecimalNat::pow10(m) <= previous)
    throw DomainError("adversary step needs 10^" + std::to_string(m) + " > " + previous.str());
  return add(add(DecimalNat::pow10(2 * m), DecimalNat::from_uint(1)), previous);
}

DecimalNat greedy_adversary(std::size_t j) {
  if (j == 0) throw DomainError("adversary index starts at 1");
  DecimalNat n = DecimalNat::from_uint(1);
  for (std::size_t i = 1; i < j; ++i) {
    // 10^m > n first holds at m = number of digits of n.
    n = greedy_adversary_step(n, n.num_digits());
  }
  return n;
}

}  // namespace palsum
