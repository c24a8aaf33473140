#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "palsum/budget.hpp"
#include "palsum/decimal.hpp"

namespace palsum {

/// A certified decomposition n = p + q with p, q palindromic and p <= q.
class PalindromeWitness {
 public:
  /// Throws DomainError unless p and q are palindromes, p <= q and p + q == n.
  PalindromeWitness(const DecimalNat& n, DecimalNat p, DecimalNat q);

  const DecimalNat& p() const noexcept { return p_; }
  const DecimalNat& q() const noexcept { return q_; }
  DecimalNat sum() const { return add(p_, q_); }

  friend bool operator==(const PalindromeWitness&, const PalindromeWitness&) = default;

 private:
  DecimalNat p_;
  DecimalNat q_;
};

/// Searches for n = p + q over two palindromes. The larger summand q runs
/// down from floor_palindrome(n) and the first q with n - q palindromic wins,
/// so the witness returned is the one with the largest q. The scan stops
/// once q < n - q, since every decomposition has a summand >= n/2.
std::optional<PalindromeWitness> two_palindrome_witness(const DecimalNat& n);

bool in_2p(const DecimalNat& n);

/// Membership bitmap for 2P over [0, limit].
class TwoPTable {
 public:
  std::uint64_t limit() const noexcept { return limit_; }

  /// Throws DomainError for n > limit().
  bool contains(std::uint64_t n) const;

  std::size_t population() const noexcept;

 private:
  friend TwoPTable two_p_table(std::uint64_t limit, const Budget& budget);
  TwoPTable(std::uint64_t limit, std::vector<bool> bits) : limit_(limit), bits_(std::move(bits)) {}

  std::uint64_t limit_;
  std::vector<bool> bits_;
};

/// Marks p + q for every palindrome pair p <= q with p + q <= limit.
/// Throws BudgetExceeded when limit exceeds budget.max_table_limit.
TwoPTable two_p_table(std::uint64_t limit, const Budget& budget = {});

/// Palindromes in [0, limit] as machine integers, ascending.
std::vector<std::uint64_t> palindromes_upto(std::uint64_t limit);

struct GreedyDecomposition {
  DecimalNat target;
  /// Non-increasing; empty iff target is 0.
  std::vector<DecimalNat> summands;

  std::size_t count() const noexcept { return summands.size(); }
};

/// Repeatedly subtracts floor_palindrome of the remainder until it reaches 0.
GreedyDecomposition greedy_decompose(const DecimalNat& n);

/// Number of summands in the greedy palindromic partition of n (OEIS A088601).
/// a088601(0) = 0.
std::size_t a088601(const DecimalNat& n);

/// One step of the adversary recursion: 10^(2m) + 1 + previous.
/// Throws DomainError unless 10^m > previous.
DecimalNat greedy_adversary_step(const DecimalNat& previous, std::size_t m);

/// n(j) with n(1) = 1 and n(j+1) built by greedy_adversary_step using the
/// smallest m with 10^m > n(j). The greedy partition of n(j) has exactly j
/// summands. Throws DomainError for j = 0.
DecimalNat greedy_adversary(std::size_t j);

}  // namespace palsum
