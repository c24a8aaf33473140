#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "palsum/errors.hpp"
#include "palsum/palindrome.hpp"

using namespace palsum;
using namespace palsum::literals;

namespace {

DecimalNat dn(std::uint64_t v) { return DecimalNat::from_uint(v); }

std::vector<DecimalNat> collect(const DecimalNat& lo, const DecimalNat& hi, Order order) {
  std::vector<DecimalNat> out;
  for (const auto& p : palindromes_between(lo, hi, order)) out.push_back(p);
  return out;
}

}  // namespace

TEST(IsPalindrome, Examples) {
  EXPECT_TRUE(is_palindrome("33"_dn));
  EXPECT_TRUE(is_palindrome("0"_dn));
  EXPECT_TRUE(is_palindrome("7"_dn));
  EXPECT_TRUE(is_palindrome("10101"_dn));
  EXPECT_FALSE(is_palindrome("100001102"_dn));
  EXPECT_FALSE(is_palindrome("10"_dn));
}

TEST(PrevPalindrome, Examples) {
  EXPECT_EQ(prev_palindrome("10001"_dn), "9999"_dn);
  EXPECT_EQ(prev_palindrome("1"_dn), "0"_dn);
  EXPECT_EQ(prev_palindrome("100001102"_dn), "100000001"_dn);
  EXPECT_EQ(oracle::prev_palindrome(100001102), 100000001u);
}

TEST(PrevPalindrome, StrictOnPalindromes) {
  EXPECT_EQ(prev_palindrome("121"_dn), "111"_dn);
  EXPECT_EQ(prev_palindrome("11"_dn), "9"_dn);
  EXPECT_EQ(prev_palindrome("101"_dn), "99"_dn);
}

TEST(PrevPalindrome, ZeroHasNoPrecursor) {
  EXPECT_THROW(prev_palindrome(DecimalNat()), DomainError);
}

TEST(PrevPalindrome, LengthBoundaries) {
  for (std::size_t k = 1; k < 60; ++k) {
    // 10^k -> k nines, 10^k + 1 -> k nines, 10^k + 2 -> 10^k + 1.
    const DecimalNat power = DecimalNat::pow10(k);
    const DecimalNat nines = DecimalNat::parse(std::string(k, '9'));
    EXPECT_EQ(prev_palindrome(power), nines);
    EXPECT_EQ(prev_palindrome(add(power, "1"_dn)), nines);
    EXPECT_EQ(prev_palindrome(add(power, "2"_dn)), add(power, "1"_dn));
    EXPECT_EQ(next_palindrome(nines), add(power, "1"_dn));
  }
}

TEST(NextPalindrome, Examples) {
  EXPECT_EQ(next_palindrome("10001"_dn), "10101"_dn);
  EXPECT_EQ(next_palindrome("0"_dn), "1"_dn);
  EXPECT_EQ(next_palindrome("9999"_dn), "10001"_dn);
  EXPECT_EQ(oracle::next_palindrome(9999), 10001u);
  EXPECT_EQ(next_palindrome("9"_dn), "11"_dn);
  EXPECT_EQ(next_palindrome("1991"_dn), "2002"_dn);
}

TEST(FloorPalindrome, Examples) {
  EXPECT_EQ(floor_palindrome("121"_dn), "121"_dn);
  EXPECT_EQ(floor_palindrome("102"_dn), "101"_dn);
  EXPECT_EQ(floor_palindrome("1000103"_dn), "1000001"_dn);
  EXPECT_EQ(oracle::floor_palindrome(102), 101u);
  EXPECT_EQ(oracle::floor_palindrome(1000103), 1000001u);
  EXPECT_EQ(floor_palindrome(DecimalNat()), DecimalNat());
}

TEST(PalindromeNeighbours, MatchEnumerationBelow1e5) {
  // Precursor and successor walked against the filtered palindrome list.
  const auto pals = oracle::palindromes_upto(200'000);
  std::size_t below = 0;  // pals[below] is the largest palindrome < n
  for (std::uint64_t n = 1; n < 100'000; ++n) {
    while (pals[below + 1] < n) ++below;
    const std::size_t above = (pals[below + 1] == n) ? below + 2 : below + 1;
    const DecimalNat d = dn(n);
    ASSERT_EQ(prev_palindrome(d).to_uint(), pals[below]) << n;
    ASSERT_EQ(next_palindrome(d).to_uint(), pals[above]) << n;
    ASSERT_EQ(floor_palindrome(d).to_uint(), pals[below + 1] == n ? n : pals[below]) << n;
    ASSERT_EQ(is_palindrome(d), oracle::is_palindrome(n)) << n;
  }
  EXPECT_EQ(next_palindrome(DecimalNat()), "1"_dn);
}

TEST(PalindromeNeighbours, FloorIsIdentityExactlyOnPalindromes) {
  for (std::uint64_t n = 0; n <= 100'000; ++n) {
    const DecimalNat d = dn(n);
    ASSERT_EQ(floor_palindrome(d) == d, is_palindrome(d)) << n;
  }
}

TEST(PalindromeNeighbours, PrevUndoesNextOnPalindromes) {
  for (const auto& p : palindromes_between(DecimalNat(), dn(100'000))) {
    ASSERT_EQ(prev_palindrome(next_palindrome(p)), p);
    if (!p.is_zero()) ASSERT_EQ(next_palindrome(prev_palindrome(p)), p);
  }
}

TEST(PalindromeNeighbours, DoublePrecursorDefinedFromTwo) {
  for (std::uint64_t n = 2; n < 5'000; ++n) {
    const DecimalNat star = prev_palindrome(dn(n));
    ASSERT_FALSE(star.is_zero()) << n;
    const DecimalNat star_star = prev_palindrome(star);
    ASSERT_LT(star_star, star);
  }
}

TEST(PalindromeNeighbours, RandomWideInputsAgreeWithMirrorDefinition) {
  // No enumeration oracle at these lengths. Instead: both neighbours are
  // palindromes on the correct side of n, and they are adjacent palindromes
  // (or bracket n itself when n is palindromic).
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> digit(0, 9);
  for (int i = 0; i < 500; ++i) {
    std::string s(1, static_cast<char>('1' + digit(rng) % 9));
    const int len = 2 + i % 40;
    while (static_cast<int>(s.size()) < len) s.push_back(static_cast<char>('0' + digit(rng)));
    const DecimalNat n = DecimalNat::parse(s);
    const DecimalNat lo = prev_palindrome(n);
    const DecimalNat hi = next_palindrome(n);
    ASSERT_TRUE(is_palindrome(lo));
    ASSERT_TRUE(is_palindrome(hi));
    ASSERT_LT(lo, n);
    ASSERT_GT(hi, n);
    ASSERT_EQ(next_palindrome(lo), is_palindrome(n) ? n : hi) << s;
    ASSERT_EQ(prev_palindrome(hi), is_palindrome(n) ? n : lo) << s;
  }
}

TEST(PalindromesBetween, Examples) {
  const auto digits = collect(DecimalNat(), "9"_dn, Order::ascending);
  ASSERT_EQ(digits.size(), 10u);
  for (std::uint64_t d = 0; d < 10; ++d) EXPECT_EQ(digits[d], dn(d));

  EXPECT_TRUE(collect("10"_dn, "10"_dn, Order::ascending).empty());
  EXPECT_TRUE(collect("10"_dn, "10"_dn, Order::descending).empty());

  const std::vector<DecimalNat> expected{"99"_dn, "101"_dn, "111"_dn};
  EXPECT_EQ(collect("90"_dn, "120"_dn, Order::ascending), expected);
  const std::vector<DecimalNat> reversed{"111"_dn, "101"_dn, "99"_dn};
  EXPECT_EQ(collect("90"_dn, "120"_dn, Order::descending), reversed);
}

TEST(PalindromesBetween, InclusiveBounds) {
  const std::vector<DecimalNat> both{"99"_dn, "101"_dn};
  EXPECT_EQ(collect("99"_dn, "101"_dn, Order::ascending), both);
  const std::vector<DecimalNat> zero{DecimalNat()};
  EXPECT_EQ(collect(DecimalNat(), DecimalNat(), Order::descending), zero);
}

TEST(PalindromesBetween, RejectsInvertedRange) {
  EXPECT_THROW(palindromes_between("5"_dn, "4"_dn), DomainError);
}

TEST(PalindromesBetween, MatchesFilterBelow1e5) {
  const auto pals = oracle::palindromes_upto(100'000);
  std::vector<std::uint64_t> got;
  for (const auto& p : palindromes_between(DecimalNat(), dn(100'000))) got.push_back(*p.to_uint());
  EXPECT_EQ(got, pals);
  std::vector<std::uint64_t> down;
  for (const auto& p : palindromes_between(DecimalNat(), dn(100'000), Order::descending))
    down.push_back(*p.to_uint());
  std::reverse(down.begin(), down.end());
  EXPECT_EQ(down, pals);
}

TEST(PalindromeCount, Examples) {
  EXPECT_EQ(palindrome_count_upto("9"_dn), "10"_dn);
  EXPECT_EQ(palindrome_count_upto("99"_dn), "19"_dn);
  EXPECT_EQ(palindrome_count_upto(DecimalNat()), "1"_dn);
  std::size_t enumerated = 0;
  for ([[maybe_unused]] const auto& p : palindromes_between(DecimalNat(), dn(1'000'000))) ++enumerated;
  EXPECT_EQ(palindrome_count_upto(dn(1'000'000)), dn(enumerated));
  EXPECT_EQ(enumerated, 1999u);
}

TEST(PalindromeCount, AgreesWithEnumerationAtRandomBounds) {
  const auto pals = oracle::palindromes_upto(10'000'000);
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::uint64_t> bound(0, 9'999'999);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = bound(rng);
    const auto expected = std::upper_bound(pals.begin(), pals.end(), n) - pals.begin();
    ASSERT_EQ(palindrome_count_upto(dn(n)), dn(static_cast<std::uint64_t>(expected))) << n;
  }
}

TEST(PalindromeCount, LongInputs) {
  // Below 10^k every palindrome has at most k digits.
  EXPECT_EQ(palindrome_count_upto(DecimalNat::pow10(1)), "10"_dn);
  EXPECT_EQ(palindrome_count_upto(DecimalNat::pow10(40)),
            sub(shift_left("2"_dn, 20), "1"_dn));
  EXPECT_EQ(palindrome_count_upto(DecimalNat::pow10(41)),
            sub(shift_left("11"_dn, 20), "1"_dn));
}
