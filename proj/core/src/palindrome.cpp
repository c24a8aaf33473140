#include "palsum/palindrome.hpp"

#include <algorithm>
#include <string>

#include "palsum/errors.hpp"

namespace palsum {

namespace {

// Copies the high half of the digit string onto the low half.
std::string mirrored(std::string digits) {
  const std::size_t len = digits.size();
  for (std::size_t i = 0; i < len / 2; ++i) digits[len - 1 - i] = digits[i];
  return digits;
}

// Index of the last digit of the high half (the middle digit for odd lengths).
std::size_t high_half_end(std::size_t len) { return (len - 1) / 2; }

}  // namespace

bool is_palindrome(const DecimalNat& n) noexcept {
  const std::string& s = n.str();
  return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

DecimalNat next_palindrome(const DecimalNat& n) {
  const std::string& s = n.str();
  const std::size_t len = s.size();

  // 9..9 -> 10..01, the only case where the length grows.
  if (s.find_first_not_of('9') == std::string::npos) {
    std::string out(len + 1, '0');
    out.front() = '1';
    out.back() = '1';
    return from_canonical_digits(std::move(out));
  }

  std::string m = mirrored(s);
  if (m > s) return from_canonical_digits(std::move(m));

  // The high half cannot be all nines here, or s would be all nines.
  std::size_t i = high_half_end(len);
  while (m[i] == '9') {
    m[i] = '0';
    --i;
  }
  ++m[i];
  return from_canonical_digits(mirrored(std::move(m)));
}

DecimalNat prev_palindrome(const DecimalNat& n) {
  if (n.is_zero()) throw DomainError("0 has no palindromic precursor");
  const std::string& s = n.str();
  const std::size_t len = s.size();

  if (len == 1) return from_canonical_digits(std::string(1, static_cast<char>(s[0] - 1)));

  std::string m = mirrored(s);
  if (m < s) return from_canonical_digits(std::move(m));

  // Leading digit is nonzero, so the borrow stops inside the high half.
  std::size_t i = high_half_end(len);
  while (m[i] == '0') {
    m[i] = '9';
    --i;
  }
  --m[i];
  // High half was 10..0: the precursor is the all-nines string one digit shorter.
  if (m.front() == '0') return from_canonical_digits(std::string(len - 1, '9'));
  return from_canonical_digits(mirrored(std::move(m)));
}

DecimalNat floor_palindrome(const DecimalNat& n) {
  return is_palindrome(n) ? n : prev_palindrome(n);
}

DecimalNat palindrome_count_upto(const DecimalNat& n) {
  const std::string& s = n.str();
  const std::size_t len = s.size();
  if (len == 1) return DecimalNat::from_uint(static_cast<std::uint64_t>(s[0] - '0') + 1);

  // Palindromes with at most len-1 digits: 2*10^e - 1 for 2e digits,
  // 11*10^e - 1 for 2e+1 digits.
  const std::size_t shorter = len - 1;
  const std::size_t e = shorter / 2;
  std::string below = (shorter % 2 == 0) ? "1" : "10";
  below.append(e, '9');

  // len-digit palindromes are fixed by their high half h, which ranges over
  // [10^(half-1), 10^half). Those with a smaller high half than n's are all
  // below n; the one sharing n's high half is below n iff its mirror is.
  const std::size_t half = (len + 1) / 2;
  const DecimalNat high = from_canonical_digits(s.substr(0, half));
  DecimalNat same_length = sub(high, DecimalNat::pow10(half - 1));
  if (mirrored(s) <= s) same_length = add(same_length, DecimalNat::from_uint(1));

  return add(from_canonical_digits(std::move(below)), same_length);
}

PalindromeRange::PalindromeRange(DecimalNat lo, DecimalNat hi, Order order)
    : lo_(std::move(lo)), hi_(std::move(hi)), order_(order) {
  if (lo_ > hi_) throw DomainError("empty interval: " + lo_.str() + " > " + hi_.str());
}

PalindromeRange::iterator PalindromeRange::begin() const {
  if (order_ == Order::ascending) {
    DecimalNat first = is_palindrome(lo_) ? lo_ : next_palindrome(lo_);
    if (first > hi_) return iterator(*this, std::nullopt);
    return iterator(*this, std::move(first));
  }
  DecimalNat first = floor_palindrome(hi_);
  if (first < lo_) return iterator(*this, std::nullopt);
  return iterator(*this, std::move(first));
}

PalindromeRange::iterator& PalindromeRange::iterator::operator++() {
  const DecimalNat& cur = *current_;
  if (order_ == Order::ascending) {
    DecimalNat next = next_palindrome(cur);
    if (next > hi_) {
      current_.reset();
    } else {
      current_ = std::move(next);
    }
  } else {
    if (cur.is_zero() || cur == lo_) {
      current_.reset();
      return *this;
    }
    DecimalNat prev = prev_palindrome(cur);
    if (prev < lo_) {
      current_.reset();
    } else {
      current_ = std::move(prev);
    }
  }
  return *this;
}

PalindromeRange palindromes_between(DecimalNat lo, DecimalNat hi, Order order) {
  return PalindromeRange(std::move(lo), std::move(hi), order);
}

}  // namespace palsum
