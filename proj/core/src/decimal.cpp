#include "palsum/decimal.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>

#include "palsum/errors.hpp"

namespace palsum {

namespace {

[[maybe_unused]] bool is_canonical(std::string_view digits) {
  if (digits.empty()) return false;
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return false;
  return digits.size() == 1 || digits.front() != '0';
}

}  // namespace

DecimalNat DecimalNat::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty decimal string");
  for (char c : text) {
    if (c < '0' || c > '9')
      throw ParseError("non-digit character in decimal string '" + std::string(text) + "'");
  }
  if (text.size() > 1 && text.front() == '0')
    throw ParseError("leading zero in decimal string '" + std::string(text) + "'");
  return DecimalNat(Trusted{}, std::string(text));
}

DecimalNat DecimalNat::from_uint(std::uint64_t value) {
  return DecimalNat(Trusted{}, std::to_string(value));
}

DecimalNat DecimalNat::pow10(std::size_t exponent) {
  std::string digits(exponent + 1, '0');
  digits.front() = '1';
  return DecimalNat(Trusted{}, std::move(digits));
}

std::optional<std::uint64_t> DecimalNat::to_uint() const noexcept {
  constexpr std::uint64_t kMax = UINT64_MAX;
  std::uint64_t value = 0;
  for (char c : digits_) {
    const auto d = static_cast<std::uint64_t>(c - '0');
    if (value > (kMax - d) / 10) return std::nullopt;
    value = value * 10 + d;
  }
  return value;
}

std::strong_ordering operator<=>(const DecimalNat& a, const DecimalNat& b) noexcept {
  // Canonical form: more digits means strictly larger.
  if (a.digits_.size() != b.digits_.size()) return a.digits_.size() <=> b.digits_.size();
  const int c = a.digits_.compare(b.digits_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering compare(const DecimalNat& a, const DecimalNat& b) noexcept { return a <=> b; }

std::string format(const DecimalNat& n) { return n.str(); }

DecimalNat add(const DecimalNat& a, const DecimalNat& b) {
  const std::string& x = a.digits_;
  const std::string& y = b.digits_;
  const std::size_t len = std::max(x.size(), y.size());
  std::string out(len + 1, '0');
  int carry = 0;
  for (std::size_t i = 0; i < len; ++i) {
    int s = carry;
    if (i < x.size()) s += x[x.size() - 1 - i] - '0';
    if (i < y.size()) s += y[y.size() - 1 - i] - '0';
    carry = s >= 10;
    out[len - i] = static_cast<char>('0' + (carry ? s - 10 : s));
  }
  if (carry) {
    out[0] = '1';
  } else {
    out.erase(0, 1);
  }
  return DecimalNat(DecimalNat::Trusted{}, std::move(out));
}

DecimalNat sub(const DecimalNat& a, const DecimalNat& b) {
  if (a < b) throw DomainError("subtraction underflow: " + b.str() + " > " + a.str());
  const std::string& x = a.digits_;
  const std::string& y = b.digits_;
  std::string out(x.size(), '0');
  int borrow = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    int d = (x[x.size() - 1 - i] - '0') - borrow;
    if (i < y.size()) d -= y[y.size() - 1 - i] - '0';
    borrow = d < 0;
    out[x.size() - 1 - i] = static_cast<char>('0' + (borrow ? d + 10 : d));
  }
  assert(borrow == 0);
  const auto first = out.find_first_not_of('0');
  if (first == std::string::npos) return DecimalNat();
  out.erase(0, first);
  return DecimalNat(DecimalNat::Trusted{}, std::move(out));
}

DecimalNat shift_left(const DecimalNat& n, std::size_t exponent) {
  if (n.is_zero() || exponent == 0) return n;
  std::string out = n.digits_;
  out.append(exponent, '0');
  return DecimalNat(DecimalNat::Trusted{}, std::move(out));
}

DecimalNat from_canonical_digits(std::string digits) {
  assert(is_canonical(digits));
  return DecimalNat(DecimalNat::Trusted{}, std::move(digits));
}

std::ostream& operator<<(std::ostream& os, const DecimalNat& n) { return os << n.str(); }

}  // namespace palsum
