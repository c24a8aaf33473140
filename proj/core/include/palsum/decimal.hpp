#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace palsum {

using Digit = std::uint8_t;

/// Arbitrary-precision natural number in canonical base-10 form.
///
/// The digit string is kept most significant digit first, with no leading
/// zero except for the value 0 itself (the single digit "0"). Values are
/// immutable once built; every operation returns a fresh canonical value.
class DecimalNat {
 public:
  /// Zero.
  DecimalNat() : digits_("0") {}

  /// Parses a canonical decimal string. Throws ParseError on an empty
  /// string, a non-digit character or a leading zero; nothing is repaired.
  static DecimalNat parse(std::string_view text);

  static DecimalNat from_uint(std::uint64_t value);

  /// 10^exponent.
  static DecimalNat pow10(std::size_t exponent);

  const std::string& str() const noexcept { return digits_; }

  /// Value as a machine integer, or nullopt when it does not fit.
  std::optional<std::uint64_t> to_uint() const noexcept;

  std::size_t num_digits() const noexcept { return digits_.size(); }

  /// h(n): number of digits minus one; magnitude of 0 is 0.
  std::size_t magnitude() const noexcept { return digits_.size() - 1; }

  /// The digit at 10^position; positions beyond the magnitude read as 0.
  Digit digit_at(std::size_t position) const noexcept {
    if (position >= digits_.size()) return 0;
    return static_cast<Digit>(digits_[digits_.size() - 1 - position] - '0');
  }

  bool is_zero() const noexcept { return digits_.size() == 1 && digits_[0] == '0'; }

  friend bool operator==(const DecimalNat&, const DecimalNat&) = default;
  friend std::strong_ordering operator<=>(const DecimalNat& a, const DecimalNat& b) noexcept;

 private:
  struct Trusted {};
  DecimalNat(Trusted, std::string digits) : digits_(std::move(digits)) {}

  friend DecimalNat add(const DecimalNat& a, const DecimalNat& b);
  friend DecimalNat sub(const DecimalNat& a, const DecimalNat& b);
  friend DecimalNat shift_left(const DecimalNat& n, std::size_t exponent);
  friend DecimalNat from_canonical_digits(std::string digits);

  // ASCII '0'..'9', most significant first.
  std::string digits_;
};

std::string format(const DecimalNat& n);

std::strong_ordering compare(const DecimalNat& a, const DecimalNat& b) noexcept;

DecimalNat add(const DecimalNat& a, const DecimalNat& b);

/// a - b. Throws DomainError when b > a.
DecimalNat sub(const DecimalNat& a, const DecimalNat& b);

/// n * 10^exponent.
DecimalNat shift_left(const DecimalNat& n, std::size_t exponent);

/// Wraps an ASCII digit string the caller has already made canonical.
/// Used by the palindrome kernels, which build digit strings directly.
DecimalNat from_canonical_digits(std::string digits);

inline DecimalNat operator+(const DecimalNat& a, const DecimalNat& b) { return add(a, b); }
inline DecimalNat operator-(const DecimalNat& a, const DecimalNat& b) { return sub(a, b); }

std::ostream& operator<<(std::ostream& os, const DecimalNat& n);

namespace literals {
inline DecimalNat operator""_dn(const char* text, std::size_t len) {
  return DecimalNat::parse(std::string_view(text, len));
}
}  // namespace literals

}  // namespace palsum
