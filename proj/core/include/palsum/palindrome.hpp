#pragma once

#include <iterator>
#include <optional>

#include "palsum/decimal.hpp"

namespace palsum {

/// True iff the decimal digit string reads the same reversed. 0..9 qualify.
bool is_palindrome(const DecimalNat& n) noexcept;

/// Largest palindrome strictly below n (the palindromic precursor).
/// Strict even when n is itself palindromic. Throws DomainError for n = 0.
/// Linear in the number of digits.
DecimalNat prev_palindrome(const DecimalNat& n);

/// Smallest palindrome strictly above n (the palindromic successor).
DecimalNat next_palindrome(const DecimalNat& n);

/// Largest palindrome <= n: n itself when palindromic, else prev_palindrome(n).
DecimalNat floor_palindrome(const DecimalNat& n);

/// Number of palindromes p with 0 <= p <= n, counted from the digit layout.
DecimalNat palindrome_count_upto(const DecimalNat& n);

enum class Order { ascending, descending };

/// Lazy view over the palindromes in [lo, hi]. Each step costs one
/// successor/precursor computation; nothing is materialised up front.
/// Iterators own their bounds and may outlive the range object.
class PalindromeRange {
 public:
  class iterator {
   public:
    using iterator_concept = std::input_iterator_tag;
    using value_type = DecimalNat;
    using difference_type = std::ptrdiff_t;

    iterator() = default;

    const DecimalNat& operator*() const { return *current_; }
    const DecimalNat* operator->() const { return &*current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return !it.current_.has_value();
    }

   private:
    friend class PalindromeRange;
    iterator(const PalindromeRange& range, std::optional<DecimalNat> first)
        : lo_(range.lo_), hi_(range.hi_), order_(range.order_), current_(std::move(first)) {}

    DecimalNat lo_;
    DecimalNat hi_;
    Order order_ = Order::ascending;
    std::optional<DecimalNat> current_;
  };

  /// Throws DomainError when lo > hi.
  PalindromeRange(DecimalNat lo, DecimalNat hi, Order order);

  iterator begin() const;
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  DecimalNat lo_;
  DecimalNat hi_;
  Order order_;
};

PalindromeRange palindromes_between(DecimalNat lo, DecimalNat hi, Order order = Order::ascending);

}  // namespace palsum
