#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace subcode {

using BigInt = boost::multiprecision::cpp_int;

/// Non-negative integer held as its q-adic digit vector, lowest digit first.
///
/// The digit vector is the working representation for the encoders: splitting
/// an index into q^k-adic blocks, locating the highest nonzero digit and
/// comparing against sums of powers all happen digit-wise. Decimal text is
/// used only at I/O boundaries. Leading zero digits are allowed (an index can
/// be padded to a declared length) and do not affect equality or ordering.
class MessageIndex {
 public:
  explicit MessageIndex(std::uint32_t radix = 2);

  static MessageIndex from_digits(std::uint32_t radix, std::vector<std::uint32_t> digits);
  static MessageIndex from_integer(const BigInt& value, std::uint32_t radix, std::size_t min_length = 0);
  static MessageIndex from_decimal(std::string_view text, std::uint32_t radix, std::size_t min_length = 0);
  static MessageIndex from_u64(std::uint64_t value, std::uint32_t radix, std::size_t min_length = 0);

  std::uint32_t radix() const noexcept { return radix_; }
  std::span<const std::uint32_t> digits() const noexcept { return digits_; }
  std::size_t length() const noexcept { return digits_.size(); }

  /// Digit at position i (0-based); zero beyond the stored length.
  std::uint32_t digit(std::size_t i) const noexcept { return i < digits_.size() ? digits_[i] : 0; }

  /// Number of digits up to and including the highest nonzero one (0 for zero).
  std::size_t significant_length() const noexcept;
  bool is_zero() const noexcept { return significant_length() == 0; }

  MessageIndex padded(std::size_t length) const;
  MessageIndex trimmed() const;
  MessageIndex rebased(std::uint32_t radix) const;

  BigInt to_integer() const;
  std::string to_decimal() const;
  /// Throws a usage error when the value does not fit.
  std::uint64_t to_u64() const;

  /// Digit-wise addition with carry; both operands must share a radix.
  friend MessageIndex operator+(const MessageIndex& a, const MessageIndex& b);
  /// Digit-wise subtraction with borrow; requires a >= b.
  friend MessageIndex operator-(const MessageIndex& a, const MessageIndex& b);

  /// Compares from the highest digit down (reverse lexicographic order on
  /// the low-first digit vector), which is numeric order.
  friend std::strong_ordering operator<=>(const MessageIndex& a, const MessageIndex& b);
  friend bool operator==(const MessageIndex& a, const MessageIndex& b);

 private:
  std::uint32_t radix_;
  std::vector<std::uint32_t> digits_;
};

}  // namespace subcode
