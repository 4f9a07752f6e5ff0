#include "subcode/message_index.hpp"

#include <algorithm>
#include <limits>

#include "subcode/error.hpp"

namespace subcode {

MessageIndex::MessageIndex(std::uint32_t radix) : radix_(radix) {
  require(radix >= 2, "message index radix must be at least 2");
}

MessageIndex MessageIndex::from_digits(std::uint32_t radix, std::vector<std::uint32_t> digits) {
  MessageIndex out(radix);
  for (auto d : digits) require(d < radix, "digit out of range for radix " + std::to_string(radix));
  out.digits_ = std::move(digits);
  return out;
}

MessageIndex MessageIndex::from_integer(const BigInt& value, std::uint32_t radix, std::size_t min_length) {
  require(value >= 0, "message index must be non-negative");
  MessageIndex out(radix);
  BigInt rest = value;
  while (rest > 0) {
    out.digits_.push_back(static_cast<std::uint32_t>(rest % radix));
    rest /= radix;
  }
  if (out.digits_.size() < min_length) out.digits_.resize(min_length, 0);
  return out;
}

MessageIndex MessageIndex::from_decimal(std::string_view text, std::uint32_t radix, std::size_t min_length) {
  require(!text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }),
          "message must be a non-negative decimal integer, got '" + std::string(text) + "'");
  return from_integer(BigInt(std::string(text)), radix, min_length);
}

MessageIndex MessageIndex::from_u64(std::uint64_t value, std::uint32_t radix, std::size_t min_length) {
  return from_integer(BigInt(value), radix, min_length);
}

std::size_t MessageIndex::significant_length() const noexcept {
  std::size_t len = digits_.size();
  while (len > 0 && digits_[len - 1] == 0) --len;
  return len;
}

MessageIndex MessageIndex::padded(std::size_t length) const {
  require(significant_length() <= length, "message index does not fit in " + std::to_string(length) + " digits");
  MessageIndex out = *this;
  out.digits_.resize(length, 0);
  return out;
}

MessageIndex MessageIndex::trimmed() const {
  MessageIndex out = *this;
  out.digits_.resize(significant_length());
  return out;
}

MessageIndex MessageIndex::rebased(std::uint32_t radix) const {
  if (radix == radix_) return *this;
  return from_integer(to_integer(), radix);
}

BigInt MessageIndex::to_integer() const {
  BigInt value = 0;
  for (std::size_t i = significant_length(); i-- > 0;) value = value * radix_ + digits_[i];
  return value;
}

std::string MessageIndex::to_decimal() const { return to_integer().str(); }

std::uint64_t MessageIndex::to_u64() const {
  BigInt v = to_integer();
  require(v <= std::numeric_limits<std::uint64_t>::max(), "message index exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

MessageIndex operator+(const MessageIndex& a, const MessageIndex& b) {
  require(a.radix_ == b.radix_, "radix mismatch in message index addition");
  const std::size_t len = std::max(a.length(), b.length());
  MessageIndex out(a.radix_);
  out.digits_.resize(len);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < len; ++i) {
    std::uint64_t s = std::uint64_t{a.digit(i)} + b.digit(i) + carry;
    out.digits_[i] = static_cast<std::uint32_t>(s % a.radix_);
    carry = s / a.radix_;
  }
  if (carry) out.digits_.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

MessageIndex operator-(const MessageIndex& a, const MessageIndex& b) {
  require(a.radix_ == b.radix_, "radix mismatch in message index subtraction");
  require(a >= b, "message index subtraction would go negative");
  MessageIndex out(a.radix_);
  out.digits_.resize(a.length());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.length(); ++i) {
    std::int64_t d = std::int64_t{a.digit(i)} - b.digit(i) - borrow;
    borrow = d < 0 ? 1 : 0;
    if (d < 0) d += a.radix_;
    out.digits_[i] = static_cast<std::uint32_t>(d);
  }
  return out;
}

std::strong_ordering operator<=>(const MessageIndex& a, const MessageIndex& b) {
  if (a.radix_ != b.radix_) {
    const BigInt x = a.to_integer(), y = b.to_integer();
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  const std::size_t la = a.significant_length(), lb = b.significant_length();
  if (la != lb) return la <=> lb;
  for (std::size_t i = la; i-- > 0;) {
    if (a.digits_[i] != b.digits_[i]) return a.digits_[i] <=> b.digits_[i];
  }
  return std::strong_ordering::equal;
}

bool operator==(const MessageIndex& a, const MessageIndex& b) { return (a <=> b) == 0; }

}  // namespace subcode
