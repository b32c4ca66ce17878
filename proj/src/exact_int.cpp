#include "hsg/exact_int.hpp"

#include <algorithm>

#include "hsg/errors.hpp"

namespace hsg {

ExactInt ExactInt::from_rep(Rep v) {
  if (v > kMax) throw OverflowError("value exceeds 2^127 - 1");
  ExactInt out;
  out.value_ = v;
  return out;
}

ExactInt ExactInt::parse(std::string_view text) {
  if (text.empty()) throw DomainError("empty integer literal");
  Rep acc = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw DomainError("not a non-negative integer: " + std::string(text));
    const Rep digit = static_cast<Rep>(c - '0');
    if (acc > (kMax - digit) / 10) throw OverflowError("integer literal exceeds 2^127 - 1");
    acc = acc * 10 + digit;
  }
  return from_rep(acc);
}

std::uint64_t ExactInt::to_u64() const {
  if (!fits_u64()) throw OverflowError("value does not fit in 64 bits: " + to_string());
  return static_cast<std::uint64_t>(value_);
}

std::string ExactInt::to_string() const {
  if (value_ == 0) return "0";
  std::string digits;
  Rep v = value_;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

ExactInt operator+(ExactInt lhs, ExactInt rhs) {
  // Both operands are <= kMax, so the raw sum cannot wrap the 128-bit word.
  return ExactInt::from_rep(lhs.value_ + rhs.value_);
}

ExactInt operator-(ExactInt lhs, ExactInt rhs) {
  if (rhs.value_ > lhs.value_) throw OverflowError("subtraction result is negative");
  return ExactInt::from_rep(lhs.value_ - rhs.value_);
}

ExactInt operator*(ExactInt lhs, ExactInt rhs) {
  if (lhs.value_ == 0 || rhs.value_ == 0) return ExactInt{};
  if (lhs.value_ > ExactInt::kMax / rhs.value_) {
    throw OverflowError("product " + lhs.to_string() + " * " + rhs.to_string() +
                        " exceeds 2^127 - 1");
  }
  return ExactInt::from_rep(lhs.value_ * rhs.value_);
}

ExactInt operator/(ExactInt lhs, ExactInt rhs) {
  if (rhs.value_ == 0) throw DomainError("division by zero");
  return ExactInt::from_rep(lhs.value_ / rhs.value_);
}

ExactInt operator%(ExactInt lhs, ExactInt rhs) {
  if (rhs.value_ == 0) throw DomainError("modulo by zero");
  return ExactInt::from_rep(lhs.value_ % rhs.value_);
}

std::ostream& operator<<(std::ostream& os, ExactInt v) { return os << v.to_string(); }

}  // namespace hsg
