#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace hsg {

/// Exact non-negative integer with a 127-bit ceiling.
///
/// Every operation whose true result exceeds 2^127 - 1 (or drops below
/// zero) throws OverflowError; nothing wraps or truncates.
class ExactInt {
public:
  using Rep = unsigned __int128;
  static constexpr Rep kMax = (Rep{1} << 127) - 1;

  constexpr ExactInt() = default;
  constexpr ExactInt(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static ExactInt from_rep(Rep v);
  static ExactInt parse(std::string_view text);

  constexpr Rep rep() const { return value_; }
  bool fits_u64() const { return value_ <= UINT64_MAX; }
  std::uint64_t to_u64() const;
  std::string to_string() const;
  bool is_zero() const { return value_ == 0; }

  friend ExactInt operator+(ExactInt lhs, ExactInt rhs);
  friend ExactInt operator-(ExactInt lhs, ExactInt rhs);
  friend ExactInt operator*(ExactInt lhs, ExactInt rhs);
  friend ExactInt operator/(ExactInt lhs, ExactInt rhs);
  friend ExactInt operator%(ExactInt lhs, ExactInt rhs);

  ExactInt& operator+=(ExactInt rhs) { return *this = *this + rhs; }
  ExactInt& operator*=(ExactInt rhs) { return *this = *this * rhs; }

  constexpr bool operator==(const ExactInt&) const = default;
  constexpr std::strong_ordering operator<=>(const ExactInt& other) const {
    return value_ <=> other.value_;
  }

private:
  Rep value_ = 0;
};

std::ostream& operator<<(std::ostream& os, ExactInt v);

}  // namespace hsg
