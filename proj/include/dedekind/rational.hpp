#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "dedekind/integer.hpp"

namespace dedekind {

/// Exact fraction num/den. Always stored reduced with den >= 1, so two equal
/// values have identical representations and zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(const Integer& value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long long value) : num_(value) {}        // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error when den is zero.
  Rational(Integer num, Integer den);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  Integer floor() const;
  int sign() const noexcept { return num_.sign(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(Rational value) {
    value.num_ = -value.num_;
    return value;
  }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// "num/den", or just "num" when den is 1.
  std::string to_string() const;

  /// Inverse of to_string; also accepts unreduced input such as "6/4".
  static Rational parse(std::string_view text);

 private:
  void normalize();

  Integer num_{0};
  Integer den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace dedekind
