#include "dedekind/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace dedekind {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

// Operands within +-(2^63 - 1) take the machine-word paths below; their
// cross products fit comfortably in 128 bits.
bool small(const Integer& v, std::int64_t& out) {
  const auto& limbs = v.backend();
  if (limbs.size() != 1) return false;
  const auto low = static_cast<std::uint64_t>(limbs.limbs()[0]);
  if (low > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) return false;
  out = limbs.sign() ? -static_cast<std::int64_t>(low) : static_cast<std::int64_t>(low);
  return true;
}

std::uint64_t magnitude(std::int64_t v) {
  return v < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

Integer from_i128(i128 v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Integer(static_cast<std::int64_t>(v));
  }
  const bool negative = v < 0;
  const u128 mag = negative ? u128{0} - static_cast<u128>(v) : static_cast<u128>(v);
  Integer out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return negative ? Integer(-out) : out;
}

}  // namespace

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  std::int64_t n = 0;
  std::int64_t d = 0;
  if (small(num_, n) && small(den_, d)) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const auto g = static_cast<std::int64_t>(std::gcd(magnitude(n), magnitude(d)));
    num_ = n / g;
    den_ = d / g;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Integer Rational::floor() const { return floor_div(num_, den_); }

// Sums and products reduce through the gcd of the smaller cross terms, so the
// result comes out reduced without a full gcd over the product.
Rational& Rational::operator+=(const Rational& rhs) {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;
  if (small(num_, a) && small(den_, b) && small(rhs.num_, c) && small(rhs.den_, d)) {
    const auto g = static_cast<std::int64_t>(std::gcd(magnitude(b), magnitude(d)));
    const std::int64_t b1 = b / g;
    const std::int64_t d1 = d / g;
    const i128 t = static_cast<i128>(a) * d1 + static_cast<i128>(c) * b1;
    const auto g2 = static_cast<std::int64_t>(
        std::gcd(static_cast<std::uint64_t>((t < 0 ? -t : t) % g), static_cast<std::uint64_t>(g)));
    num_ = from_i128(t / g2);
    den_ = from_i128(static_cast<i128>(b1) * (d / g2));
    return *this;
  }
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    normalize();
    return *this;
  }
  Integer g = gcd(den_, rhs.den_);
  if (g == 1) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    return *this;
  }
  Integer rhs_cofactor = rhs.den_ / g;
  Integer t = num_ * rhs_cofactor + rhs.num_ * (den_ / g);
  Integer g2 = gcd(t, g);
  if (g2 == 1) {
    num_ = std::move(t);
    den_ *= rhs_cofactor;
  } else {
    num_ = t / g2;
    den_ = (den_ / g) * (rhs.den_ / g2);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;
  if (small(num_, a) && small(den_, b) && small(rhs.num_, c) && small(rhs.den_, d)) {
    const auto g1 = static_cast<std::int64_t>(std::gcd(magnitude(a), magnitude(d)));
    const auto g2 = static_cast<std::int64_t>(std::gcd(magnitude(c), magnitude(b)));
    if (a == 0 || c == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    num_ = from_i128(static_cast<i128>(a / g1) * (c / g2));
    den_ = from_i128(static_cast<i128>(b / g2) * (d / g1));
    return *this;
  }
  Integer g1 = gcd(num_, rhs.den_);
  Integer g2 = gcd(rhs.num_, den_);
  num_ = (num_ / g1) * (rhs.num_ / g2);
  den_ = (den_ / g2) * (rhs.den_ / g1);
  if (num_ == 0) den_ = 1;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("division by zero rational");
  return *this *= Rational(rhs.den_, rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  Integer a = lhs.num_ * rhs.den_;
  Integer b = rhs.num_ * lhs.den_;
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return dedekind::to_string(num_);
  return dedekind::to_string(num_) + "/" + dedekind::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace dedekind
