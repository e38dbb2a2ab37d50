#include "dedekind/integer.hpp"

#include <cctype>
#include <stdexcept>

namespace dedekind {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  Integer value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string to_string(const Integer& value) { return value.str(); }

Integer floor_mod(const Integer& a, const Integer& n) {
  Integer r = a % n;
  if (r < 0) r += n;
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  Integer r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Integer ipow(const Integer& base, std::uint64_t exponent) {
  Integer result = 1;
  Integer square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

}  // namespace dedekind
