#include "dedekind/errors.hpp"

namespace dedekind {

NotInvertibleError::NotInvertibleError(Integer a, Integer n, Integer divisor)
    : NotCoprimeError(a, n, divisor,
                      "not invertible: " + to_string(a) + " mod " + to_string(n) +
                          " (common divisor " + to_string(divisor) + ")") {}

void require_coprime(const Integer& a, const Integer& n, std::string_view what) {
  Integer g = gcd(a, n);
  if (g != 1) {
    throw NotCoprimeError(a, n, g,
                          std::string(what) + ": gcd(" + to_string(a) + ", " + to_string(n) +
                              ") = " + to_string(g));
  }
}

void require_positive(const Integer& n, std::string_view what) {
  if (n < 1) {
    throw std::invalid_argument(std::string(what) + ": modulus must be positive, got " +
                                to_string(n));
  }
}

}  // namespace dedekind
