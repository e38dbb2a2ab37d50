#pragma once

#include "dedekind/integer.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

/// ((x)): 0 at integers, otherwise x - floor(x) - 1/2.
Rational sawtooth(const Rational& x);

/// s(m, n) straight from the defining sum over k = 1..n, one exact Rational
/// per sawtooth term. O(n); kept as the reference for dedekind_sum().
/// Throws std::invalid_argument for n < 1 and NotCoprimeError if gcd(m, n) != 1.
Rational dedekind_sum_naive(const Integer& m, const Integer& n);

/// s(m, n) by the reciprocity recursion
///   s(m, n) = -1/4 + (m^2 + n^2 + 1) / (12 m n) - s(n mod m, m),
/// starting from m mod n and ending at s(0, 1) = 0. O(log n) steps.
Rational dedekind_sum(const Integer& m, const Integer& n);

/// s, S = 12 s, and the class value q = S - floor(S).
struct DedekindValue {
  Rational s;
  Rational S;
  Rational q;

  friend bool operator==(const DedekindValue&, const DedekindValue&) = default;
};

/// Reduces m modulo n, then evaluates through dedekind_sum().
DedekindValue dedekind_value(const Integer& m, const Integer& n);

}  // namespace dedekind
