#include "dedekind/dedekind_sum.hpp"

#include "dedekind/errors.hpp"
#include "dedekind/number_theory.hpp"

namespace dedekind {
namespace {

void check_arguments(const Integer& m, const Integer& n, std::string_view op) {
  require_positive(n, op);
  require_coprime(m, n, op);
}

}  // namespace

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational{};
  // x - floor(x) - 1/2 = (2 (num mod den) - den) / (2 den)
  const Integer& den = x.den();
  return Rational(2 * floor_mod(x.num(), den) - den, 2 * den);
}

Rational dedekind_sum_naive(const Integer& m, const Integer& n) {
  check_arguments(m, n, "dedekind_sum_naive");
  Rational total;
  for (Integer k = 1; k <= n; ++k) {
    total += sawtooth(Rational(k, n)) * sawtooth(Rational(m * k, n));
  }
  return total;
}

Rational dedekind_sum(const Integer& m, const Integer& n) {
  check_arguments(m, n, "dedekind_sum");
  Integer a = floor_mod(m, n);
  Integer b = n;
  // Unrolled recursion: s(a, b) = sum of alternating reciprocity terms.
  // Each level contributes +-(-1/4 + (a^2 + b^2 + 1) / (12ab)); the -1/4
  // parts are tallied separately as a signed count.
  Rational total;
  long long quarter_terms = 0;
  bool positive = true;
  while (a != 0) {
    Rational term(a * a + b * b + 1, 12 * a * b);
    if (positive) {
      total += term;
      --quarter_terms;
    } else {
      total -= term;
      ++quarter_terms;
    }
    Integer next = b % a;
    b = std::move(a);
    a = std::move(next);
    positive = !positive;
  }
  return total + Rational(quarter_terms, 4);
}

DedekindValue dedekind_value(const Integer& m, const Integer& n) {
  Rational s = dedekind_sum(m, n);
  Rational S = s * Rational(12);
  Rational q = fractional_part(S);
  return DedekindValue{std::move(s), std::move(S), std::move(q)};
}

}  // namespace dedekind
