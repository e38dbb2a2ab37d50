#include <doctest.h>

#include "dedekind/factorization.hpp"
#include "oracle.hpp"

using dedekind::Factorization;
using dedekind::Integer;
using dedekind::PrimePower;

namespace {

void check_canonical(const Factorization& f) {
  REQUIRE(f.recompose() == f.n);
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const PrimePower& pp = f.factors[i];
    REQUIRE(pp.k >= 1);
    REQUIRE(dedekind::is_prime(pp.p));
    REQUIRE(f.n % (pp.value() * pp.p) != 0);
    if (i > 0) REQUIRE(f.factors[i - 1].p < pp.p);
  }
}

}  // namespace

TEST_CASE("is_prime examples") {
  CHECK(dedekind::is_prime(2));
  CHECK_FALSE(dedekind::is_prime(1728));
  CHECK_FALSE(dedekind::is_prime(1729));
  CHECK_FALSE(dedekind::is_prime(0));
  CHECK_FALSE(dedekind::is_prime(1));
  CHECK_FALSE(dedekind::is_prime(-7));
}

TEST_CASE("is_prime agrees with trial division below 20000") {
  for (std::int64_t n = 0; n < 20000; ++n) REQUIRE(dedekind::is_prime(n) == oracle::is_prime_trial(n));
}

TEST_CASE("is_prime on strong pseudoprimes and large values") {
  CHECK_FALSE(dedekind::is_prime(3215031751));            // spsp to bases 2, 3, 5, 7
  CHECK_FALSE(dedekind::is_prime(Integer("3825123056546413051")));  // spsp to bases 2..23
  CHECK(dedekind::is_prime(Integer("18446744073709551557")));      // largest prime < 2^64
  CHECK(dedekind::is_prime((Integer(1) << 61) - 1));
  CHECK(dedekind::is_prime((Integer(1) << 89) - 1));
  CHECK(dedekind::is_prime((Integer(1) << 127) - 1));
  CHECK_FALSE(dedekind::is_prime(((Integer(1) << 61) - 1) * ((Integer(1) << 31) - 1)));
  CHECK_FALSE(dedekind::is_prime((Integer(1) << 67) - 1));  // 193707721 * 761838257287
}

TEST_CASE("factorize examples") {
  const Factorization f = dedekind::factorize(1728);
  CHECK(f.factors == std::vector<PrimePower>{{2, 6}, {3, 3}});
  CHECK(dedekind::factorize(1).factors.empty());
  CHECK(dedekind::factorize(97).factors == std::vector<PrimePower>{{97, 1}});
  CHECK_THROWS_AS(dedekind::factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(dedekind::factorize(-12), std::invalid_argument);
}

TEST_CASE("factorize round trip for n <= 10^5") {
  for (std::int64_t n = 1; n <= 100000; ++n) check_canonical(dedekind::factorize(n));
}

TEST_CASE("factorize round trip for random 64-bit n") {
  for (int i = 0; i < 100; ++i) {
    const Integer n = Integer(oracle::rng()() | 1U) + oracle::uniform(0, 1);
    check_canonical(dedekind::factorize(n));
  }
}

TEST_CASE("factorize semiprimes beyond the trial division bound") {
  const Integer p = 1'000'003;
  const Integer q = 999'999'937;
  check_canonical(dedekind::factorize(p * q));
  CHECK(dedekind::factorize(p * q).factors == std::vector<PrimePower>{{p, 1}, {q, 1}});
  CHECK(dedekind::factorize(q * q * p).factors == std::vector<PrimePower>{{p, 1}, {q, 2}});

  // (2^67 - 1) = 193707721 * 761838257287 is above 64 bits.
  const Factorization m67 = dedekind::factorize((Integer(1) << 67) - 1);
  CHECK(m67.factors == std::vector<PrimePower>{{193707721, 1}, {Integer("761838257287"), 1}});

  const Integer big = ((Integer(1) << 61) - 1) * 1'000'000'007 * 1728;
  const Factorization f = dedekind::factorize(big);
  check_canonical(f);
  CHECK(f.factors.size() == 4);
}
