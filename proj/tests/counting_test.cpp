#include <doctest.h>

#include <set>

#include "dedekind/counting.hpp"
#include "dedekind/errors.hpp"
#include "dedekind/scan.hpp"
#include "oracle.hpp"

using dedekind::Integer;
using dedekind::LocalBranch;
using dedekind::Sign;
using dedekind::Valuation;

namespace {

std::int64_t brute(std::int64_t m, std::int64_t n) {
  return static_cast<std::int64_t>(oracle::solutions(m, n).size());
}

std::int64_t pow_i(std::int64_t p, unsigned k) {
  std::int64_t v = 1;
  while (k-- > 0) v *= p;
  return v;
}

}  // namespace

TEST_CASE("eps_decompose examples") {
  const auto a = dedekind::eps_decompose(7, 3, 3);
  CHECK(a.epsilon == Sign::plus);
  CHECK(a.j == Valuation(1));
  CHECK(a.r == 2);

  const auto b = dedekind::eps_decompose(7, 2, 6);
  CHECK(b.epsilon == Sign::minus);
  CHECK(b.j == Valuation(3));
  CHECK(b.r == 1);

  const auto c = dedekind::eps_decompose(2, 5, 1);
  CHECK_FALSE(c.near_unit());

  const auto d = dedekind::eps_decompose(1, 2, 1);
  CHECK(d.epsilon == Sign::plus);
  CHECK(d.j.is_infinite());

  // m is reduced into [1, p^k] first: 26 = -1 mod 27 exactly.
  const auto e = dedekind::eps_decompose(26 + 27, 3, 3);
  CHECK(e.epsilon == Sign::minus);
  CHECK(e.j == Valuation(3));
  CHECK(e.r == 1);

  CHECK_THROWS_AS(dedekind::eps_decompose(10, 5, 2), std::invalid_argument);
}

TEST_CASE("eps_decompose reconstructs m and keeps j >= 2 at p = 2") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (unsigned k = 1; k <= 6; ++k) {
      const std::int64_t q = pow_i(p, k);
      for (std::int64_t m = 1; m <= q; ++m) {
        if (m % p == 0) continue;
        const auto d = dedekind::eps_decompose(m, p, k);
        if (!d.near_unit()) {
          REQUIRE(p != 2);
          REQUIRE(m % p != 1);
          REQUIRE(m % p != p - 1);
          continue;
        }
        const std::int64_t eps = static_cast<int>(*d.epsilon);
        if (d.j.is_infinite()) {
          REQUIRE(m == eps);
          continue;
        }
        REQUIRE(d.r % p != 0);
        REQUIRE(Integer(eps) + dedekind::ipow(p, d.j.value()) * d.r == m);
        if (p == 2) REQUIRE(d.j.value() >= 2);
      }
    }
  }
}

TEST_CASE("count_prime_power examples") {
  CHECK(dedekind::count_prime_power(7, 2, 6) == 8);
  CHECK(dedekind::count_prime_power(7, 3, 3) == 6);
  CHECK(dedekind::count_prime_power(2, 5, 1) == 2);
  CHECK(dedekind::count_prime_power(1, 3, 2) == 3);
  CHECK(dedekind::count_prime_power(1, 2, 3) == 2);
  CHECK_THROWS_AS(dedekind::count_prime_power(9, 3, 2), std::invalid_argument);
}

// One representative per closed-form case, each checked against the scan.
TEST_CASE("every branch of the closed forms is hit and matches brute force") {
  struct Case {
    std::int64_t m, p;
    unsigned k;
    LocalBranch branch;
    std::int64_t expected;
  };
  const Case cases[] = {
      {2, 5, 1, LocalBranch::odd_not_unit, 2},
      {1, 3, 2, LocalBranch::odd_deep, 3},
      {7, 3, 3, LocalBranch::odd_shallow, 6},     // 3j >= k
      {19, 3, 7, LocalBranch::odd_shallow, 18},   // 3j < k
      {1, 2, 3, LocalBranch::two_deep, 2},        // 2^floor(3/2), not 2^ceil(3/2)
      {5, 2, 9, LocalBranch::two_shallow, 16},    // j = 2 < 9/2 - 1
      {5, 2, 6, LocalBranch::two_half_minus_one, 8},
      {5, 2, 5, LocalBranch::two_half_floor, 4},
  };
  std::set<LocalBranch> seen;
  for (const Case& c : cases) {
    CAPTURE(c.m);
    CAPTURE(c.p);
    CAPTURE(c.k);
    const auto d = dedekind::eps_decompose(c.m, c.p, c.k);
    CHECK(dedekind::classify(d, c.p, c.k) == c.branch);
    CHECK(dedekind::count_prime_power(c.m, c.p, c.k) == c.expected);
    CHECK(brute(c.m, pow_i(c.p, c.k)) == c.expected);
    seen.insert(c.branch);
  }
  CHECK(seen.size() == 7);
}

TEST_CASE("the deep case at p = 2 uses floor(k/2)") {
  // x = 1 and x = 5 are the only solutions mod 8; 2^ceil(3/2) = 4 would be wrong.
  CHECK(oracle::solutions(1, 8) == std::vector<std::int64_t>{1, 5});
  for (unsigned k = 1; k <= 14; k += 2) {
    CHECK(dedekind::count_prime_power(1, 2, k) == pow_i(2, k / 2));
    CHECK(brute(1, pow_i(2, k)) == pow_i(2, k / 2));
  }
}

TEST_CASE("exactly one branch fires for p <= 50, k <= 12") {
  for (std::int64_t p = 2; p <= 50; ++p) {
    if (!oracle::is_prime_trial(p)) continue;
    for (unsigned k = 1; k <= 12; ++k) {
      const Integer q = dedekind::ipow(p, k);
      // All residues when small, otherwise a structured plus random sample.
      std::vector<Integer> ms;
      if (q <= 5000) {
        for (Integer m = 1; m <= q; ++m) ms.push_back(m);
      } else {
        for (unsigned j = 1; j <= k; ++j) {
          const Integer pj = dedekind::ipow(p, j);
          for (std::int64_t r : {1, 2, 3, 4}) {
            ms.push_back(1 + pj * r);
            ms.push_back(-1 + pj * r);
          }
        }
        for (int i = 0; i < 200; ++i) ms.push_back(oracle::uniform(1, 1'000'000'000));
      }
      for (const Integer& m : ms) {
        if (m % p == 0) continue;
        const auto d = dedekind::eps_decompose(m, p, k);
        REQUIRE_NOTHROW(dedekind::classify(d, p, k));
        REQUIRE(dedekind::count_prime_power(m, p, k) >= 1);
      }
    }
  }
}

TEST_CASE("count examples") {
  const auto b = dedekind::count_solutions(7, 1728);
  REQUIRE(b.locals.size() == 2);
  CHECK(b.locals[0].factor == dedekind::PrimePower{2, 6});
  CHECK(b.locals[0].count == 8);
  CHECK(b.locals[1].factor == dedekind::PrimePower{3, 3});
  CHECK(b.locals[1].count == 6);
  CHECK(b.total == 48);

  const auto one = dedekind::count_solutions(1, 1);
  CHECK(one.locals.empty());
  CHECK(one.total == 1);

  CHECK(dedekind::count_solutions(3, 10).total == brute(3, 10));
  CHECK_THROWS_AS(dedekind::count_solutions(4, 6), dedekind::NotCoprimeError);
  CHECK_THROWS_AS(dedekind::count_solutions(1, 0), std::invalid_argument);
}

TEST_CASE("count_bruteforce examples") {
  CHECK(dedekind::count_solutions_bruteforce(7, 1728) == 48);
  CHECK(dedekind::count_solutions_bruteforce(1, 2) == 1);
  CHECK(dedekind::count_solutions_bruteforce(12345, 1) == 1);
  CHECK(dedekind::count_solutions_bruteforce(-5, 1) == 1);
  CHECK_THROWS_AS(dedekind::count_solutions_bruteforce(2, 4), dedekind::NotCoprimeError);
}

TEST_CASE("count matches the test oracle for n <= 400") {
  for (std::int64_t n = 1; n <= 400; ++n) {
    for (std::int64_t m = 1; m <= n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      REQUIRE(dedekind::count_solutions(m, n).total == brute(m, n));
      REQUIRE(dedekind::count_solutions_bruteforce(m, n) == brute(m, n));
    }
  }
}

TEST_CASE("machine-word and Integer scans agree") {
  for (std::int64_t n = 1; n <= 200; ++n) {
    for (std::int64_t m = 1; m <= n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      std::vector<std::int64_t> wide;
      dedekind::scan::for_each_solution(Integer(m), Integer(n), [&wide](const Integer& x) {
        wide.push_back(static_cast<std::int64_t>(x));
      });
      std::vector<std::int64_t> narrow;
      for (std::uint64_t x : dedekind::scan::solutions(m, n)) narrow.push_back(static_cast<std::int64_t>(x));
      REQUIRE(wide == narrow);
      REQUIRE(narrow == oracle::solutions(m, n));
    }
  }
  // Moduli past 2^16 take the plain remainder path.
  const std::uint64_t n = 65537ULL * 3;
  CHECK(dedekind::scan::count_solutions(5, n) ==
        static_cast<std::uint64_t>(oracle::solutions(5, static_cast<std::int64_t>(n)).size()));
}

TEST_CASE("count is multiplicative over coprime moduli <= 100") {
  for (int i = 0; i < 3000; ++i) {
    const std::int64_t n1 = oracle::uniform(1, 100);
    const std::int64_t n2 = oracle::uniform(1, 100);
    if (std::gcd(n1, n2) != 1) continue;
    const std::int64_t m = oracle::unit(n1 * n2);
    REQUIRE(dedekind::count_solutions(m, n1 * n2).total ==
            dedekind::count_solutions(m, n1).total * dedekind::count_solutions(m, n2).total);
  }
}

TEST_CASE("count is invariant under inversion and negation of m, n <= 500") {
  for (std::int64_t n = 1; n <= 500; ++n) {
    for (std::int64_t m = 1; m <= n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      const Integer total = dedekind::count_solutions(m, n).total;
      REQUIRE(dedekind::count_solutions(dedekind::mod_inverse(m, n), n).total == total);
      REQUIRE(dedekind::count_solutions(n - m, n).total == total);
      REQUIRE(total >= 1);
      const bool self_inverse = (m * m - 1) % n == 0;
      if (!self_inverse) REQUIRE(total >= 2);
    }
  }
}
