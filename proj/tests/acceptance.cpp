// Exit-gate checks, one PASS/FAIL line per criterion. All comparisons are
// exact; the two performance criteria carry their wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "dedekind/counting.hpp"
#include "dedekind/dedekind_sum.hpp"
#include "dedekind/enumeration.hpp"
#include "dedekind/number_theory.hpp"
#include "dedekind/sweeps.hpp"

using namespace dedekind;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome from_sweep(const sweeps::SweepReport& r) {
  std::string detail = "checked=" + std::to_string(r.checked);
  if (const auto& mm = r.first_mismatch) {
    detail += " first mismatch n=" + std::to_string(mm->n) + " m=" + std::to_string(mm->m) +
              " x=" + std::to_string(mm->x) + ": " + mm->detail;
  }
  return {r.passed(), detail};
}

Outcome golden_example() {
  const CountBreakdown b = count_solutions(7, 1728);
  if (b.total != 48 || b.locals.size() != 2) return {false, "L(7,1728) = " + to_string(b.total)};
  if (b.locals[0].factor != PrimePower{2, 6} || b.locals[0].count != 8 ||
      b.locals[1].factor != PrimePower{3, 3} || b.locals[1].count != 6) {
    return {false, "local counts differ from 2^6 -> 8, 3^3 -> 6"};
  }
  const Rational q = dedekind_value(7, 1728).q;
  if (q != Rational(127, 864)) return {false, "q = " + q.to_string()};

  const ResidueSet members = enumerate_solutions(7, 1728);
  if (members.size() != 48) return {false, "enumerate gave " + std::to_string(members.size())};
  std::set<Integer> offsets;
  for (const Integer& x : members.members) {
    const Rational shift = dedekind_value(x, 1728).S - q;
    if (!shift.is_integer()) return {false, "S(" + to_string(x) + ",1728) not in q + Z"};
    offsets.insert(shift.num());
  }
  const std::set<Integer> expected{0, 3, 8, 11, 16, 24, 31, 56, 59, 248, -1, -5, -8, -9, -21, -32};
  if (offsets != expected) return {false, std::to_string(offsets.size()) + " offsets, set differs"};
  return {true, "L=48 locals 8*6 q=127/864 offsets=16"};
}

Outcome dedekind_dual_path() {
  const auto r = sweeps::parallel::run(sweeps::Check::dedekind_sums, 500);
  return from_sweep(r);
}

Outcome branch_coverage() {
  struct Case {
    std::int64_t m, p;
    unsigned k;
    LocalBranch branch;
  };
  const Case cases[] = {
      {2, 5, 1, LocalBranch::odd_not_unit},  {1, 3, 2, LocalBranch::odd_deep},
      {7, 3, 3, LocalBranch::odd_shallow},   {19, 3, 7, LocalBranch::odd_shallow},
      {1, 2, 3, LocalBranch::two_deep},      {5, 2, 9, LocalBranch::two_shallow},
      {5, 2, 6, LocalBranch::two_half_minus_one}, {5, 2, 5, LocalBranch::two_half_floor},
  };
  std::set<LocalBranch> seen;
  for (const Case& c : cases) {
    const Integer q = ipow(c.p, c.k);
    const auto d = eps_decompose(c.m, c.p, c.k);
    const LocalBranch b = classify(d, c.p, c.k);
    const Integer closed = count_prime_power(c.m, c.p, c.k);
    const Integer scanned = count_solutions_bruteforce(c.m, q);
    const bool sets_match = enumerate_prime_power(c.m, c.p, c.k) ==
                            enumerate_solutions_bruteforce(c.m, q);
    if (b != c.branch || closed != scanned || !sets_match) {
      return {false, "case m=" + std::to_string(c.m) + " p^k=" + std::to_string(c.p) + "^" +
                         std::to_string(c.k) + " branch " + std::string(to_string(b))};
    }
    seen.insert(b);
  }
  // L(1, 2^3) = 2 = 2^floor(3/2); 2^ceil(3/2) = 4 would be wrong.
  if (count_prime_power(1, 2, 3) != 2 || count_solutions_bruteforce(1, 8) != 2) {
    return {false, "L(1, 8) != 2"};
  }
  return {seen.size() == 7, std::to_string(seen.size()) + "/7 branches, L(1,8)=2"};
}

Outcome fast_sum_performance() {
  std::mt19937_64 rng(60);
  const auto start = Clock::now();
  Integer checksum = 0;
  for (int i = 0; i < 10000; ++i) {
    const Integer n = Integer(rng() >> 4) | (Integer(1) << 59);  // 60-bit
    Integer m = Integer(rng()) % n;
    while (gcd(m, n) != 1) ++m;
    const Rational s = dedekind_sum(m, n);
    if (!(s * Rational(Integer(6) * n)).is_integer()) return {false, "6ns not integral"};
    checksum += s.den() % 1000;
  }
  const double elapsed = seconds_since(start);
  char buf[64];
  std::snprintf(buf, sizeof buf, "10000 calls in %.3fs (limit 10s)", elapsed);
  return {elapsed < 10.0, buf};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 golden example n=1728 m=7", golden_example},
      {"2 counting oracle n<=3000",
       [] { return from_sweep(sweeps::parallel::run(sweeps::Check::counting, 3000)); }},
      {"3 congruence iff integer sum difference n<=150",
       [] { return from_sweep(sweeps::parallel::run(sweeps::Check::congruence, 150)); }},
      {"4 enumeration equality n<=2000",
       [] { return from_sweep(sweeps::parallel::run(sweeps::Check::enumeration, 2000)); }},
      {"5 Dedekind sum dual path n<=500", dedekind_dual_path},
      {"6 closed-form branch coverage", branch_coverage},
      {"7 fast sum at 60-bit n", fast_sum_performance},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %-36s %s [%.2fs]\n", o.passed ? "PASS" : "FAIL", name, o.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
    failures += o.passed ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
