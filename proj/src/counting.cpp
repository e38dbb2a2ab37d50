#include "dedekind/counting.hpp"

#include <stdexcept>
#include <string>

#include "dedekind/errors.hpp"
#include "dedekind/scan.hpp"

namespace dedekind {
namespace {

void require_unit_mod_p(const Integer& m, const Integer& p, std::uint32_t k, std::string_view op) {
  if (k == 0) throw std::invalid_argument(std::string(op) + ": exponent must be >= 1");
  if (p < 2) throw std::invalid_argument(std::string(op) + ": p must be prime, got " + to_string(p));
  if (m % p == 0) {
    throw std::invalid_argument(std::string(op) + ": p = " + to_string(p) + " divides m = " +
                                to_string(m));
  }
}

}  // namespace

EpsDecomposition eps_decompose(const Integer& m, const Integer& p, std::uint32_t k) {
  require_unit_mod_p(m, p, k, "eps_decompose");
  const Integer modulus = ipow(p, k);
  Integer rep = floor_mod(m, modulus);
  if (rep == 0) rep = modulus;

  EpsDecomposition d;
  if (p == 2) {
    d.epsilon = (rep % 4 == 3) ? Sign::minus : Sign::plus;
  } else {
    const Integer residue = rep % p;
    if (residue == 1) {
      d.epsilon = Sign::plus;
    } else if (residue == p - 1) {
      d.epsilon = Sign::minus;
    } else {
      return d;
    }
  }
  const Integer offset = rep - to_integer(*d.epsilon);
  d.j = p_valuation(offset, p);
  if (!d.j.is_infinite()) d.r = offset / ipow(p, d.j.value());
  return d;
}

std::string_view to_string(LocalBranch branch) {
  switch (branch) {
    case LocalBranch::odd_not_unit: return "odd_not_unit";
    case LocalBranch::odd_deep: return "odd_deep";
    case LocalBranch::odd_shallow: return "odd_shallow";
    case LocalBranch::two_deep: return "two_deep";
    case LocalBranch::two_shallow: return "two_shallow";
    case LocalBranch::two_half_minus_one: return "two_half_minus_one";
    case LocalBranch::two_half_floor: return "two_half_floor";
  }
  return "unknown";
}

LocalBranch classify(const EpsDecomposition& d, const Integer& p, std::uint32_t k) {
  const bool two = (p == 2);
  if (!d.near_unit()) {
    if (two) throw std::logic_error("classify: p = 2 always has a sign class");
    return LocalBranch::odd_not_unit;
  }
  // j >= ceil(k/2)  <=>  2j >= k; the infinite valuation lands here too.
  if (d.j.is_infinite() || 2 * d.j.value() >= k) {
    return two ? LocalBranch::two_deep : LocalBranch::odd_deep;
  }
  const std::uint64_t twice_j = 2 * d.j.value();
  if (!two) {
    if (d.j.value() >= 1) return LocalBranch::odd_shallow;
  } else if (d.j.value() >= 2) {
    if (twice_j + 2 < k) return LocalBranch::two_shallow;
    if (twice_j + 2 == k) return LocalBranch::two_half_minus_one;
    if (twice_j + 1 == k) return LocalBranch::two_half_floor;
  }
  throw std::logic_error("classify: no branch for p = " + to_string(p) + ", k = " +
                         std::to_string(k) + ", j = " + std::to_string(d.j.value()));
}

Integer count_prime_power(const Integer& m, const Integer& p, std::uint32_t k) {
  const EpsDecomposition d = eps_decompose(m, p, k);
  switch (classify(d, p, k)) {
    case LocalBranch::odd_not_unit:
      return 2;
    case LocalBranch::odd_deep:
    case LocalBranch::two_deep:
      return ipow(p, k / 2);
    case LocalBranch::odd_shallow:
      return 2 * ipow(p, d.j.value());
    case LocalBranch::two_shallow:
      return ipow(Integer(2), d.j.value() + 2);
    case LocalBranch::two_half_minus_one:
      return ipow(Integer(2), d.j.value() + 1);
    case LocalBranch::two_half_floor:
      return ipow(Integer(2), d.j.value());
  }
  throw std::logic_error("count_prime_power: unhandled branch");
}

CountBreakdown count_solutions(const Integer& m, const Integer& n) {
  require_positive(n, "count");
  require_coprime(m, n, "count");
  CountBreakdown out{m, n, {}, 1};
  for (PrimePower& f : factorize(n).factors) {
    Integer local = count_prime_power(m, f.p, f.k);
    out.total *= local;
    out.locals.push_back(LocalCount{std::move(f), std::move(local)});
  }
  return out;
}

Integer count_solutions_bruteforce(const Integer& m, const Integer& n) {
  require_positive(n, "count_bruteforce");
  require_coprime(m, n, "count_bruteforce");
  if (n <= scan::kNativeLimit) {
    const auto nn = static_cast<std::uint64_t>(n);
    const auto mm = static_cast<std::uint64_t>(floor_mod(m, n));
    return Integer(scan::count_solutions(mm, nn));
  }
  Integer total = 0;
  scan::for_each_solution(m, n, [&total](const Integer&) { ++total; });
  return total;
}

}  // namespace dedekind
