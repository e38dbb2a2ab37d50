#include "dedekind/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

#include "dedekind/counting.hpp"
#include "dedekind/dedekind_sum.hpp"
#include "dedekind/errors.hpp"
#include "dedekind/factorization.hpp"
#include "dedekind/number_theory.hpp"
#include "dedekind/scan.hpp"

namespace dedekind {
namespace {

// Integers w in [first, first + span) with w = residue (mod modulus).
Integer admitted_count(const Integer& first, const Integer& span, const Integer& modulus,
                       const Integer& residue) {
  const Integer last = first + span - 1;
  return floor_div(last - residue, modulus) - floor_div(first - 1 - residue, modulus);
}

SolutionFamily make_family(Integer offset, std::uint64_t scale_exp, Integer base,
                           std::uint64_t step_exp, Integer first, Integer span,
                           Integer filter_modulus = 1, Integer filter_residue = 0) {
  SolutionFamily f;
  f.offset = std::move(offset);
  f.scale_exp = scale_exp;
  f.param_base = std::move(base);
  f.param_step_exp = step_exp;
  f.param_first = std::move(first);
  f.param_span = std::move(span);
  f.filter_modulus = std::move(filter_modulus);
  f.filter_residue = std::move(filter_residue);
  f.count = admitted_count(f.param_first, f.param_span, f.filter_modulus, f.filter_residue);
  return f;
}

// First integer strictly above numerator / p^e; the parameter windows are
// half-open intervals (L, L + span] with L of this form.
Integer first_above(const Integer& numerator, const Integer& p, std::uint64_t e) {
  return floor_div(numerator, ipow(p, e)) + 1;
}

// p odd, m = eps + p^j r with 1 <= j < k/2.
void odd_shallow_families(const Integer& p, std::uint32_t k, const Integer& eps, std::uint64_t j,
                          const Integer& r, std::vector<SolutionFamily>& out) {
  const std::uint64_t e = k - 2 * j;
  const Integer span = ipow(p, j);
  // x - m and x m - 1 both pick up p^j; the first absorbs p^(k-2j).
  out.push_back(make_family(eps, j, r, e, first_above(-r, p, e), span));
  if (3 * j >= k) {
    // Second factor: v_p(r + s) >= k - 2j suffices once k - 2j <= j.
    out.push_back(make_family(eps, j, -r, e, first_above(r, p, e), span));
  } else {
    // s = -r + p^j u with u = rho (mod p^(k-3j)), rho = r^2 / (eps + p^j r).
    const Integer pj = ipow(p, j);
    const Integer inner_modulus = ipow(p, k - 3 * j);
    const Integer m = eps + pj * r;
    const Integer rho = floor_mod(r * r * mod_inverse(m, inner_modulus), inner_modulus);
    const Integer base = -r + pj * rho;
    out.push_back(make_family(eps, j, base, e, first_above(r - pj * rho, p, e), span));
  }
}

// p = 2, m = eps + 2^j r with 2 <= j < k/2.
void two_shallow_families(std::uint32_t k, const Integer& eps, std::uint64_t j, const Integer& r,
                          std::vector<SolutionFamily>& out) {
  const Integer two = 2;
  const std::uint64_t e = k - 2 * j - 1;
  const Integer span = ipow(two, j + 1);

  // s = r + 2^t u with t >= 2: s = r + 2^(k-2j-1) v, and t >= 2 forces
  // 4 | v when k - 2j - 1 = 0, 2 | v when it is 1.
  const Integer filter = (e == 0) ? 4 : (e == 1) ? 2 : 1;
  out.push_back(make_family(eps, j, r, e, first_above(-r, two, e), span, filter, 0));

  // t = 1: s = r + 2u with u odd.
  if (2 * j + 2 < k) {
    const std::uint64_t e2 = k - 2 * j - 2;
    const Integer inner_modulus = ipow(two, e2);
    const Integer m = eps + ipow(two, j) * r;
    const Integer rhs = -(eps * r + ipow(two, j - 1) * r * r);
    const Integer rho = floor_mod(rhs * mod_inverse(m, inner_modulus), inner_modulus);
    out.push_back(make_family(eps, j, r + 2 * rho, e, first_above(-r - 2 * rho, two, e), span));
  } else {
    // Valuation condition holds automatically; only the range and parity
    // of u remain: -r/2 < u <= -r/2 + 2^(k-j-1), u odd.
    out.push_back(make_family(eps, j, r, 1, first_above(-r, two, 1), ipow(two, k - j - 1), 2, 1));
  }
}

}  // namespace

std::vector<Integer> SolutionFamily::expand(const Integer& p, std::uint32_t k) const {
  const Integer modulus = ipow(p, k);
  const Integer scale = ipow(p, scale_exp);
  const Integer step = ipow(p, param_step_exp);
  std::vector<Integer> out;
  const Integer end = param_first + param_span;
  for (Integer w = param_first; w < end; ++w) {
    if (floor_mod(w - filter_residue, filter_modulus) != 0) continue;
    Integer x = floor_mod(offset + scale * (param_base + step * w), modulus);
    out.push_back(x == 0 ? modulus : std::move(x));
  }
  return out;
}

bool ResidueSet::contains(const Integer& x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

bool check_pair(const Integer& x, const Integer& m, const Integer& n) {
  require_positive(n, "check_pair");
  require_coprime(m, n, "check_pair");
  require_coprime(x, n, "check_pair");
  return floor_mod((x - m) * (x * m - 1), n) == 0;
}

bool check_pair_via_sums(const Integer& x, const Integer& m, const Integer& n) {
  require_positive(n, "check_pair_via_sums");
  require_coprime(m, n, "check_pair_via_sums");
  require_coprime(x, n, "check_pair_via_sums");
  return (dedekind_value(x, n).S - dedekind_value(m, n).S).is_integer();
}

std::vector<SolutionFamily> solution_families(const Integer& m, const Integer& p,
                                              std::uint32_t k) {
  const EpsDecomposition d = eps_decompose(m, p, k);
  const LocalBranch branch = classify(d, p, k);
  const Integer modulus = ipow(p, k);
  std::vector<SolutionFamily> out;

  switch (branch) {
    case LocalBranch::odd_not_unit: {
      // x = m or x m = 1 mod p^k, never both.
      const Integer rep = floor_mod(m, modulus);
      out.push_back(make_family(0, 0, rep, 0, 0, 1));
      out.push_back(make_family(0, 0, mod_inverse(rep, modulus), 0, 0, 1));
      break;
    }
    case LocalBranch::odd_deep:
    case LocalBranch::two_deep: {
      // Exactly the x = eps (mod p^ceil(k/2)).
      const Integer eps = to_integer(*d.epsilon);
      const std::uint64_t half_up = (k + 1) / 2;
      out.push_back(make_family(eps, half_up, 0, 0, eps == 1 ? 0 : 1, ipow(p, k / 2)));
      break;
    }
    case LocalBranch::odd_shallow:
      odd_shallow_families(p, k, to_integer(*d.epsilon), d.j.value(), d.r, out);
      break;
    case LocalBranch::two_shallow:
    case LocalBranch::two_half_minus_one:
    case LocalBranch::two_half_floor:
      two_shallow_families(k, to_integer(*d.epsilon), d.j.value(), d.r, out);
      break;
  }
  return out;
}

ResidueSet enumerate_prime_power(const Integer& m, const Integer& p, std::uint32_t k) {
  const Integer modulus = ipow(p, k);
  ResidueSet out{modulus, {}};
  for (const SolutionFamily& f : solution_families(m, p, k)) {
    std::vector<Integer> xs = f.expand(p, k);
    if (xs.size() != f.count) throw std::logic_error("enumerate_prime_power: family size mismatch");
    out.members.insert(out.members.end(), std::make_move_iterator(xs.begin()),
                       std::make_move_iterator(xs.end()));
  }
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  if (out.members.size() != count_prime_power(m, p, k)) {
    throw std::logic_error("enumerate_prime_power: " + std::to_string(out.members.size()) +
                           " residues for m = " + to_string(m) + " mod " + to_string(p) + "^" +
                           std::to_string(k) + ", closed form disagrees");
  }
  return out;
}

ResidueSet enumerate_solutions(const Integer& m, const Integer& n) {
  require_positive(n, "enumerate");
  require_coprime(m, n, "enumerate");
  const Factorization fac = factorize(n);

  std::vector<Integer> moduli;
  std::vector<ResidueSet> locals;
  for (const PrimePower& f : fac.factors) {
    moduli.push_back(f.value());
    locals.push_back(enumerate_prime_power(m, f.p, f.k));
  }
  const CrtLift lift(std::move(moduli));

  // Cartesian product, accumulated one prime power at a time as partial
  // sums of residue * idempotent.
  std::vector<Integer> partial{Integer(0)};
  for (std::size_t i = 0; i < locals.size(); ++i) {
    std::vector<Integer> next;
    next.reserve(partial.size() * locals[i].size());
    for (const Integer& acc : partial) {
      for (const Integer& x : locals[i].members) next.push_back(acc + x * lift.idempotent(i));
    }
    partial = std::move(next);
  }

  ResidueSet out{n, {}};
  out.members.reserve(partial.size());
  for (Integer& v : partial) {
    Integer x = floor_mod(v, n);
    out.members.push_back(x == 0 ? n : std::move(x));
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

ResidueSet enumerate_solutions_bruteforce(const Integer& m, const Integer& n) {
  require_positive(n, "enumerate_bruteforce");
  require_coprime(m, n, "enumerate_bruteforce");
  ResidueSet out{n, {}};
  if (n <= scan::kNativeLimit) {
    const auto mm = static_cast<std::uint64_t>(floor_mod(m, n));
    scan::for_each_solution(mm, static_cast<std::uint64_t>(n),
                            [&out](std::uint64_t x) { out.members.emplace_back(x); });
  } else {
    scan::for_each_solution(m, n, [&out](const Integer& x) { out.members.push_back(x); });
  }
  return out;
}

ClassPartition fractional_classes(const Integer& n, ClassCheck check) {
  require_positive(n, "classes");
  if (n > scan::kNativeLimit) {
    throw std::invalid_argument("classes: n = " + to_string(n) + " is too large to partition");
  }
  const auto size = static_cast<std::uint64_t>(n);
  std::vector<bool> assigned(size + 1, false);
  ClassPartition out{n, {}};
  for (std::uint64_t x = 1; x <= size; ++x) {
    if (assigned[x] || std::gcd(x, size) != 1) continue;
    ResidueSet members = enumerate_solutions(Integer(x), n);
    Rational q = dedekind_value(Integer(x), n).q;
    for (const Integer& y : members.members) {
      assigned[static_cast<std::uint64_t>(y)] = true;
      if (check == ClassCheck::members && dedekind_value(y, n).q != q) {
        throw std::logic_error("classes: member " + to_string(y) + " of the class of " +
                               std::to_string(x) + " mod " + to_string(n) +
                               " has a different fractional part");
      }
    }
    out.classes.push_back(FractionalClass{std::move(q), std::move(members)});
  }
  return out;
}

}  // namespace dedekind
