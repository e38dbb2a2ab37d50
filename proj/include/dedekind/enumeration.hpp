#pragma once

#include <cstdint>
#include <vector>

#include "dedekind/integer.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

/// One arithmetic family of local solutions mod p^k:
///
///   x = offset + p^scale_exp * (param_base + p^param_step_exp * w)
///
/// for the param_span consecutive integers w starting at param_first, keeping
/// only w = filter_residue (mod filter_modulus). offset is the sign epsilon
/// (+1 or -1), or 0 for the two isolated solutions m and 1/m when m is not
/// +-1 mod p.
struct SolutionFamily {
  Integer offset;
  std::uint64_t scale_exp = 0;
  Integer param_base;
  std::uint64_t param_step_exp = 0;
  Integer param_first;
  Integer param_span{1};
  Integer filter_modulus{1};
  Integer filter_residue{0};
  Integer count{1};  // number of admitted w

  /// Admitted members reduced into [1, p^k], in parameter order.
  std::vector<Integer> expand(const Integer& p, std::uint32_t k) const;
};

/// Ascending members of [1, n].
struct ResidueSet {
  Integer n;
  std::vector<Integer> members;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(const Integer& x) const;
  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;
};

/// n | (x - m)(x m - 1). Throws NotCoprimeError unless x and m are units mod n.
bool check_pair(const Integer& x, const Integer& m, const Integer& n);

/// S(x, n) - S(m, n) is an integer, evaluated with exact Dedekind sums.
bool check_pair_via_sums(const Integer& x, const Integer& m, const Integer& n);

/// The parametrized families covering every solution mod p^k. Their
/// members are pairwise distinct and sum to L(m, p^k).
std::vector<SolutionFamily> solution_families(const Integer& m, const Integer& p, std::uint32_t k);

/// All solutions mod p^k, expanded from solution_families(). Throws
/// std::logic_error if the families disagree with count_prime_power().
ResidueSet enumerate_prime_power(const Integer& m, const Integer& p, std::uint32_t k);

/// All x in [1, n] coprime to n with n | (x - m)(x m - 1), assembled by CRT
/// from the prime-power solution sets.
ResidueSet enumerate_solutions(const Integer& m, const Integer& n);

/// Same set from a literal scan of [1, n].
ResidueSet enumerate_solutions_bruteforce(const Integer& m, const Integer& n);

struct FractionalClass {
  Rational q;
  ResidueSet members;
};

/// Units of Z/n grouped by the fractional part of S(x, n), ordered by
/// smallest member.
struct ClassPartition {
  Integer n;
  std::vector<FractionalClass> classes;
};

enum class ClassCheck {
  none,     // q from the smallest member only
  members,  // recompute q for every member and throw std::logic_error on mismatch
};

ClassPartition fractional_classes(const Integer& n, ClassCheck check = ClassCheck::none);

}  // namespace dedekind
