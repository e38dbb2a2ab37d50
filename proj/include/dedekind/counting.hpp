#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dedekind/factorization.hpp"
#include "dedekind/integer.hpp"
#include "dedekind/number_theory.hpp"

namespace dedekind {

enum class Sign : int { minus = -1, plus = 1 };

inline Integer to_integer(Sign s) { return Integer(static_cast<int>(s)); }

/// m = epsilon + p^j * r with p not dividing r, for m taken in [1, p^k].
///
/// epsilon is empty when p is odd and m is not +-1 mod p. When m equals
/// epsilon exactly, j is infinite and r is 0. For p = 2 the sign is fixed by
/// m = epsilon (mod 4), so j >= 2 always.
struct EpsDecomposition {
  std::optional<Sign> epsilon;
  Valuation j{0};
  Integer r{0};

  bool near_unit() const noexcept { return epsilon.has_value(); }
};

/// Throws std::invalid_argument when p divides m (or k == 0).
EpsDecomposition eps_decompose(const Integer& m, const Integer& p, std::uint32_t k);

/// Which closed-form case determines L(m, p^k).
enum class LocalBranch {
  odd_not_unit,        // p odd, m != +-1 mod p: 2
  odd_deep,            // p odd, j >= ceil(k/2): p^floor(k/2)
  odd_shallow,         // p odd, 1 <= j < k/2: 2 p^j
  two_deep,            // p = 2, j >= ceil(k/2): 2^floor(k/2)
  two_shallow,         // p = 2, 2 <= j < k/2 - 1: 2^(j+2)
  two_half_minus_one,  // p = 2, j = k/2 - 1 >= 2: 2^(j+1)
  two_half_floor,      // p = 2, j = (k-1)/2 >= 2: 2^j
};

std::string_view to_string(LocalBranch branch);

/// Guard comparisons are made on 2j against k, k-1, k-2; throws
/// std::logic_error if no guard fires.
LocalBranch classify(const EpsDecomposition& d, const Integer& p, std::uint32_t k);

/// L(m, p^k) from the closed forms. p must be prime and not divide m.
Integer count_prime_power(const Integer& m, const Integer& p, std::uint32_t k);

struct LocalCount {
  PrimePower factor;
  Integer count;
};

/// L(m, n) = prod L(m, p^k) over the prime powers of n.
struct CountBreakdown {
  Integer m;
  Integer n;
  std::vector<LocalCount> locals;
  Integer total{1};
};

/// Throws NotCoprimeError if gcd(m, n) != 1.
CountBreakdown count_solutions(const Integer& m, const Integer& n);

/// Same count from a scan of x = 1..n; O(n).
Integer count_solutions_bruteforce(const Integer& m, const Integer& n);

}  // namespace dedekind
