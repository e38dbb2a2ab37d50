#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "dedekind/integer.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

/// Returns b in [1, n] with a*b = 1 (mod n); n = 1 gives 1.
/// Throws NotInvertibleError (naming gcd(a, n)) if a is not a unit mod n.
Integer mod_inverse(const Integer& a, const Integer& n);

/// p-adic exponent v_p(z). Zero is divisible by every power of p, so v_p(0)
/// is the infinite valuation, which compares greater than every finite one.
class Valuation {
 public:
  constexpr explicit Valuation(std::uint64_t exponent) noexcept : exponent_(exponent) {}

  static constexpr Valuation infinite() noexcept {
    return Valuation(std::numeric_limits<std::uint64_t>::max());
  }

  constexpr bool is_infinite() const noexcept {
    return exponent_ == std::numeric_limits<std::uint64_t>::max();
  }

  /// Finite exponent; throws std::logic_error on the infinite valuation.
  std::uint64_t value() const;

  /// v >= bound, with the infinite valuation above every bound.
  constexpr bool at_least(std::uint64_t bound) const noexcept { return exponent_ >= bound; }

  friend constexpr auto operator<=>(const Valuation&, const Valuation&) = default;

 private:
  std::uint64_t exponent_;
};

/// Throws std::invalid_argument when p < 2.
Valuation p_valuation(const Integer& z, const Integer& p);

/// x = residue (mod modulus).
struct Congruence {
  Integer residue;
  Integer modulus;

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

/// Precomputed CRT idempotents for a fixed set of pairwise coprime moduli.
/// lift() maps a residue tuple to the unique value in [0, prod moduli).
class CrtLift {
 public:
  /// Throws NotCoprimeError naming the first offending pair, and
  /// std::invalid_argument for moduli below 1.
  explicit CrtLift(std::vector<Integer> moduli);

  const Integer& modulus() const noexcept { return modulus_; }
  const std::vector<Integer>& moduli() const noexcept { return moduli_; }

  /// Unit vector e_i: 1 mod moduli[i], 0 mod the rest.
  const Integer& idempotent(std::size_t i) const { return idempotents_.at(i); }

  Integer lift(std::span<const Integer> residues) const;

 private:
  std::vector<Integer> moduli_;
  std::vector<Integer> idempotents_;
  Integer modulus_{1};
};

/// Solves the system; an empty system yields 0 mod 1. Residues must satisfy
/// 0 <= residue < modulus, and moduli must be pairwise coprime.
Congruence crt_combine(std::span<const Congruence> system);

/// q - floor(q), in [0, 1).
Rational fractional_part(const Rational& q);

}  // namespace dedekind
