#include "dedekind/number_theory.hpp"

#include <stdexcept>
#include <string>

#include "dedekind/errors.hpp"

namespace dedekind {

Integer mod_inverse(const Integer& a, const Integer& n) {
  require_positive(n, "mod_inverse");
  // Extended Euclid on (a mod n, n), tracking only the coefficient of a.
  Integer old_r = floor_mod(a, n);
  Integer r = n;
  Integer old_s = 1;
  Integer s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) {
    if (n == 1) return 1;
    throw NotInvertibleError(a, n, old_r);
  }
  Integer b = floor_mod(old_s, n);
  return b == 0 ? n : b;
}

std::uint64_t Valuation::value() const {
  if (is_infinite()) throw std::logic_error("infinite valuation has no finite value");
  return exponent_;
}

Valuation p_valuation(const Integer& z, const Integer& p) {
  if (p < 2) throw std::invalid_argument("p_valuation: base must be >= 2, got " + to_string(p));
  if (z == 0) return Valuation::infinite();
  Integer rest = abs(z);
  if (p == 2) return Valuation(boost::multiprecision::lsb(rest));
  std::uint64_t v = 0;
  Integer q;
  Integer r;
  for (;;) {
    boost::multiprecision::divide_qr(rest, p, q, r);
    if (r != 0) break;
    rest.swap(q);
    ++v;
  }
  return Valuation(v);
}

CrtLift::CrtLift(std::vector<Integer> moduli) : moduli_(std::move(moduli)) {
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    require_positive(moduli_[i], "crt");
    for (std::size_t j = 0; j < i; ++j) {
      Integer g = gcd(moduli_[i], moduli_[j]);
      if (g != 1) {
        throw NotCoprimeError(moduli_[j], moduli_[i], g,
                              "crt: moduli " + to_string(moduli_[j]) + " and " +
                                  to_string(moduli_[i]) + " share the factor " + to_string(g));
      }
    }
    modulus_ *= moduli_[i];
  }
  idempotents_.reserve(moduli_.size());
  for (const Integer& q : moduli_) {
    Integer cofactor = modulus_ / q;
    idempotents_.push_back(floor_mod(cofactor * mod_inverse(cofactor, q), modulus_));
  }
}

Integer CrtLift::lift(std::span<const Integer> residues) const {
  if (residues.size() != moduli_.size()) {
    throw std::invalid_argument("crt: expected " + std::to_string(moduli_.size()) +
                                " residues, got " + std::to_string(residues.size()));
  }
  Integer x = 0;
  for (std::size_t i = 0; i < residues.size(); ++i) x += residues[i] * idempotents_[i];
  return floor_mod(x, modulus_);
}

Congruence crt_combine(std::span<const Congruence> system) {
  std::vector<Integer> moduli;
  std::vector<Integer> residues;
  moduli.reserve(system.size());
  residues.reserve(system.size());
  for (const Congruence& c : system) {
    require_positive(c.modulus, "crt");
    if (c.residue < 0 || c.residue >= c.modulus) {
      throw std::invalid_argument("crt: residue " + to_string(c.residue) + " outside [0, " +
                                  to_string(c.modulus) + ")");
    }
    moduli.push_back(c.modulus);
    residues.push_back(c.residue);
  }
  CrtLift lift(std::move(moduli));
  return Congruence{lift.lift(residues), lift.modulus()};
}

Rational fractional_part(const Rational& q) { return q - Rational(q.floor()); }

}  // namespace dedekind
