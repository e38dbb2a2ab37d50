#pragma once

#include <cstdint>
#include <vector>

#include "dedekind/integer.hpp"

namespace dedekind {

struct PrimePower {
  Integer p;
  std::uint32_t k = 1;

  Integer value() const { return ipow(p, k); }
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod p^k with primes strictly increasing. n = 1 has no factors.
struct Factorization {
  Integer n;
  std::vector<PrimePower> factors;

  Integer recompose() const;
};

/// Miller-Rabin. Deterministic below 2^64 (first twelve prime witnesses);
/// above that, 64 rounds with witnesses from a fixed-seed generator, so the
/// error probability is below 2^-128 and the answer is reproducible.
bool is_prime(const Integer& n);

/// Trial division by primes up to 10^6, then Pollard rho (Brent's cycle
/// finding, constants c = 1, 2, 3, ...) on what remains.
/// Throws std::invalid_argument for n <= 0.
Factorization factorize(const Integer& n);

}  // namespace dedekind
