#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dedekind {

/// Arbitrary-precision signed integer. Every integer quantity in the library
/// (moduli, residues, exponents of large powers, numerators) uses this type.
using Integer = boost::multiprecision::cpp_int;

/// Parses an optionally signed decimal literal. Throws std::invalid_argument
/// on anything else (empty input, stray characters, leading '+').
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);

/// Least non-negative residue of a modulo n; n must be positive.
Integer floor_mod(const Integer& a, const Integer& n);

/// Quotient rounded towards negative infinity; b must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);

Integer ipow(const Integer& base, std::uint64_t exponent);

Integer gcd(const Integer& a, const Integer& b);

inline bool fits_u64(const Integer& value) {
  return value >= 0 && value <= std::numeric_limits<std::uint64_t>::max();
}

}  // namespace dedekind
