#pragma once

// Literal O(n) scans over x = 1..n for the condition
//   gcd(x, n) = 1  and  n | (x - m)(x m - 1).
// These back the brute-force oracles. Moduli up to 2^32 run on machine
// words; anything larger falls back to Integer arithmetic.

#include <cstdint>
#include <numeric>
#include <vector>

#include "dedekind/integer.hpp"

namespace dedekind::scan {

/// Largest modulus handled by the machine-word kernels; factors stay
/// below 2^32, so their product fits in 64 bits.
inline constexpr std::uint64_t kNativeLimit = std::uint64_t{1} << 32;

namespace detail {

// Lemire-Kaser-Kurz divisibility test for 32-bit operands: v is divisible
// by d iff v * c <= c - 1 in wrapping 64-bit arithmetic, c = ceil(2^64 / d).
class SmallDivisor {
 public:
  explicit SmallDivisor(std::uint64_t d) : c_(~std::uint64_t{0} / d + 1) {}
  bool divides(std::uint64_t v) const { return v * c_ <= c_ - 1; }

 private:
  std::uint64_t c_;
};

// a = x - m and b = x m - 1 are tracked mod n as x increments, so each step
// costs two adds and one divisibility test.
template <typename Divides, typename Fn>
void scan_words(std::uint64_t m, std::uint64_t n, Divides divides, Fn&& fn) {
  std::uint64_t a = (1 + n - m) % n;
  std::uint64_t b = (m + n - 1) % n;
  for (std::uint64_t x = 1; x <= n; ++x) {
    if (divides(a * b) && std::gcd(x, n) == 1) fn(x);
    if (++a == n) a = 0;
    b += m;
    if (b >= n) b -= n;
  }
}

}  // namespace detail

/// Calls fn(x) for every solution x in [1, n], ascending. Requires
/// 1 <= n <= kNativeLimit and 0 <= m < n.
template <typename Fn>
void for_each_solution(std::uint64_t m, std::uint64_t n, Fn&& fn) {
  if (n <= (std::uint64_t{1} << 16)) {
    const detail::SmallDivisor d(n);
    detail::scan_words(m, n, [&d](std::uint64_t v) { return d.divides(v); }, fn);
  } else {
    detail::scan_words(m, n, [n](std::uint64_t v) { return v % n == 0; }, fn);
  }
}

inline std::uint64_t count_solutions(std::uint64_t m, std::uint64_t n) {
  std::uint64_t total = 0;
  for_each_solution(m, n, [&total](std::uint64_t) { ++total; });
  return total;
}

inline std::vector<std::uint64_t> solutions(std::uint64_t m, std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for_each_solution(m, n, [&out](std::uint64_t x) { out.push_back(x); });
  return out;
}

/// Integer fallback for any n >= 1 and any m.
template <typename Fn>
void for_each_solution(const Integer& m, const Integer& n, Fn&& fn) {
  for (Integer x = 1; x <= n; ++x) {
    if (((x - m) * (x * m - 1)) % n == 0 && gcd(x, n) == 1) fn(x);
  }
}

}  // namespace dedekind::scan
