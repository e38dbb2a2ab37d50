#include "dedekind/factorization.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace dedekind {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialBound = 1'000'000;
constexpr int kBigRounds = 64;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<std::uint32_t> out;
    for (u64 i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (u64 j = i * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

u64 mul_mod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

u64 pow_mod(u64 base, u64 exp, u64 n) {
  u64 result = 1 % n;
  base %= n;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1U;
  }
  return result;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : kWitnesses) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime_big(const Integer& n) {
  for (std::uint32_t p : small_primes()) {
    if (p > 1000) break;
    if (n % p == 0) return false;
  }
  Integer d = n - 1;
  const auto s = boost::multiprecision::lsb(d);
  d >>= s;
  std::mt19937_64 rng(0x5eed'dedeULL);
  const Integer span = n - 3;
  for (int round = 0; round < kBigRounds; ++round) {
    // Witness in [2, n-2], built from 64-bit draws until it covers span.
    Integer draw = 0;
    for (unsigned bits = 0; bits <= boost::multiprecision::msb(span); bits += 64) {
      draw = (draw << 64) + rng();
    }
    Integer a = 2 + draw % (span - 1);
    Integer x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s && composite; ++i) {
      x = x * x % n;
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant of Pollard rho with batched gcds. Returns a divisor in
// (1, n) or n itself when constant c fails.
template <typename T, typename MulMod>
T brent_split(const T& n, const T& c, MulMod mul_mod_n) {
  auto step = [&](const T& v) { return (mul_mod_n(v, v) + c) % n; };
  auto abs_diff = [](const T& a, const T& b) { return a > b ? T(a - b) : T(b - a); };
  using std::gcd;
  using boost::multiprecision::gcd;
  constexpr std::uint64_t kBatch = 128;
  T y = 2;
  T x = 2;
  T ys = 2;
  T q = 1;
  T g = 1;
  std::uint64_t r = 1;
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = step(y);
    std::uint64_t k = 0;
    do {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
        y = step(y);
        q = mul_mod_n(q, abs_diff(x, y));
      }
      g = gcd(q, n);
      k += kBatch;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = step(ys);
      g = gcd(abs_diff(x, ys), n);
    } while (g == 1);
  }
  return g;
}

void split_u64(u64 n, std::map<Integer, std::uint32_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[Integer(n)];
    return;
  }
  for (u64 c = 1;; ++c) {
    u64 d = brent_split<u64>(n, c, [n](u64 a, u64 b) { return mul_mod(a, b, n); });
    if (d != n) {
      split_u64(d, out);
      split_u64(n / d, out);
      return;
    }
  }
}

void split_big(const Integer& n, std::map<Integer, std::uint32_t>& out) {
  if (fits_u64(n)) {
    split_u64(static_cast<u64>(n), out);
    return;
  }
  if (is_prime_big(n)) {
    ++out[n];
    return;
  }
  for (Integer c = 1;; ++c) {
    Integer d = brent_split<Integer>(n, c, [&n](const Integer& a, const Integer& b) {
      return Integer(a * b % n);
    });
    if (d != n) {
      split_big(d, out);
      split_big(n / d, out);
      return;
    }
  }
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(static_cast<u64>(n));
  return is_prime_big(n);
}

Integer Factorization::recompose() const {
  Integer product = 1;
  for (const PrimePower& f : factors) product *= f.value();
  return product;
}

Factorization factorize(const Integer& n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive, got " + to_string(n));
  Factorization result{n, {}};
  std::map<Integer, std::uint32_t> found;

  if (fits_u64(n)) {
    u64 rest = static_cast<u64>(n);
    for (std::uint32_t p : small_primes()) {
      if (static_cast<u64>(p) * p > rest) break;
      if (rest % p != 0) continue;
      std::uint32_t k = 0;
      while (rest % p == 0) {
        rest /= p;
        ++k;
      }
      found.emplace(Integer(p), k);
    }
    split_u64(rest, found);
  } else {
    Integer rest = n;
    for (std::uint32_t p : small_primes()) {
      if (fits_u64(rest) && static_cast<u64>(p) * p > static_cast<u64>(rest)) break;
      std::uint32_t k = 0;
      while (rest % p == 0) {
        rest /= p;
        ++k;
      }
      if (k != 0) found.emplace(Integer(p), k);
    }
    split_big(rest, found);
  }

  result.factors.reserve(found.size());
  for (auto& [p, k] : found) result.factors.push_back(PrimePower{p, k});
  return result;
}

}  // namespace dedekind
