#pragma once

/// Elementary number-theoretic helpers: totient, Moebius, divisors,
/// primality, primitive roots, and guarded 128-bit products.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "superfourier/errors.hpp"

namespace superfourier {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 n) { return static_cast<u64>((u128(a) * b) % n); }

inline u64 pow_mod(u64 base, u64 exp, u64 n) {
  if (n == 1) return 0;
  u64 r = 1 % n;
  base %= n;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return r;
}

/// Inverse of a modulo n via the extended Euclidean algorithm.
/// Works for composite n; requires gcd(a, n) = 1.
inline u64 inverse_mod(u64 a, u64 n) {
  if (n == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1)
    throw not_invertible_error("no inverse of " + std::to_string(a) + " modulo " +
                               std::to_string(n));
  if (t < 0) t += static_cast<std::int64_t>(n);
  return static_cast<u64>(t);
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (u64 f = 7; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

/// Prime factorization by trial division, as (prime, exponent) pairs.
inline std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline u64 totient(u64 n) {
  u64 phi = n;
  for (auto [p, e] : factorize(n)) phi -= phi / p;
  return phi;
}

/// Moebius mu: 0 on non-squarefree n, else (-1)^{#prime factors}.
inline int mobius(u64 n) {
  int m = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    m = -m;
  }
  return m;
}

inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (auto [p, e] : factorize(n)) {
    size_t base = out.size();
    u64 pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Smallest primitive root modulo an odd prime p.
inline u64 primitive_root(u64 p) {
  if (!is_prime(p) || p == 2)
    throw bad_parameter_error("primitive_root requires an odd prime, got " + std::to_string(p));
  auto factors = factorize(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : factors)
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw internal_inconsistency_error("no primitive root found mod " + std::to_string(p));
}

/// Primitive root modulo p^2: a primitive root g mod p works unless
/// g^{p-1} ≡ 1 (mod p^2), in which case g + p does.
inline u64 primitive_root_mod_p2(u64 p) {
  u64 g = primitive_root(p);
  u64 p2 = p * p;
  if (pow_mod(g, p - 1, p2) == 1) g += p;
  return g;
}

/// a*b with overflow guard at 2^127.
inline u128 checked_mul(u128 a, u128 b) {
  static constexpr u128 kLimit = u128(1) << 127;
  if (a != 0 && b > (kLimit - 1) / a) throw overflow_error("128-bit overflow in checked_mul");
  return a * b;
}

/// n! for n <= 34 (the largest factorial below 2^128).
inline u128 factorial128(unsigned n) {
  if (n > 34) throw overflow_error("factorial128 overflow: " + std::to_string(n) + "!");
  u128 f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

}  // namespace superfourier
