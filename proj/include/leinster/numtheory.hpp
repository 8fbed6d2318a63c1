#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "leinster/error.hpp"

namespace leinster::nt {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Primes up to and including `limit` (sieve of Eratosthenes).
inline std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

/// Prime factorization as (prime, exponent) pairs in ascending prime order.
inline std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p * p <= n; ++p) {
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

inline std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

/// Divisors of n in ascending order.
inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline u64 divisor_sum(u64 n) {
  u64 total = 1;
  for (const auto& [p, e] : factorize(n)) {
    u64 term = 1, pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      term += pk;
    }
    total *= term;
  }
  return total;
}

inline bool is_perfect(u64 n) {
  if (n == 0) throw InputError("is_perfect requires n >= 1");
  return divisor_sum(n) == 2 * n;
}

inline bool is_squarefree(u64 n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

/// Number of prime factors counted with multiplicity.
inline unsigned big_omega(u64 n) {
  unsigned k = 0;
  for (const auto& [p, e] : factorize(n)) k += e;
  return k;
}

/// The p-part of n: the largest power of p dividing n.
inline u64 p_part(u64 n, u64 p) {
  u64 out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

/// Least k >= 1 with t^k = 1 (mod a).
inline u64 mult_order(i64 t, u64 a) {
  if (a == 0) throw InputError("modulus must be positive");
  const u64 tm = static_cast<u64>(((t % static_cast<i64>(a)) + static_cast<i64>(a)) % static_cast<i64>(a));
  if (std::gcd(tm, a) != 1 && a != 1) {
    throw InputError("mult_order: gcd(" + std::to_string(t) + ", " + std::to_string(a) + ") != 1");
  }
  if (a == 1) return 1;
  u64 k = 1;
  for (u64 x = tm; x != 1; x = mul_mod(x, tm, a)) ++k;
  return k;
}

inline u64 lcm(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

}  // namespace leinster::nt
