#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "leinster/constructors.hpp"
#include "leinster/error.hpp"
#include "leinster/numtheory.hpp"

namespace leinster {

/// C_a x| C_b with faithful action y x y^-1 = x^t, for a group of squarefree
/// order a*b. The cyclic group of order n is (n, 1, 1).
struct MetacyclicDescriptor {
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::uint64_t t = 1;

  std::uint64_t order() const { return a * b; }
  std::string serialize() const {
    return "SF(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(t) + ")";
  }
  GroupSpec spec() const { return GroupSpec{SquarefreeDesc{a, b, t}}; }

  auto operator<=>(const MetacyclicDescriptor&) const = default;
};

/// Minimal member of {t^k mod a : gcd(k, b) = 1}; generators of the cyclic
/// group <t> give isomorphic semidirect products.
inline std::uint64_t canonical_action(std::uint64_t t, std::uint64_t a, std::uint64_t b) {
  if (a == 1) return 1;
  t %= a;
  std::uint64_t best = t;
  std::uint64_t x = 1;
  for (std::uint64_t k = 1; k <= b; ++k) {
    x = nt::mul_mod(x, t, a);
    if (std::gcd(k, b) == 1) best = std::min(best, x);
  }
  return best;
}

inline void require_squarefree(std::uint64_t n) {
  if (!nt::is_squarefree(n)) throw InputError(std::to_string(n) + " is not squarefree");
}

/// One canonical descriptor per isomorphism class of groups of order n,
/// sorted by (a, t).
///
/// Completeness relies on the classical fact that a group of squarefree order
/// is C_a x| C_b with gcd(a, b) = 1; requiring a faithful action pins a, and
/// the remaining freedom is replacing y by a generator y^k of <y>.
inline std::vector<MetacyclicDescriptor> enumerate_squarefree(std::uint64_t n) {
  require_squarefree(n);
  std::vector<MetacyclicDescriptor> out;
  for (std::uint64_t a : nt::divisors(n)) {
    const std::uint64_t b = n / a;
    if (b == 1) {
      out.push_back({a, 1, 1});
      continue;
    }
    // An action of order b on C_a needs b | phi(a); prune cheaply.
    std::uint64_t phi = 1;
    for (auto p : nt::prime_divisors(a)) phi *= p - 1;
    if (phi % b != 0) continue;
    std::set<std::uint64_t> seen;
    for (std::uint64_t t = 2; t < a; ++t) {
      if (std::gcd(t, a) != 1) continue;
      if (nt::pow_mod(t, b, a) != 1) continue;
      if (nt::mult_order(static_cast<nt::i64>(t), a) != b) continue;
      seen.insert(canonical_action(t, a, b));
    }
    for (auto t : seen) out.push_back({a, b, t});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.a != y.a ? x.a < y.a : x.t < y.t;
  });
  return out;
}

/// Number of groups of squarefree order n by Hoelder's formula:
/// sum over d | n of prod over primes p | n/d of (p^c - 1)/(p - 1), where c
/// counts the primes q | d with q = 1 (mod p).
inline std::uint64_t holder_count(std::uint64_t n) {
  require_squarefree(n);
  std::uint64_t total = 0;
  for (std::uint64_t d : nt::divisors(n)) {
    const auto qs = nt::prime_divisors(d);
    std::uint64_t term = 1;
    for (std::uint64_t p : nt::prime_divisors(n / d)) {
      unsigned c = 0;
      for (auto q : qs)
        if (q % p == 1) ++c;
      std::uint64_t pc = 1;
      for (unsigned i = 0; i < c; ++i) pc *= p;
      term *= (pc - 1) / (p - 1);
      if (term == 0) break;
    }
    total += term;
  }
  return total;
}

inline GroupTable realize(const MetacyclicDescriptor& d,
                          const EngineConfig& config = default_engine(),
                          TableMode mode = TableMode::Auto) {
  return build(d.spec(), config, mode);
}

}  // namespace leinster
