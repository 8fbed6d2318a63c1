#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "leinster/numtheory.hpp"
#include "leinster/report.hpp"
#include "leinster/squarefree.hpp"

namespace leinster {

/// Canonical form of a split metacyclic group C_a x| C_b with gcd(a, b) = 1:
/// C_a1 x| C_b with a1 = |G'|, so t - 1 is a unit mod a1, and t reduced by
/// canonical_action. Two such groups are isomorphic iff their keys agree.
/// The cyclic group of order n is {1, n, 1}.
struct SdKey {
  std::uint64_t a1 = 1;
  std::uint64_t b = 1;
  std::uint64_t t = 1;

  std::uint64_t order() const { return a1 * b; }
  auto operator<=>(const SdKey&) const = default;
};

/// Key for C_a x|_t C_b, or nullopt when the action has a kernel on <x> that
/// does not split off (t = 1 mod l but not mod the full l-part of a).
inline std::optional<SdKey> sd_key(std::uint64_t a, std::uint64_t b, std::uint64_t t) {
  if (std::gcd(a, b) != 1) throw InputError("sd_key needs gcd(a, b) = 1");
  std::uint64_t a1 = 1, a0 = 1;
  for (const auto& [l, e] : nt::factorize(a)) {
    std::uint64_t lk = 1;
    for (unsigned i = 0; i < e; ++i) lk *= l;
    if (t % l != 1 % l) {
      a1 *= lk;
    } else if (t % lk == 1 % lk) {
      a0 *= lk;
    } else {
      return std::nullopt;
    }
  }
  if (a1 == 1) return SdKey{1, a * b, 1};
  const std::uint64_t b2 = b * a0;
  return SdKey{a1, b2, canonical_action(t % a1, a1, b2)};
}

inline SdKey sd_key(const MetacyclicDescriptor& d) { return *sd_key(d.a, d.b, d.t); }

/// All keys of order n, sorted.
inline std::vector<SdKey> sd_family(std::uint64_t n) {
  std::vector<SdKey> out{{1, n, 1}};
  for (std::uint64_t a1 : nt::divisors(n)) {
    if (a1 == 1) continue;
    const std::uint64_t b = n / a1;
    if (std::gcd(a1, b) != 1 || b == 1) continue;
    std::set<std::uint64_t> ts;
    for (std::uint64_t t = 2; t < a1; ++t) {
      if (std::gcd(t, a1) != 1 || std::gcd(t - 1, a1) != 1) continue;
      if (nt::pow_mod(t, b, a1) != 1) continue;
      ts.insert(canonical_action(t, a1, b));
    }
    for (auto t : ts) out.push_back({a1, b, t});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Structure label, e.g. C28, S3xC5, Dic5xC19, SD(7,8,6). The acting group
/// splits as C_act x C_rest with C_rest central.
inline std::string sd_label(const SdKey& k) {
  if (k.a1 == 1) return "C" + std::to_string(k.b);
  const std::uint64_t o = nt::mult_order(static_cast<nt::i64>(k.t), k.a1);
  std::uint64_t act = 1;
  for (auto l : nt::prime_divisors(o)) act *= nt::p_part(k.b, l);
  const std::uint64_t rest = k.b / act;
  const std::uint64_t t = canonical_action(nt::pow_mod(k.t, rest, k.a1), k.a1, act);
  std::string core;
  if (act == 2 && t == k.a1 - 1) {
    core = k.a1 == 3 ? "S3" : "D" + std::to_string(2 * k.a1);
  } else if (act == 4 && t == k.a1 - 1) {
    core = "Dic" + std::to_string(k.a1);
  } else {
    core = "SD(" + std::to_string(k.a1) + "," + std::to_string(act) + "," + std::to_string(t) + ")";
  }
  return rest > 1 ? core + "xC" + std::to_string(rest) : core;
}

/// One entry per normal subgroup N: |N| and |Z(G/N)|.
///
/// With G' = C_a1 and C_b acting, N meets C_a1 in C_d and maps onto C_e in
/// G/C_a1; N/C_d centralizes C_{a1/d}, which forces e | b / ord_{a1/d}(t) and
/// leaves exactly one N per admissible (d, e).
struct NormalEntry {
  std::uint64_t order;
  std::uint64_t quotient_center;
};

inline std::vector<NormalEntry> sd_normal_entries(const SdKey& k) {
  std::vector<NormalEntry> out;
  for (std::uint64_t d : nt::divisors(k.a1)) {
    const std::uint64_t m = k.a1 / d;
    const std::uint64_t o = m == 1 ? 1 : nt::mult_order(static_cast<nt::i64>(k.t % m), m);
    for (std::uint64_t e : nt::divisors(k.b / o)) out.push_back({d * e, k.b / e / o});
  }
  return out;
}

inline LeinsterReport analyze_sd(const SdKey& k, std::string label = {}) {
  if (label.empty()) label = sd_label(k);
  std::vector<std::uint64_t> orders;
  for (const auto& e : sd_normal_entries(k)) orders.push_back(e.order);
  return make_report(std::move(label), k.order(), std::move(orders));
}

/// Normal subgroups of G x C_p for G in the family, with p allowed to divide
/// |G|. Besides N x 1 and N x C_p there are the diagonal subgroups over
/// N < M with M/N central of order p, p - 1 of them per such pair; the centre
/// of G/N is cyclic, so M exists iff p divides |Z(G/N)|.
inline LeinsterReport analyze_sd_times_prime(const SdKey& k, std::uint64_t p, std::string label = {}) {
  if (!nt::is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (label.empty()) label = sd_label(k) + "xC" + std::to_string(p);
  std::vector<std::uint64_t> orders;
  for (const auto& e : sd_normal_entries(k)) {
    orders.push_back(e.order);
    orders.push_back(p * e.order);
    if (e.quotient_center % p == 0) orders.insert(orders.end(), p - 1, p * e.order);
  }
  return make_report(std::move(label), k.order() * p, std::move(orders));
}

/// C_p x C_p: the trivial group, p + 1 lines, the whole group.
inline LeinsterReport analyze_elementary_p2(std::uint64_t p) {
  std::vector<std::uint64_t> orders{1, p * p};
  orders.insert(orders.end(), p + 1, p);
  return make_report("C" + std::to_string(p) + "xC" + std::to_string(p), p * p, std::move(orders));
}

}  // namespace leinster
