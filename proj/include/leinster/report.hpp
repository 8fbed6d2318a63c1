#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "leinster/constructors.hpp"
#include "leinster/error.hpp"
#include "leinster/group.hpp"
#include "leinster/numtheory.hpp"

namespace leinster {

/// Normal-subgroup summary of one group. `normal_orders` is a sorted
/// multiset; sigma and tau are its sum and length.
struct LeinsterReport {
  std::string label;
  std::uint64_t order = 0;
  std::vector<std::uint64_t> normal_orders;
  std::uint64_t sigma = 0;
  std::uint64_t tau = 0;
  bool is_leinster = false;
  std::uint64_t odd_normal_count = 0;

  bool operator==(const LeinsterReport&) const = default;
};

/// Fills sigma, tau, the verdict and the odd count from normal_orders.
inline LeinsterReport make_report(std::string label, std::uint64_t order,
                                  std::vector<std::uint64_t> normal_orders) {
  std::sort(normal_orders.begin(), normal_orders.end());
  LeinsterReport r;
  r.label = std::move(label);
  r.order = order;
  r.sigma = std::accumulate(normal_orders.begin(), normal_orders.end(), std::uint64_t{0});
  r.tau = normal_orders.size();
  r.is_leinster = r.sigma == 2 * order;
  r.odd_normal_count = static_cast<std::uint64_t>(
      std::count_if(normal_orders.begin(), normal_orders.end(), [](auto k) { return k % 2 == 1; }));
  r.normal_orders = std::move(normal_orders);
  return r;
}

/// Explicit path: enumerate normal subgroups on the table.
inline LeinsterReport analyze(const GroupTable& g) {
  std::vector<std::uint64_t> orders;
  for (const auto& n : normal_subgroups(g)) orders.push_back(n.size());
  return make_report(g.label(), g.order(), std::move(orders));
}

/// Structural rule for G1 x G2 with coprime orders: every normal subgroup is a
/// product N1 x N2, so orders multiply pairwise.
inline LeinsterReport analyze_coprime_product(const LeinsterReport& r1, const LeinsterReport& r2,
                                              std::string label = {}) {
  if (std::gcd(r1.order, r2.order) != 1) {
    throw InputError("coprime product rule needs gcd(|G1|, |G2|) = 1, got orders " +
                     std::to_string(r1.order) + " and " + std::to_string(r2.order));
  }
  if (r1.order == 1) return label.empty() ? r2 : make_report(label, r2.order, r2.normal_orders);
  if (r2.order == 1) return label.empty() ? r1 : make_report(label, r1.order, r1.normal_orders);
  std::vector<std::uint64_t> orders;
  orders.reserve(r1.normal_orders.size() * r2.normal_orders.size());
  for (auto a : r1.normal_orders)
    for (auto b : r2.normal_orders) orders.push_back(a * b);
  if (label.empty()) label = r1.label + "x" + r2.label;
  return make_report(std::move(label), r1.order * r2.order, std::move(orders));
}

/// Normal subgroup orders of the metacyclic group
///   <x, y | x^A = 1, y^B = x^s, y x y^-1 = x^t>
/// without building it.
///
/// A subgroup is fixed by N meet <x> = <x^g> (g | A), its image <y^f> in the
/// quotient (f | B) and the coset x^c <x^g> of x-parts paired with y^f. It is
/// a subgroup exactly when (x^c y^f)^(B/f) lies in <x^g>, and normal exactly
/// when conjugating x^c y^f by x and by y stays inside it.
inline std::vector<std::uint64_t> metacyclic_normal_orders(std::uint64_t A, std::uint64_t B,
                                                           std::uint64_t t, std::uint64_t s = 0) {
  detail::check_metacyclic(A, B, t, s);
  std::vector<std::uint64_t> out;
  const auto a_divs = nt::divisors(A);
  for (std::uint64_t f : nt::divisors(B)) {
    const std::uint64_t e = B / f;
    const std::uint64_t tf = nt::pow_mod(t, f, A);
    // sum_{j<e} t^(f j) mod A
    std::uint64_t geo = 0, term = 1 % A;
    for (std::uint64_t j = 0; j < e; ++j) {
      geo = (geo + term) % A;
      term = nt::mul_mod(term, tf, A);
    }
    for (std::uint64_t g : a_divs) {
      if ((tf % g + g - 1) % g != 0) continue;
      const std::uint64_t tm1 = (t % g + g - 1) % g;
      const std::uint64_t sg = s % g, geo_g = geo % g;
      std::uint64_t count = 0;
      for (std::uint64_t c = 0; c < g; ++c) {
        if ((nt::mul_mod(c, geo_g, g) + sg) % g != 0) continue;
        if (nt::mul_mod(c, tm1, g) != 0) continue;
        ++count;
      }
      for (std::uint64_t k = 0; k < count; ++k) out.push_back((A / g) * e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline LeinsterReport analyze_metacyclic(std::string label, std::uint64_t A, std::uint64_t B,
                                         std::uint64_t t, std::uint64_t s = 0) {
  return make_report(std::move(label), A * B, metacyclic_normal_orders(A, B, t, s));
}

}  // namespace leinster
