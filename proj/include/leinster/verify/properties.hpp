#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leinster/constructors.hpp"
#include "leinster/group.hpp"
#include "leinster/numtheory.hpp"
#include "leinster/report.hpp"

namespace leinster::verify {

/// Everything the property suites need from one explicitly built group.
struct GroupFacts {
  std::string label;
  LeinsterReport report;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;

  // Abelian normal subgroups of prime index, and whether |G| = p|G'||Z(G)|
  // held for each. The law is only checked for non-abelian G: for abelian G
  // the right side is p|G|.
  bool abelian = false;
  std::vector<std::uint64_t> abelian_prime_indices;
  bool prime_index_law = true;

  // Sylow subgroup at the smallest prime.
  std::uint64_t smallest_prime = 0;
  bool smallest_sylow_cyclic = false;
  bool complement_found = false;

  // Quotients by normal subgroups containing G' (checked when sigma <= 2|G|).
  bool quotients_checked = false;
  bool quotients_cyclic = true;
  std::string noncyclic_quotient;
};

inline bool subgroup_is_cyclic(const GroupTable& g, const ElementSet& h) {
  bool found = false;
  h.for_each([&](Element x) {
    if (!found && g.element_order(x) == h.size()) found = true;
  });
  return found;
}

inline GroupFacts examine(const GroupTable& g) {
  GroupFacts f;
  f.label = g.label();
  const auto normals = normal_subgroups(g);
  std::vector<std::uint64_t> orders;
  for (const auto& n : normals) orders.push_back(n.size());
  f.report = make_report(g.label(), g.order(), orders);
  f.center_order = center(g).size();
  const auto derived = derived_subgroup(g);
  f.derived_order = derived.size();
  const std::uint64_t n = g.order();
  f.abelian = f.center_order == n;

  for (const auto& N : normals) {
    const std::uint64_t index = n / N.size();
    if (index < 2 || !nt::is_prime(index) || !is_abelian_subgroup(g, N)) continue;
    f.abelian_prime_indices.push_back(index);
    if (!f.abelian && n != index * f.derived_order * f.center_order) f.prime_index_law = false;
  }

  if (n > 1) {
    f.smallest_prime = nt::prime_divisors(n).front();
    const auto P = sylow(g, f.smallest_prime);
    f.smallest_sylow_cyclic = subgroup_is_cyclic(g, P);
    const std::uint64_t want = n / P.size();
    for (auto k : orders) f.complement_found |= k == want;
  }

  if (f.report.sigma <= 2 * n) {
    f.quotients_checked = true;
    for (const auto& N : normals) {
      if (!derived.is_subset_of(N)) continue;
      if (!is_cyclic(quotient(g, N))) {
        f.quotients_cyclic = false;
        f.noncyclic_quotient = g.label() + " mod a normal subgroup of order " + std::to_string(N.size());
        break;
      }
    }
  }
  return f;
}

}  // namespace leinster::verify
