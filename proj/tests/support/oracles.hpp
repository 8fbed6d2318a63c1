#pragma once

// Brute-force reference implementations. They use only mul/inv/identity of a
// GroupTable and deliberately share no code with the engine.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "leinster/equations.hpp"
#include "leinster/group.hpp"
#include "leinster/numtheory.hpp"

namespace oracle {

using leinster::Element;
using leinster::GroupTable;
using Subset = std::vector<bool>;

inline std::vector<Element> members(const Subset& s) {
  std::vector<Element> out;
  for (Element i = 0; i < s.size(); ++i)
    if (s[i]) out.push_back(i);
  return out;
}

inline std::size_t size(const Subset& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

/// Breadth-first closure: right-multiply every reached element by every
/// generator until nothing new appears.
inline Subset closure(const GroupTable& g, const std::vector<Element>& gens) {
  Subset in(g.order(), false);
  in[g.identity()] = true;
  std::vector<Element> queue{g.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto x : gens) {
      const auto y = g.mul(queue[i], x);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

inline Subset conjugates(const GroupTable& g, Element x) {
  Subset out(g.order(), false);
  for (Element h = 0; h < g.order(); ++h) out[g.mul(g.mul(h, x), g.inv(h))] = true;
  return out;
}

/// Classes as sorted member lists, ordered by smallest member.
inline std::vector<std::vector<Element>> conjugacy_classes(const GroupTable& g) {
  std::vector<std::vector<Element>> out;
  Subset seen(g.order(), false);
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    const auto cls = conjugates(g, x);
    for (Element y = 0; y < g.order(); ++y)
      if (cls[y]) seen[y] = true;
    out.push_back(members(cls));
  }
  return out;
}

inline Subset center(const GroupTable& g) {
  Subset out(g.order(), false);
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element h = 0; h < g.order() && central; ++h) central = g.mul(x, h) == g.mul(h, x);
    out[x] = central;
  }
  return out;
}

inline Subset derived(const GroupTable& g) {
  std::set<Element> comms;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) comms.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  return closure(g, {comms.begin(), comms.end()});
}

inline bool is_normal(const GroupTable& g, const Subset& h) {
  for (Element x = 0; x < g.order(); ++x) {
    if (!h[x]) continue;
    for (Element a = 0; a < g.order(); ++a)
      if (!h[g.mul(g.mul(a, x), g.inv(a))]) return false;
  }
  return true;
}

inline Subset join(const GroupTable& g, const Subset& a, const Subset& b) {
  std::vector<Element> gens = members(a);
  for (auto x : members(b)) gens.push_back(x);
  return closure(g, gens);
}

/// All subgroups generated by at most two elements, closed under joins, then
/// filtered for normality. Returned as member lists sorted by (size, members).
inline std::vector<std::vector<Element>> normal_subgroups(const GroupTable& g) {
  std::set<std::vector<Element>> seen;
  std::vector<std::vector<Element>> gens;  // a generating list per subgroup
  auto add = [&](std::vector<Element> gs) {
    if (seen.insert(members(closure(g, gs))).second) gens.push_back(std::move(gs));
  };
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = a; b < g.order(); ++b) add({a, b});
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto gs = gens[i];
      gs.insert(gs.end(), gens[j].begin(), gens[j].end());
      add(std::move(gs));
    }
  }
  std::vector<std::vector<Element>> out;
  for (const auto& s : seen) {
    Subset h(g.order(), false);
    for (auto x : s) h[x] = true;
    if (is_normal(g, h)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

/// Order of x by repeated multiplication.
inline std::uint64_t element_order(const GroupTable& g, Element x) {
  std::uint64_t k = 1;
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

/// Every prime tuple within bounds and ordering that satisfies the unreduced
/// equation, found by direct substitution.
inline std::vector<leinster::nt::Solution> solve_unreduced(const leinster::nt::EquationSpec& eq,
                                                           const leinster::nt::Bounds& bounds) {
  using namespace leinster::nt;
  std::vector<Solution> out;
  Assignment a{0, 0, 0, 0};
  for (auto& [v, val] : eq.fixed) a[v] = val;
  std::uint64_t top = 0;
  for (auto v : eq.free) top = std::max(top, bounds[v]);
  const auto primes = primes_up_to(top);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == eq.free.size()) {
      for (int u = 0; u < 4; ++u)
        for (int w = u + 1; w < 4; ++w)
          if (a[u] != 0 && a[w] != 0 && a[u] >= a[w]) return;
      if (eq.lhs(a) != eq.rhs(a)) return;
      Solution s;
      for (auto v : eq.free) s.push_back(static_cast<std::uint64_t>(a[v]));
      out.push_back(s);
      return;
    }
    const Var v = eq.free[idx];
    for (auto p : primes) {
      if (p > bounds[v]) break;
      if (p < eq.lower[v]) continue;
      a[v] = p;
      rec(idx + 1);
    }
    a[v] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
