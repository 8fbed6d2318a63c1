#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "leinster/element_set.hpp"
#include "leinster/error.hpp"

namespace leinster {

struct EngineConfig {
  // Hard cap on the order of any group the engine will materialize.
  std::size_t max_order = 20000;
  // Groups up to this order get a cached Cayley table; above it, products are
  // composed on demand from the underlying representation.
  std::size_t table_limit = 2048;
};

inline const EngineConfig& default_engine() {
  static const EngineConfig config{};
  return config;
}

enum class TableMode { Auto, Cached, OnDemand };

using ComposeFn = std::function<Element(Element, Element)>;
using InverseFn = std::function<Element(Element)>;

/// An explicit finite group on ids 0..order-1. Immutable after construction
/// and cheap to copy; copies share the multiplication data.
class GroupTable {
 public:
  GroupTable() = default;

  static GroupTable make(std::size_t order, Element identity, ComposeFn compose,
                         InverseFn inverse, std::string label, TableMode mode = TableMode::Auto,
                         const EngineConfig& config = default_engine()) {
    if (order == 0) throw InputError("group order must be positive");
    if (order > config.max_order) {
      throw CapacityError("group order " + std::to_string(order) + " exceeds engine cap " +
                          std::to_string(config.max_order));
    }
    GroupTable g;
    g.order_ = order;
    g.identity_ = identity;
    g.label_ = std::move(label);

    auto inv = std::make_shared<std::vector<Element>>(order);
    for (std::size_t i = 0; i < order; ++i) (*inv)[i] = inverse(static_cast<Element>(i));
    g.inverse_ = std::move(inv);

    const bool cache = mode == TableMode::Cached ||
                       (mode == TableMode::Auto && order <= config.table_limit);
    if (cache) {
      auto table = std::make_shared<std::vector<Element>>(order * order);
      for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
          (*table)[a * order + b] = compose(static_cast<Element>(a), static_cast<Element>(b));
        }
      }
      g.table_ = std::move(table);
    }
    g.compose_ = std::make_shared<const ComposeFn>(std::move(compose));
    return g;
  }

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  const std::string& label() const { return label_; }
  bool has_cached_table() const { return table_ != nullptr; }

  Element mul(Element a, Element b) const {
    if (table_) return (*table_)[static_cast<std::size_t>(a) * order_ + b];
    return (*compose_)(a, b);
  }

  Element inv(Element a) const { return (*inverse_)[a]; }

  Element conj(Element h, Element g) const { return mul(mul(h, g), inv(h)); }

  Element commutator(Element g, Element h) const { return mul(mul(g, h), mul(inv(g), inv(h))); }

  Element pow(Element g, std::uint64_t k) const {
    Element result = identity_;
    Element base = g;
    while (k) {
      if (k & 1) result = mul(result, base);
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  std::size_t element_order(Element g) const {
    std::size_t k = 1;
    for (Element x = g; x != identity_; x = mul(x, g)) ++k;
    return k;
  }

  GroupTable relabeled(std::string label) const {
    GroupTable g = *this;
    g.label_ = std::move(label);
    return g;
  }

  void check_id(Element id) const {
    if (id >= order_) {
      throw InputError("element id " + std::to_string(id) + " out of range for order " +
                       std::to_string(order_));
    }
  }

 private:
  std::size_t order_ = 0;
  Element identity_ = 0;
  std::string label_;
  std::shared_ptr<const std::vector<Element>> inverse_;
  std::shared_ptr<const std::vector<Element>> table_;
  std::shared_ptr<const ComposeFn> compose_;
};

inline GroupTable trivial_group() {
  return GroupTable::make(
      1, 0, [](Element, Element) { return Element{0}; }, [](Element) { return Element{0}; }, "C1");
}

/// Checks the group axioms: identity, inverses and the Latin-square property
/// exhaustively, associativity exhaustively up to order 256 and on
/// `random_triples` seeded triples above.
inline bool satisfies_group_axioms(const GroupTable& g, std::size_t random_triples = 20000,
                                   std::uint64_t seed = 1) {
  const std::size_t n = g.order();
  const Element e = g.identity();
  std::vector<char> seen(n);
  for (Element a = 0; a < n; ++a) {
    if (g.mul(e, a) != a || g.mul(a, e) != a) return false;
    if (g.mul(a, g.inv(a)) != e) return false;
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) {
      const Element c = g.mul(a, b);
      if (c >= n || seen[c]) return false;
      seen[c] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) {
      const Element c = g.mul(b, a);
      if (c >= n || seen[c]) return false;
      seen[c] = 1;
    }
  }
  if (n <= 256) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (std::size_t i = 0; i < random_triples; ++i) {
    const Element a = pick(rng), b = pick(rng), c = pick(rng);
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  }
  return true;
}

namespace detail {

// Dimino-style closure: extends the subgroup `elems` (closed, listed in
// `list`) by `gen`, given the generators `gens` already used.
inline void dimino_extend(const GroupTable& g, ElementSet& elems, std::vector<Element>& list,
                          std::vector<Element>& gens, Element gen) {
  if (elems.contains(gen)) return;
  gens.push_back(gen);
  const std::vector<Element> old = list;
  std::vector<Element> reps{gen};
  auto add_coset = [&](Element rep) {
    for (Element h : old) {
      const Element x = g.mul(h, rep);
      if (elems.insert(x)) list.push_back(x);
    }
  };
  add_coset(gen);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (Element s : gens) {
      const Element x = g.mul(reps[i], s);
      if (!elems.contains(x)) {
        reps.push_back(x);
        add_coset(x);
      }
    }
  }
}

}  // namespace detail

/// Smallest subgroup containing `gens`.
inline ElementSet subgroup_closure(const GroupTable& g, const ElementSet& gens) {
  if (gens.parent_order() != g.order()) {
    throw InputError("generator set belongs to a group of order " +
                     std::to_string(gens.parent_order()) + ", expected " +
                     std::to_string(g.order()));
  }
  ElementSet elems(g.order());
  std::vector<Element> list{g.identity()};
  elems.insert(g.identity());
  std::vector<Element> used;
  gens.for_each([&](Element x) { detail::dimino_extend(g, elems, list, used, x); });
  elems.flag_subgroup();
  return elems;
}

inline ElementSet subgroup_closure(const GroupTable& g, const std::vector<Element>& gens) {
  for (Element x : gens) g.check_id(x);
  return subgroup_closure(g, ElementSet::from_ids(g.order(), gens));
}

/// A small generating set, chosen greedily in ascending id order.
inline std::vector<Element> generating_set(const GroupTable& g) {
  ElementSet elems(g.order());
  std::vector<Element> list{g.identity()};
  elems.insert(g.identity());
  std::vector<Element> gens;
  for (Element x = 0; x < g.order() && elems.size() < g.order(); ++x) {
    detail::dimino_extend(g, elems, list, gens, x);
  }
  return gens;
}

/// Verifies closure under multiplication and inversion.
inline bool is_subgroup(const GroupTable& g, const ElementSet& h) {
  if (h.parent_order() != g.order() || !h.contains(g.identity())) return false;
  const auto members = h.members();
  for (Element a : members) {
    if (!h.contains(g.inv(a))) return false;
    for (Element b : members) {
      if (!h.contains(g.mul(a, b))) return false;
    }
  }
  return true;
}

struct ConjugacyClass {
  Element representative;
  ElementSet members;
};

using ConjClassPartition = std::vector<ConjugacyClass>;

/// Orbit of `x` under conjugation by the generators `gens`.
inline ElementSet conjugacy_class_of(const GroupTable& g, Element x,
                                     const std::vector<Element>& gens) {
  ElementSet cls(g.order());
  std::vector<Element> queue{x};
  cls.insert(x);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : gens) {
      const Element y = g.conj(s, queue[i]);
      if (cls.insert(y)) queue.push_back(y);
    }
  }
  return cls;
}

/// Conjugacy classes, ordered by minimal member; each class is represented by
/// its minimal member.
inline ConjClassPartition conjugacy_classes(const GroupTable& g) {
  const auto gens = generating_set(g);
  ConjClassPartition out;
  ElementSet done(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    if (done.contains(x)) continue;
    ElementSet cls = conjugacy_class_of(g, x, gens);
    done.insert_all(cls);
    out.push_back({x, std::move(cls)});
  }
  return out;
}

inline ElementSet center(const GroupTable& g) {
  const auto gens = generating_set(g);
  ElementSet z(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    const bool central =
        std::all_of(gens.begin(), gens.end(), [&](Element s) { return g.mul(x, s) == g.mul(s, x); });
    if (central) z.insert(x);
  }
  z.flag_subgroup();
  return z;
}

/// Smallest normal subgroup containing `xs`.
inline ElementSet normal_closure(const GroupTable& g, const ElementSet& xs) {
  const auto gens = generating_set(g);
  ElementSet all(g.order());
  xs.for_each([&](Element x) {
    if (!all.contains(x)) all.insert_all(conjugacy_class_of(g, x, gens));
  });
  return subgroup_closure(g, all);
}

/// Commutator subgroup: the normal closure of commutators of generators.
inline ElementSet derived_subgroup(const GroupTable& g) {
  const auto gens = generating_set(g);
  ElementSet comms(g.order());
  for (Element a : gens)
    for (Element b : gens) comms.insert(g.commutator(a, b));
  return normal_closure(g, comms);
}

inline ElementSet join(const GroupTable& g, const ElementSet& a, const ElementSet& b) {
  ElementSet u = a;
  u.insert_all(b);
  return subgroup_closure(g, u);
}

inline void require_subgroup(const GroupTable& g, const ElementSet& h) {
  if (h.parent_order() != g.order()) throw InputError("element set belongs to another group");
  if (!h.flagged_subgroup() && !is_subgroup(g, h)) throw InputError("element set is not a subgroup");
}

inline bool is_normal(const GroupTable& g, const ElementSet& h) {
  require_subgroup(g, h);
  const auto gens = generating_set(g);
  bool normal = true;
  h.for_each([&](Element x) {
    if (!normal) return;
    for (Element s : gens) {
      if (!h.contains(g.conj(s, x))) {
        normal = false;
        return;
      }
    }
  });
  return normal;
}

/// All normal subgroups, duplicate-free, sorted by size and then member list.
///
/// Every normal subgroup is the join of the normal closures of the conjugacy
/// classes it contains, so closing the set of class closures under joins with
/// those closures reaches all of them.
inline std::vector<ElementSet> normal_subgroups(const GroupTable& g) {
  const auto classes = conjugacy_classes(g);
  std::vector<ElementSet> atoms;
  std::unordered_set<ElementSet, ElementSetHash> seen;

  ElementSet trivial(g.order());
  trivial.insert(g.identity());
  trivial.flag_subgroup();
  seen.insert(trivial);

  for (const auto& cls : classes) {
    if (cls.representative == g.identity()) continue;
    ElementSet closure = subgroup_closure(g, cls.members);
    if (seen.insert(closure).second) atoms.push_back(std::move(closure));
  }

  std::vector<ElementSet> all{trivial};
  all.insert(all.end(), atoms.begin(), atoms.end());
  for (std::size_t i = 1; i < all.size(); ++i) {
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if (atoms[j].is_subset_of(all[i])) continue;
      ElementSet joined = join(g, all[i], atoms[j]);
      if (seen.insert(joined).second) all.push_back(std::move(joined));
    }
  }
  std::sort(all.begin(), all.end(), canonical_less);
  return all;
}

/// Coset space of a normal subgroup: coset ids in order of first appearance
/// (the identity coset is 0) and one representative per coset.
struct CosetTable {
  std::vector<Element> coset_of;
  std::vector<Element> representative;
};

inline CosetTable cosets(const GroupTable& g, const ElementSet& n) {
  CosetTable t;
  t.coset_of.assign(g.order(), static_cast<Element>(g.order()));
  const auto members = n.members();
  auto label = [&](Element x) {
    const auto id = static_cast<Element>(t.representative.size());
    t.representative.push_back(x);
    for (Element m : members) t.coset_of[g.mul(x, m)] = id;
  };
  label(g.identity());
  for (Element x = 0; x < g.order(); ++x) {
    if (t.coset_of[x] == g.order()) label(x);
  }
  return t;
}

inline GroupTable quotient(const GroupTable& g, const ElementSet& n) {
  if (!is_normal(g, n)) throw InputError("quotient requires a normal subgroup");
  auto table = std::make_shared<const CosetTable>(cosets(g, n));
  const std::size_t order = table->representative.size();
  std::string label = "(" + g.label() + ")/N" + std::to_string(n.size());
  return GroupTable::make(
      order, 0,
      [g, table](Element a, Element b) {
        return table->coset_of[g.mul(table->representative[a], table->representative[b])];
      },
      [g, table](Element a) { return table->coset_of[g.inv(table->representative[a])]; },
      std::move(label));
}

inline bool is_cyclic(const GroupTable& g) {
  for (Element x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == g.order()) return true;
  }
  return false;
}

inline bool is_abelian(const GroupTable& g) {
  const auto gens = generating_set(g);
  for (Element a : gens)
    for (Element b : gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

inline bool is_abelian_subgroup(const GroupTable& g, const ElementSet& h) {
  const auto members = h.members();
  for (Element a : members)
    for (Element b : members)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

namespace detail {

inline bool is_power_of(std::size_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

inline bool is_prime_small(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace detail

/// One Sylow p-subgroup. Greedy growth: seed with the cyclic subgroup of a
/// p-element of maximal order (lowest id first), then repeatedly adjoin the
/// lowest-id p-element normalizing the current subgroup while the result stays
/// a p-group. Falls through to the next seed if growth stalls.
inline ElementSet sylow(const GroupTable& g, std::uint64_t p) {
  if (!detail::is_prime_small(p)) throw InputError(std::to_string(p) + " is not prime");
  if (g.order() % p != 0) {
    throw InputError(std::to_string(p) + " does not divide group order " +
                     std::to_string(g.order()));
  }
  std::size_t full = 1;
  for (std::size_t n = g.order(); n % p == 0; n /= p) full *= p;

  std::vector<std::pair<std::size_t, Element>> p_elements;
  for (Element x = 0; x < g.order(); ++x) {
    const std::size_t k = g.element_order(x);
    if (detail::is_power_of(k, p)) p_elements.emplace_back(k, x);
  }
  std::vector<std::pair<std::size_t, Element>> seeds = p_elements;
  std::stable_sort(seeds.begin(), seeds.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  for (const auto& [k, seed] : seeds) {
    ElementSet h = subgroup_closure(g, std::vector<Element>{seed});
    bool grew = true;
    while (h.size() < full && grew) {
      grew = false;
      for (const auto& [kx, x] : p_elements) {
        if (h.contains(x)) continue;
        bool normalizes = true;
        h.for_each([&](Element y) {
          if (normalizes && !h.contains(g.conj(x, y))) normalizes = false;
        });
        if (!normalizes) continue;
        ElementSet bigger = h;
        bigger.insert(x);
        bigger = subgroup_closure(g, bigger);
        if (!detail::is_power_of(bigger.size(), p)) continue;
        h = std::move(bigger);
        grew = true;
        break;
      }
    }
    if (h.size() == full) return h;
  }
  throw std::logic_error("sylow search failed to reach the full p-part");
}

/// Componentwise product; element (a, b) has id a * |G2| + b.
inline GroupTable direct_product(const GroupTable& g1, const GroupTable& g2,
                                 const EngineConfig& config = default_engine(),
                                 TableMode mode = TableMode::Auto) {
  const std::size_t n2 = g2.order();
  const std::size_t order = g1.order() * n2;
  if (order > config.max_order) {
    throw CapacityError("direct product of order " + std::to_string(order) +
                        " exceeds engine cap " + std::to_string(config.max_order));
  }
  const auto id = static_cast<Element>(g1.identity() * n2 + g2.identity());
  return GroupTable::make(
      order, id,
      [g1, g2, n2](Element a, Element b) {
        return static_cast<Element>(g1.mul(a / n2, b / n2) * n2 + g2.mul(a % n2, b % n2));
      },
      [g1, g2, n2](Element a) {
        return static_cast<Element>(g1.inv(a / n2) * n2 + g2.inv(a % n2));
      },
      g1.label() + "x" + g2.label(), mode, config);
}

}  // namespace leinster
