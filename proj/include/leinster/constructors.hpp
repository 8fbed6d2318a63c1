#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "leinster/error.hpp"
#include "leinster/group.hpp"
#include "leinster/numtheory.hpp"

namespace leinster {

using Permutation = std::vector<std::uint32_t>;

// Group families. Sizes follow the text syntax: Dihedral{m} has order 2m and
// prints as D<2m>; Dicyclic{m} has order 4m and prints as Dic<m>.
struct Cyclic {
  std::uint64_t n;
  bool operator==(const Cyclic&) const = default;
};
struct Abelian {
  std::vector<std::uint64_t> factors;
  bool operator==(const Abelian&) const = default;
};
struct Dihedral {
  std::uint64_t m;
  bool operator==(const Dihedral&) const = default;
};
struct Dicyclic {
  std::uint64_t m;
  bool operator==(const Dicyclic&) const = default;
};
// <x, y | x^a = y^b = 1, y x y^-1 = x^t>
struct Semidirect {
  std::uint64_t a, b, t;
  bool operator==(const Semidirect&) const = default;
};
// Same presentation as Semidirect, written SF(a,b,t): a canonical descriptor
// of a group of squarefree order.
struct SquarefreeDesc {
  std::uint64_t a, b, t;
  bool operator==(const SquarefreeDesc&) const = default;
};
struct PermGens {
  std::string name;  // alias such as "A4"; empty for an anonymous generator list
  std::vector<Permutation> gens;
  bool operator==(const PermGens&) const = default;
};

struct GroupSpec;
struct Product {
  std::vector<GroupSpec> factors;
  bool operator==(const Product&) const;
};

struct GroupSpec {
  std::variant<Cyclic, Abelian, Dihedral, Dicyclic, Semidirect, SquarefreeDesc, PermGens, Product>
      v;
  bool operator==(const GroupSpec&) const = default;
};

inline bool Product::operator==(const Product& o) const { return factors == o.factors; }

// ---------------------------------------------------------------------------
// Named permutation groups

inline Permutation perm_from_cycles(std::size_t degree,
                                    const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  }
  return p;
}

inline const std::map<std::string, std::vector<Permutation>>& named_perm_groups() {
  static const std::map<std::string, std::vector<Permutation>> table = {
      {"S3", {perm_from_cycles(3, {{0, 1, 2}}), perm_from_cycles(3, {{0, 1}})}},
      {"A4", {perm_from_cycles(4, {{0, 1, 2}}), perm_from_cycles(4, {{0, 1}, {2, 3}})}},
      {"S4", {perm_from_cycles(4, {{0, 1, 2, 3}}), perm_from_cycles(4, {{0, 1}})}},
      {"A5", {perm_from_cycles(5, {{0, 1, 2}}), perm_from_cycles(5, {{0, 1, 2, 3, 4}})}},
  };
  return table;
}

inline GroupSpec named(const std::string& name) {
  const auto& table = named_perm_groups();
  auto it = table.find(name);
  if (it == table.end()) throw InputError("unknown named group '" + name + "'");
  return GroupSpec{PermGens{name, it->second}};
}

inline GroupSpec cyclic(std::uint64_t n) { return GroupSpec{Cyclic{n}}; }
inline GroupSpec dihedral(std::uint64_t m) { return GroupSpec{Dihedral{m}}; }
inline GroupSpec dicyclic(std::uint64_t m) { return GroupSpec{Dicyclic{m}}; }
inline GroupSpec semidirect(std::uint64_t a, std::uint64_t b, std::uint64_t t) {
  return GroupSpec{Semidirect{a, b, t}};
}
inline GroupSpec abelian(std::vector<std::uint64_t> factors) {
  return GroupSpec{Abelian{std::move(factors)}};
}
inline GroupSpec product(std::vector<GroupSpec> factors) {
  return GroupSpec{Product{std::move(factors)}};
}

// ---------------------------------------------------------------------------
// Labels

std::string to_label(const GroupSpec& spec);

namespace detail {

inline std::string perm_to_text(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    std::uint32_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace detail

inline std::string to_label(const GroupSpec& spec) {
  struct Visitor {
    std::string operator()(const Cyclic& c) const { return "C" + std::to_string(c.n); }
    std::string operator()(const Abelian& a) const {
      std::string out = "Ab(";
      for (std::size_t i = 0; i < a.factors.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(a.factors[i]);
      }
      return out + ")";
    }
    std::string operator()(const Dihedral& d) const { return "D" + std::to_string(2 * d.m); }
    std::string operator()(const Dicyclic& d) const { return "Dic" + std::to_string(d.m); }
    std::string operator()(const Semidirect& s) const {
      return "SD(" + std::to_string(s.a) + "," + std::to_string(s.b) + "," + std::to_string(s.t) +
             ")";
    }
    std::string operator()(const SquarefreeDesc& s) const {
      return "SF(" + std::to_string(s.a) + "," + std::to_string(s.b) + "," + std::to_string(s.t) +
             ")";
    }
    std::string operator()(const PermGens& p) const {
      if (!p.name.empty()) return p.name;
      std::string out = "Perm[";
      for (std::size_t i = 0; i < p.gens.size(); ++i) {
        if (i) out += ';';
        out += detail::perm_to_text(p.gens[i]);
      }
      return out + "]";
    }
    std::string operator()(const Product& p) const {
      std::string out;
      for (std::size_t i = 0; i < p.factors.size(); ++i) {
        if (i) out += 'x';
        out += to_label(p.factors[i]);
      }
      return out;
    }
  };
  return std::visit(Visitor{}, spec.v);
}

// ---------------------------------------------------------------------------
// Parser for the text syntax: C6, D12, Dic5, SD(7,8,6), SF(15,2,11), Ab(2,2),
// A4, S3, Perm[(0 1 2);(0 1)(2 3)], and products joined by 'x'.

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : s_(text) {}

  GroupSpec parse() {
    std::vector<GroupSpec> factors{factor()};
    while (pos_ < s_.size() && s_[pos_] == 'x') {
      ++pos_;
      factors.push_back(factor());
    }
    if (pos_ != s_.size()) fail("unexpected character");
    if (factors.size() == 1) return factors.front();
    return product(std::move(factors));
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot parse group spec '" + std::string(s_) + "' at position " +
                     std::to_string(pos_) + ": " + why);
  }

  bool accept(std::string_view word) {
    if (s_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t number() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (UINT64_MAX - digit) / 10) fail("number too large");
      v = v * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  std::vector<std::uint64_t> number_list() {
    expect('(');
    std::vector<std::uint64_t> out{number()};
    while (pos_ < s_.size() && s_[pos_] == ',') {
      ++pos_;
      out.push_back(number());
    }
    expect(')');
    return out;
  }

  std::array<std::uint64_t, 3> triple() {
    auto v = number_list();
    if (v.size() != 3) fail("expected three parameters");
    return {v[0], v[1], v[2]};
  }

  Permutation permutation() {
    std::vector<std::vector<std::uint32_t>> cycles;
    std::uint32_t degree = 0;
    while (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      std::vector<std::uint32_t> cycle;
      while (pos_ < s_.size() && s_[pos_] != ')') {
        if (s_[pos_] == ' ') {
          ++pos_;
          continue;
        }
        const auto point = static_cast<std::uint32_t>(number());
        degree = std::max(degree, point + 1);
        cycle.push_back(point);
      }
      expect(')');
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
    }
    return perm_from_cycles(degree, cycles);
  }

  GroupSpec factor() {
    if (accept("Dic")) return dicyclic(number());
    if (accept("SD")) {
      auto [a, b, t] = triple();
      return semidirect(a, b, t);
    }
    if (accept("SF")) {
      auto [a, b, t] = triple();
      return GroupSpec{SquarefreeDesc{a, b, t}};
    }
    if (accept("Ab")) return abelian(number_list());
    if (accept("Perm[")) {
      std::vector<Permutation> gens;
      if (pos_ < s_.size() && s_[pos_] != ']') {
        gens.push_back(permutation());
        while (pos_ < s_.size() && s_[pos_] == ';') {
          ++pos_;
          gens.push_back(permutation());
        }
      }
      expect(']');
      // Pad every generator to a common degree.
      std::size_t degree = 0;
      for (const auto& g : gens) degree = std::max(degree, g.size());
      for (auto& g : gens) {
        for (auto i = static_cast<std::uint32_t>(g.size()); i < degree; ++i) g.push_back(i);
      }
      return GroupSpec{PermGens{"", std::move(gens)}};
    }
    for (const auto& [name, gens] : named_perm_groups()) {
      if (accept(name)) return GroupSpec{PermGens{name, gens}};
    }
    if (accept("C")) return cyclic(number());
    if (accept("D")) {
      const std::uint64_t order = number();
      if (order < 2 || order % 2) fail("dihedral order must be even and at least 2");
      return dihedral(order / 2);
    }
    fail("unknown group family");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GroupSpec parse_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

// ---------------------------------------------------------------------------
// Orders and validation

std::uint64_t spec_order(const GroupSpec& spec);

namespace detail {

// Orders of groups given by permutation generators require the closure; those
// are computed by build(). Everything else is closed form.
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) throw CapacityError("group order overflows 64 bits");
  return a * b;
}

// Checks x^A = 1, y^B = x^s, y x y^-1 = x^t is a consistent presentation of a
// group of order A*B.
inline void check_metacyclic(std::uint64_t A, std::uint64_t B, std::uint64_t t, std::uint64_t s) {
  if (A == 0 || B == 0) throw InputError("metacyclic parameters must be positive");
  if (A > 1 && std::gcd(t % A, A) != 1) {
    throw InputError("t = " + std::to_string(t) + " is not a unit mod " + std::to_string(A));
  }
  if (nt::pow_mod(t, B, A) != 1 % A) {
    throw InputError("t^b != 1 (mod a) for a=" + std::to_string(A) + ", b=" + std::to_string(B) +
                     ", t=" + std::to_string(t));
  }
  if (nt::mul_mod(s % A, (t + A - 1) % A, A) != 0) throw InputError("y^b must be central");
}

}  // namespace detail

inline void validate_spec(const GroupSpec& spec) {
  struct Visitor {
    void operator()(const Cyclic& c) const {
      if (c.n == 0) throw InputError("cyclic order must be positive");
    }
    void operator()(const Abelian& a) const {
      for (auto f : a.factors)
        if (f == 0) throw InputError("abelian factor must be positive");
    }
    void operator()(const Dihedral& d) const {
      if (d.m == 0) throw InputError("dihedral parameter must be at least 1");
    }
    void operator()(const Dicyclic& d) const {
      if (d.m < 2) throw InputError("dicyclic parameter must be at least 2");
    }
    void operator()(const Semidirect& s) const {
      if (s.a == 0 || s.b == 0) throw InputError("semidirect parameters must be positive");
      if (std::gcd(s.a, s.b) != 1) throw InputError("semidirect requires gcd(a, b) = 1");
      detail::check_metacyclic(s.a, s.b, s.t, 0);
    }
    void operator()(const SquarefreeDesc& s) const {
      if (s.a == 0 || s.b == 0) throw InputError("descriptor parameters must be positive");
      if (std::gcd(s.a, s.b) != 1) throw InputError("descriptor requires gcd(a, b) = 1");
      if (!nt::is_squarefree(s.a * s.b)) throw InputError("descriptor order is not squarefree");
      if (s.b == 1 && s.t % std::max<std::uint64_t>(s.a, 1) != 1 % s.a) {
        throw InputError("descriptor with b = 1 requires t = 1");
      }
      detail::check_metacyclic(s.a, s.b, s.t, 0);
      if (nt::mult_order(static_cast<nt::i64>(s.t), s.a) != s.b) {
        throw InputError("descriptor action must be faithful: ord(t mod a) != b");
      }
    }
    void operator()(const PermGens& p) const {
      for (const auto& g : p.gens) {
        std::vector<bool> hit(g.size(), false);
        for (auto x : g) {
          if (x >= g.size() || hit[x]) throw InputError("invalid permutation");
          hit[x] = true;
        }
      }
    }
    void operator()(const Product& p) const {
      for (const auto& f : p.factors) validate_spec(f);
    }
  };
  std::visit(Visitor{}, spec.v);
}

// ---------------------------------------------------------------------------
// Builders

namespace detail {

// Elements x^i y^j with id i*B + j, for x^A = 1, y^B = x^s, y x y^-1 = x^t.
inline GroupTable metacyclic_table(std::uint64_t A, std::uint64_t B, std::uint64_t t,
                                   std::uint64_t s, std::string label, TableMode mode,
                                   const EngineConfig& config) {
  const std::uint64_t order = checked_mul(A, B);
  if (order > config.max_order) {
    throw CapacityError("group " + label + " of order " + std::to_string(order) +
                        " exceeds engine cap " + std::to_string(config.max_order));
  }
  auto tpow = std::make_shared<std::vector<std::uint64_t>>(B);
  for (std::uint64_t j = 0; j < B; ++j) (*tpow)[j] = nt::pow_mod(t, j, A);
  s %= A;
  auto compose = [A, B, s, tpow](Element u, Element v) {
    const std::uint64_t i = u / B, j = u % B, k = v / B, l = v % B;
    std::uint64_t x = (i + nt::mul_mod(k, (*tpow)[j], A)) % A;
    std::uint64_t y = j + l;
    if (y >= B) {
      y -= B;
      x = (x + s) % A;
    }
    return static_cast<Element>(x * B + y);
  };
  auto inverse = [A, B, s, tpow](Element u) {
    const std::uint64_t i = u / B, j = u % B;
    if (j == 0) return static_cast<Element>(((A - i) % A) * B);
    // y^-j x^-i = x^(-s - i t^(B-j)) y^(B-j)
    const std::uint64_t x = (2 * A - s - nt::mul_mod(i, (*tpow)[B - j], A)) % A;
    return static_cast<Element>(x * B + (B - j));
  };
  return GroupTable::make(order, 0, compose, inverse, std::move(label), mode, config);
}

inline GroupTable perm_closure(const std::vector<Permutation>& gens, std::string label,
                               TableMode mode, const EngineConfig& config) {
  std::size_t degree = 0;
  for (const auto& g : gens) degree = std::max(degree, g.size());
  auto pad = [degree](Permutation p) {
    for (auto i = static_cast<std::uint32_t>(p.size()); i < degree; ++i) p.push_back(i);
    return p;
  };
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);

  auto elements = std::make_shared<std::vector<Permutation>>();
  auto index = std::make_shared<std::map<Permutation, Element>>();
  elements->push_back(id);
  (*index)[id] = 0;
  std::vector<Permutation> padded;
  for (const auto& g : gens) padded.push_back(pad(g));

  // Composition convention: (p * q)(i) = q(p(i)), i.e. apply p first.
  auto compose_perm = [degree](const Permutation& p, const Permutation& q) {
    Permutation r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = q[p[i]];
    return r;
  };
  for (std::size_t i = 0; i < elements->size(); ++i) {
    for (const auto& g : padded) {
      Permutation next = compose_perm((*elements)[i], g);
      if (index->count(next)) continue;
      if (elements->size() + 1 > config.max_order) {
        throw CapacityError("permutation group closure exceeds engine cap " +
                            std::to_string(config.max_order));
      }
      (*index)[next] = static_cast<Element>(elements->size());
      elements->push_back(std::move(next));
    }
  }
  auto compose = [elements, index, compose_perm](Element a, Element b) {
    return index->at(compose_perm((*elements)[a], (*elements)[b]));
  };
  auto inverse = [elements, index, degree](Element a) {
    const Permutation& p = (*elements)[a];
    Permutation inv(degree);
    for (std::uint32_t i = 0; i < degree; ++i) inv[p[i]] = i;
    return index->at(inv);
  };
  return GroupTable::make(elements->size(), 0, compose, inverse, std::move(label), mode, config);
}

}  // namespace detail

/// Closure of permutations of {0..d-1} under composition. The identity
/// permutation is element 0; an empty list gives the trivial group.
inline GroupTable perm_group(const std::vector<Permutation>& generators,
                             const EngineConfig& config = default_engine(),
                             TableMode mode = TableMode::Auto) {
  GroupSpec spec{PermGens{"", generators}};
  validate_spec(spec);
  return detail::perm_closure(generators, to_label(spec), mode, config);
}

inline GroupTable build(const GroupSpec& spec, const EngineConfig& config = default_engine(),
                        TableMode mode = TableMode::Auto) {
  validate_spec(spec);
  const std::string label = to_label(spec);
  struct Visitor {
    const EngineConfig& config;
    TableMode mode;
    const std::string& label;

    GroupTable operator()(const Cyclic& c) const {
      return detail::metacyclic_table(c.n, 1, 1, 0, label, mode, config);
    }
    GroupTable operator()(const Abelian& a) const {
      GroupTable g = trivial_group();
      for (auto f : a.factors) {
        g = direct_product(g, detail::metacyclic_table(f, 1, 1, 0, "C" + std::to_string(f),
                                                       TableMode::Auto, config),
                           config, mode);
      }
      return g.relabeled(label);
    }
    GroupTable operator()(const Dihedral& d) const {
      return detail::metacyclic_table(d.m, 2, d.m - 1, 0, label, mode, config);
    }
    GroupTable operator()(const Dicyclic& d) const {
      return detail::metacyclic_table(2 * d.m, 2, 2 * d.m - 1, d.m, label, mode, config);
    }
    GroupTable operator()(const Semidirect& s) const {
      return detail::metacyclic_table(s.a, s.b, s.t, 0, label, mode, config);
    }
    GroupTable operator()(const SquarefreeDesc& s) const {
      return detail::metacyclic_table(s.a, s.b, s.t, 0, label, mode, config);
    }
    GroupTable operator()(const PermGens& p) const {
      return detail::perm_closure(p.gens, label, mode, config);
    }
    GroupTable operator()(const Product& p) const {
      if (p.factors.empty()) return trivial_group().relabeled(label);
      GroupTable g = build(p.factors.front(), config);
      for (std::size_t i = 1; i < p.factors.size(); ++i) {
        g = direct_product(g, build(p.factors[i], config), config, mode);
      }
      return g.relabeled(label);
    }
  };
  return std::visit(Visitor{config, mode, label}, spec.v);
}

/// Order of the group a spec describes. Permutation groups are closed to find
/// their order.
inline std::uint64_t spec_order(const GroupSpec& spec) {
  struct Visitor {
    std::uint64_t operator()(const Cyclic& c) const { return c.n; }
    std::uint64_t operator()(const Abelian& a) const {
      std::uint64_t n = 1;
      for (auto f : a.factors) n = detail::checked_mul(n, f);
      return n;
    }
    std::uint64_t operator()(const Dihedral& d) const { return detail::checked_mul(2, d.m); }
    std::uint64_t operator()(const Dicyclic& d) const { return detail::checked_mul(4, d.m); }
    std::uint64_t operator()(const Semidirect& s) const { return detail::checked_mul(s.a, s.b); }
    std::uint64_t operator()(const SquarefreeDesc& s) const {
      return detail::checked_mul(s.a, s.b);
    }
    std::uint64_t operator()(const PermGens& p) const {
      return detail::perm_closure(p.gens, "", TableMode::OnDemand, default_engine()).order();
    }
    std::uint64_t operator()(const Product& p) const {
      std::uint64_t n = 1;
      for (const auto& f : p.factors) n = detail::checked_mul(n, spec_order(f));
      return n;
    }
  };
  return std::visit(Visitor{}, spec.v);
}

}  // namespace leinster
