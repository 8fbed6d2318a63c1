#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "leinster/error.hpp"
#include "leinster/numtheory.hpp"
#include "leinster/rational.hpp"

namespace leinster::nt {

using i128 = __int128;

/// Prime variables p < q < r < s, by slot.
enum Var : int { P = 0, Q = 1, R = 2, S = 3 };
inline constexpr std::array<const char*, 4> kVarNames{"p", "q", "r", "s"};

using Assignment = std::array<i128, 4>;
using Poly = std::function<i128(const Assignment&)>;
using Solution = std::vector<std::uint64_t>;

/// A prime-variable equation stored twice: solved for its last free variable
/// (the form the scanner uses) and unreduced (the form the oracle checks).
struct EquationSpec {
  std::string id;
  std::string unreduced_text;
  std::string solved_text;
  /// Free variables in order; the last one is the dependent variable.
  std::vector<Var> free;
  /// Slots pinned to a fixed prime, e.g. p = 2.
  std::vector<std::pair<Var, std::uint64_t>> fixed;
  /// Per-slot lower limits beyond ordering (e.g. q >= 5 when 3 is excluded).
  std::array<std::uint64_t, 4> lower{2, 2, 2, 2};
  /// Largest exponent of each slot in any monomial; drives the overflow guard.
  std::array<unsigned, 4> degree{0, 0, 0, 0};
  Poly numerator, denominator;
  Poly lhs, rhs;
  /// Upper limits used when the claim runs with default settings.
  std::array<std::uint64_t, 4> default_bounds{0, 0, 0, 0};
  /// Solutions the claim asserts within the default bounds.
  std::vector<Solution> expected;
  /// Claim wording in formula form.
  std::string claim_text;

  std::vector<Var> slots() const {
    std::vector<Var> out;
    for (int v = 0; v < 4; ++v) {
      bool used = false;
      for (auto f : free) used |= f == v;
      for (auto& [f, val] : fixed) used |= f == v;
      if (used) out.push_back(static_cast<Var>(v));
    }
    return out;
  }
};

using Bounds = std::array<std::uint64_t, 4>;

namespace detail {

inline Assignment fixed_assignment(const EquationSpec& eq) {
  Assignment a{0, 0, 0, 0};
  for (auto& [v, val] : eq.fixed) a[v] = static_cast<i128>(val);
  return a;
}

/// Largest value taken by the slot below v that is in use, or 0.
inline i128 previous_value(const EquationSpec& eq, const Assignment& a, Var v) {
  for (int u = v - 1; u >= 0; --u)
    if (a[u] != 0) return a[u];
  return 0;
}

}  // namespace detail

/// Rejects bounds whose monomials could leave the exact integer range.
inline void check_overflow(const EquationSpec& eq, const Bounds& bounds) {
  i128 magnitude = 64;
  constexpr i128 limit = static_cast<i128>(1) << 62;
  for (auto v : eq.slots()) {
    i128 b = 1;
    for (auto& [f, val] : eq.fixed)
      if (f == v) b = static_cast<i128>(val);
    bool is_free = false;
    for (auto f : eq.free) is_free |= f == v;
    if (is_free) b = static_cast<i128>(std::max<std::uint64_t>(bounds[v], 2));
    for (unsigned k = 0; k < eq.degree[v]; ++k) {
      magnitude *= b;
      if (magnitude > limit) {
        throw InputError("bounds for " + eq.id + " could overflow 64-bit exact arithmetic");
      }
    }
  }
}

/// All prime tuples (free variables, in order) within bounds that satisfy the
/// solved form: positive denominator, integral prime result, strict ordering.
/// Sorted lexicographically.
inline std::vector<Solution> scan_equation(const EquationSpec& eq, const Bounds& bounds) {
  check_overflow(eq, bounds);
  std::vector<Solution> out;
  if (eq.free.empty()) return out;
  const Var dep = eq.free.back();
  std::uint64_t top = 0;
  for (std::size_t i = 0; i + 1 < eq.free.size(); ++i) top = std::max(top, bounds[eq.free[i]]);
  const auto primes = primes_up_to(top);

  Assignment a = detail::fixed_assignment(eq);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx + 1 == eq.free.size()) {
      const i128 den = eq.denominator(a);
      if (den <= 0) return;
      const i128 num = eq.numerator(a);
      if (num <= 0 || num % den != 0) return;
      const i128 val = num / den;
      if (val > static_cast<i128>(bounds[dep]) || val < static_cast<i128>(eq.lower[dep])) return;
      if (val <= detail::previous_value(eq, a, dep)) return;
      for (int u = dep + 1; u < 4; ++u)
        if (a[u] != 0 && val >= a[u]) return;
      if (!is_prime(static_cast<std::uint64_t>(val))) return;
      Solution sol;
      for (std::size_t i = 0; i + 1 < eq.free.size(); ++i) sol.push_back(static_cast<std::uint64_t>(a[eq.free[i]]));
      sol.push_back(static_cast<std::uint64_t>(val));
      out.push_back(std::move(sol));
      return;
    }
    const Var v = eq.free[idx];
    for (auto p : primes) {
      if (p > bounds[v]) break;
      if (p < eq.lower[v] || static_cast<i128>(p) <= detail::previous_value(eq, a, v)) continue;
      bool ok = true;
      for (int u = v + 1; u < 4; ++u)
        if (a[u] != 0 && static_cast<i128>(p) >= a[u]) ok = false;
      if (!ok) continue;
      a[v] = p;
      rec(idx + 1);
      a[v] = 0;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Solution> scan_equation(const EquationSpec& eq) { return scan_equation(eq, eq.default_bounds); }

/// Checks a tuple (free variables, in order) against the unreduced form.
inline bool satisfies_unreduced(const EquationSpec& eq, const Solution& sol) {
  Assignment a = detail::fixed_assignment(eq);
  for (std::size_t i = 0; i < eq.free.size(); ++i) a[eq.free[i]] = sol.at(i);
  return eq.lhs(a) == eq.rhs(a);
}

// Registry ------------------------------------------------------------------

namespace detail {

inline i128 p_(const Assignment& a) { return a[P]; }
inline i128 q_(const Assignment& a) { return a[Q]; }
inline i128 r_(const Assignment& a) { return a[R]; }
inline i128 s_(const Assignment& a) { return a[S]; }

inline EquationSpec pqr_equation(std::string id, std::string unreduced, std::string solved, Poly num,
                                 Poly den, Poly rhs, std::uint64_t p_bound, std::string claim) {
  EquationSpec e;
  e.id = std::move(id);
  e.unreduced_text = std::move(unreduced);
  e.solved_text = std::move(solved);
  e.free = {P, Q, R};
  e.degree = {2, 1, 1, 0};
  e.numerator = std::move(num);
  e.denominator = std::move(den);
  e.lhs = [](const Assignment& a) { return a[P] * a[P] * a[Q] * a[R]; };
  e.rhs = std::move(rhs);
  e.default_bounds = {p_bound, 10000, 10000, 0};
  e.claim_text = std::move(claim);
  return e;
}

}  // namespace detail

/// Every registered equation, in a fixed order.
inline const std::vector<EquationSpec>& equation_registry() {
  static const std::vector<EquationSpec> registry = [] {
    using detail::pqr_equation;
    std::vector<EquationSpec> out;
    const std::string none = "no prime solutions";
    const std::string none_p7 = "no prime solutions with p <= 7";

    {
      EquationSpec e;
      e.id = "lemma21-c4";
      e.unreduced_text = "8qr = 7(1+r+qr), q > 3";
      e.solved_text = "r = 7/(q-7)";
      e.free = {Q, R};
      e.fixed = {{P, 2}};
      e.lower = {2, 5, 2, 2};
      e.degree = {0, 1, 1, 0};
      e.numerator = [](const Assignment&) -> i128 { return 7; };
      e.denominator = [](const Assignment& a) { return a[Q] - 7; };
      e.lhs = [](const Assignment& a) { return 8 * a[Q] * a[R]; };
      e.rhs = [](const Assignment& a) { return 7 * (1 + a[R] + a[Q] * a[R]); };
      e.default_bounds = {0, 10000, 10000, 0};
      e.claim_text = none;
      out.push_back(std::move(e));
    }
    // Common denominator of the |G'| = r cases.
    auto den22 = [](const Assignment& a) {
      const i128 p = a[P], q = a[Q];
      return p * p * q - p * q - p * p - p - q - 1;
    };
    out.push_back(pqr_equation(
        "lemma22-a", "p^2qr = 1+p+q+pq+r+pr+qr+p^2r+pqr", "r = (1+p)(1+q)/(p^2q-pq-p^2-p-q-1)",
        [](const Assignment& a) { return (1 + a[P]) * (1 + a[Q]); }, den22,
        [](const Assignment& a) {
          const i128 p = a[P], q = a[Q], r = a[R];
          return 1 + p + q + p * q + r + p * r + q * r + p * p * r + p * q * r;
        },
        100, none));
    out.push_back(pqr_equation(
        "lemma22-b1", "p^2qr = 1+p+r+pr+qr+p^2r+pqr", "r = (1+p)/(p^2q-pq-p^2-p-q-1)",
        [](const Assignment& a) { return 1 + a[P]; }, den22,
        [](const Assignment& a) {
          const i128 p = a[P], q = a[Q], r = a[R];
          return 1 + p + r + p * r + q * r + p * p * r + p * q * r;
        },
        100, none));
    out.push_back(pqr_equation(
        "lemma22-b2", "p^2qr = 1+q+r+pr+qr+p^2r+pqr", "r = (1+q)/(p^2q-pq-p^2-p-q-1)",
        [](const Assignment& a) { return 1 + a[Q]; }, den22,
        [](const Assignment& a) {
          const i128 p = a[P], q = a[Q], r = a[R];
          return 1 + q + r + p * r + q * r + p * p * r + p * q * r;
        },
        100, none));
    out.push_back(pqr_equation(
        "lemma23", "p^2qr = 1+q+r+pq+pr+qr+pqr", "r = (1+(p+1)q)/(q(p^2-p-1)-(p+1))",
        [](const Assignment& a) { return 1 + (a[P] + 1) * a[Q]; },
        [](const Assignment& a) { return a[Q] * (a[P] * a[P] - a[P] - 1) - (a[P] + 1); },
        [](const Assignment& a) {
          const i128 p = a[P], q = a[Q], r = a[R];
          return 1 + q + r + p * q + p * r + q * r + p * q * r;
        },
        7, none_p7));
    out.push_back(pqr_equation(
        "lemma23-b", "p^2qr = (1+p)(1+q)(1+r)", "r = (1+p)(1+q)/(p^2q-(1+p)(1+q))",
        [](const Assignment& a) { return (1 + a[P]) * (1 + a[Q]); },
        [](const Assignment& a) { return a[P] * a[P] * a[Q] - (1 + a[P]) * (1 + a[Q]); },
        [](const Assignment& a) { return (1 + a[P]) * (1 + a[Q]) * (1 + a[R]); }, 100, none));
    // The denominator here is derived from the unreduced form; see the tests
    // for the variant without the factor q on p^2.
    out.push_back(pqr_equation(
        "lemma24", "p^2qr = 1+p+r+pq+pr+p^2q+pqr", "r = (p^2q+pq+p+1)/(p^2q-pq-p-1)",
        [](const Assignment& a) {
          const i128 p = a[P], q = a[Q];
          return p * p * q + p * q + p + 1;
        },
        [](const Assignment& a) {
          const i128 p = a[P], q = a[Q];
          return p * p * q - p * q - p - 1;
        },
        [](const Assignment& a) {
          const i128 p = a[P], q = a[Q], r = a[R];
          return 1 + p + r + p * q + p * r + p * p * q + p * q * r;
        },
        7, none_p7));
    out.push_back(pqr_equation(
        "lemma25", "p^2qr = 1+p+q+pq+pr+p^2r+pqr", "r = (1+p)(1+q)/(p^2q-pq-p^2-p)",
        [](const Assignment& a) { return (1 + a[P]) * (1 + a[Q]); },
        [](const Assignment& a) {
          const i128 p = a[P], q = a[Q];
          return p * p * q - p * q - p * p - p;
        },
        [](const Assignment& a) {
          const i128 p = a[P], q = a[Q], r = a[R];
          return 1 + p + q + p * q + p * r + p * p * r + p * q * r;
        },
        100, none));
    out.push_back(pqr_equation(
        "thm26-nor", "p^2qr = 1+p+q+pq+qr+p^2q+pqr", "r = (1+p+q+pq+p^2q)/(p^2q-pq-q)",
        [](const Assignment& a) {
          const i128 p = a[P], q = a[Q];
          return 1 + p + q + p * q + p * p * q;
        },
        [](const Assignment& a) {
          const i128 p = a[P], q = a[Q];
          return p * p * q - p * q - q;
        },
        [](const Assignment& a) {
          const i128 p = a[P], q = a[Q], r = a[R];
          return 1 + p + q + p * q + q * r + p * p * q + p * q * r;
        },
        100, none));
    auto num26 = [](const Assignment& a) {
      const i128 p = a[P], q = a[Q];
      return p * p * q + p * q + q + 1;
    };
    out.push_back(pqr_equation(
        "thm26-noP-a", "p^2qr = 1+q+r+pr+pq+qr+p^2q+pqr", "r = (p^2q+pq+q+1)/(p^2q-pq-p-q-1)", num26,
        [](const Assignment& a) {
          const i128 p = a[P], q = a[Q];
          return p * p * q - p * q - p - q - 1;
        },
        [](const Assignment& a) {
          const i128 p = a[P], q = a[Q], r = a[R];
          return 1 + q + r + p * r + p * q + q * r + p * p * q + p * q * r;
        },
        7, none_p7));
    out.push_back(pqr_equation(
        "thm26-noP-b", "p^2qr = 1+q+r+pq+qr+p^2q+pqr", "r = (p^2q+pq+q+1)/(p^2q-pq-q-1)", num26,
        [](const Assignment& a) {
          const i128 p = a[P], q = a[Q];
          return p * p * q - p * q - q - 1;
        },
        [](const Assignment& a) {
          const i128 p = a[P], q = a[Q], r = a[R];
          return 1 + q + r + p * q + q * r + p * p * q + p * q * r;
        },
        7, none_p7));
    {
      auto e = pqr_equation(
          "thm26-withP", "p^2qr = 1+p+q+r+pq+qr+pr+p^2q+pqr", "r = (1+p+q+pq+p^2q)/(p^2q-pq-p-q-1)",
          [](const Assignment& a) {
            const i128 p = a[P], q = a[Q];
            return 1 + p + q + p * q + p * p * q;
          },
          [](const Assignment& a) {
            const i128 p = a[P], q = a[Q];
            return p * p * q - p * q - p - q - 1;
          },
          [](const Assignment& a) {
            const i128 p = a[P], q = a[Q], r = a[R];
            return 1 + p + q + r + p * q + q * r + p * r + p * p * q + p * q * r;
          },
          100, "every solution has p = 2: exactly (2,5,19) and (2,7,13)");
      e.expected = {{2, 5, 19}, {2, 7, 13}};
      out.push_back(std::move(e));
    }
    {
      EquationSpec e;
      e.id = "thm26-final";
      e.unreduced_text = "qr = 3+7q+3r";
      e.solved_text = "r = (3+7q)/(q-3)";
      e.free = {Q, R};
      e.fixed = {{P, 2}};
      e.degree = {0, 1, 1, 0};
      e.numerator = [](const Assignment& a) { return 3 + 7 * a[Q]; };
      e.denominator = [](const Assignment& a) { return a[Q] - 3; };
      e.lhs = [](const Assignment& a) { return a[Q] * a[R]; };
      e.rhs = [](const Assignment& a) { return 3 + 7 * a[Q] + 3 * a[R]; };
      e.default_bounds = {0, 1000000, 1000000, 0};
      e.expected = {{5, 19}, {7, 13}};
      e.claim_text = "exactly (q,r) = (5,19) and (7,13)";
      out.push_back(std::move(e));
    }

    // Order 2*3*r*s: p = 2, q = 3 pinned, r < s free.
    auto rs_equation = [&](std::string id, std::string unreduced, std::string solved, Poly num, Poly den,
                           Poly lhs, Poly rhs) {
      EquationSpec e;
      e.id = std::move(id);
      e.unreduced_text = std::move(unreduced);
      e.solved_text = std::move(solved);
      e.free = {R, S};
      e.fixed = {{P, 2}, {Q, 3}};
      e.degree = {0, 0, 1, 1};
      e.numerator = std::move(num);
      e.denominator = std::move(den);
      e.lhs = std::move(lhs);
      e.rhs = std::move(rhs);
      e.default_bounds = {0, 0, 10000, 10000};
      e.claim_text = none;
      return e;
    };
    auto six_rs = [](const Assignment& a) { return 6 * a[R] * a[S]; };
    auto twelve_rs = [](const Assignment& a) { return 12 * a[R] * a[S]; };
    out.push_back(rs_equation(
        "rem35-e1", "6rs = 1+3rs+2*3r+3r+rs+r+2*3+3", "s = (5+5r)/r",
        [](const Assignment& a) { return 5 + 5 * a[R]; }, detail::r_, six_rs,
        [](const Assignment& a) {
          const i128 r = a[R], s = a[S];
          return 1 + 3 * r * s + 6 * r + 3 * r + r * s + r + 6 + 3;
        }));
    out.push_back(rs_equation(
        "rem35-e2", "6rs = 1+3rs+2*3s+3s+rs+s+2*3+3", "s = 5/(r-5)",
        [](const Assignment&) -> i128 { return 5; }, [](const Assignment& a) { return a[R] - 5; }, six_rs,
        [](const Assignment& a) {
          const i128 r = a[R], s = a[S];
          return 1 + 3 * r * s + 6 * s + 3 * s + r * s + s + 6 + 3;
        }));
    out.push_back(rs_equation(
        "rem37-b1", "12rs = (s+1)(1+r+3+3r+6r)", "s = (4+10r)/(2r-4)",
        [](const Assignment& a) { return 4 + 10 * a[R]; }, [](const Assignment& a) { return 2 * a[R] - 4; },
        twelve_rs, [](const Assignment& a) { return (a[S] + 1) * (1 + a[R] + 3 + 3 * a[R] + 6 * a[R]); }));
    out.push_back(rs_equation(
        "rem37-b2", "12rs = (r+1)(1+s+3+3s+6s)", "s = (4r+4)/(2r-10)",
        [](const Assignment& a) { return 4 * a[R] + 4; }, [](const Assignment& a) { return 2 * a[R] - 10; },
        twelve_rs, [](const Assignment& a) { return (a[R] + 1) * (1 + a[S] + 3 + 3 * a[S] + 6 * a[S]); }));

    // Order 2qrs with 3 excluded: q >= 5, checked for q <= 13.
    auto qrs_equation = [&](std::string id, std::string unreduced, std::string solved, Poly num, Poly den,
                            Poly rhs) {
      EquationSpec e;
      e.id = std::move(id);
      e.unreduced_text = std::move(unreduced);
      e.solved_text = std::move(solved);
      e.free = {Q, R, S};
      e.fixed = {{P, 2}};
      e.lower = {2, 5, 2, 2};
      e.degree = {0, 1, 1, 1};
      e.numerator = std::move(num);
      e.denominator = std::move(den);
      e.lhs = [](const Assignment& a) { return 4 * a[Q] * a[R] * a[S]; };
      e.rhs = std::move(rhs);
      e.default_bounds = {0, 13, 10000, 10000};
      e.claim_text = "no prime solutions with q <= 13";
      return e;
    };
    out.push_back(qrs_equation(
        "rem37-d1", "4qrs = 3q(1+r)(1+s)+1+r", "s = (1+r+3q+3qr)/(qr-3q)",
        [](const Assignment& a) { return 1 + a[R] + 3 * a[Q] + 3 * a[Q] * a[R]; },
        [](const Assignment& a) { return a[Q] * a[R] - 3 * a[Q]; },
        [](const Assignment& a) { return 3 * a[Q] * (1 + a[R]) * (1 + a[S]) + 1 + a[R]; }));
    out.push_back(qrs_equation(
        "rem37-d2", "4qrs = 3r(1+q)(1+s)+1+s", "s = (1+3r+3qr)/(qr-3r-1)",
        [](const Assignment& a) { return 1 + 3 * a[R] + 3 * a[Q] * a[R]; },
        [](const Assignment& a) { return a[Q] * a[R] - 3 * a[R] - 1; },
        [](const Assignment& a) { return 3 * a[R] * (1 + a[Q]) * (1 + a[S]) + 1 + a[S]; }));
    return out;
  }();
  return registry;
}

inline const EquationSpec& find_equation(const std::string& id) {
  for (const auto& e : equation_registry())
    if (e.id == id) return e;
  throw InputError("unknown equation id: " + id);
}

// Fraction bounds -------------------------------------------------------------

struct BoundTerm {
  std::int64_t coefficient = 1;
  std::int64_t denominator = 1;
  /// Non-empty for terms that instantiate a lone constant or prime at the
  /// smallest admissible order.
  std::string note;

  Rational value() const { return Rational(coefficient, denominator); }
};

/// An upper estimate for (sigma(G) - |G|)/|G| as a sum of fractions, claimed < 1.
struct FractionBound {
  std::string id;
  std::string display;
  std::vector<BoundTerm> terms;
};

struct BoundResult {
  Rational sum;
  bool holds = false;
};

inline BoundResult check_bound(const std::vector<BoundTerm>& terms) {
  Rational sum;
  for (const auto& t : terms) sum += t.value();
  return {sum, sum < Rational(1)};
}

inline BoundResult check_bound(const FractionBound& b) { return check_bound(b.terms); }

inline const std::vector<FractionBound>& bound_registry() {
  static const std::vector<FractionBound> registry = [] {
    std::vector<FractionBound> out;
    const BoundTerm one_770{1, 770, "constant 1 at |G| = 2*5*7*11"};
    const BoundTerm one_1155{1, 1155, "constant 1 at |G| = 3*5*7*11"};
    out.push_back({"rem33-b", "|G|/3 + |G|/5 + |G|/15 + 4|G|/21", {{1, 3}, {1, 5}, {1, 15}, {4, 21}}});
    out.push_back({"lemma34-a",
                   "1 + |G|/2 + |G|/5 + |G|/10 + |G|/14 + 2|G|/22",
                   {one_770, {1, 2}, {1, 5}, {1, 10}, {1, 14}, {2, 22}}});
    out.push_back({"lemma34-b",
                   "1 + |G|/2 + |G|/5 + |G|/10 + |G|/14 + 2|G|/35",
                   {one_770, {1, 2}, {1, 5}, {1, 10}, {1, 14}, {2, 35}}});
    out.push_back({"lemma36-a",
                   "|G|/2 + |G|/5 + |G|/10 + |G|/14 + |G|/22 + 3|G|/70",
                   {{1, 2}, {1, 5}, {1, 10}, {1, 14}, {1, 22}, {3, 70}}});
    out.push_back({"lemma36-b",
                   "|G|/2 + |G|/5 + |G|/10 + |G|/14 + |G|/35 + 3|G|/70",
                   {{1, 2}, {1, 5}, {1, 10}, {1, 14}, {1, 35}, {3, 70}}});
    out.push_back({"lemma38-a",
                   "|G|/2 + |G|/5 + |G|/10 + |G|/14 + |G|/22 + 4|G|/70",
                   {{1, 2}, {1, 5}, {1, 10}, {1, 14}, {1, 22}, {4, 70}}});
    out.push_back({"lemma38-b",
                   "|G|/2 + |G|/5 + |G|/10 + |G|/14 + |G|/35 + 4|G|/70",
                   {{1, 2}, {1, 5}, {1, 10}, {1, 14}, {1, 35}, {4, 70}}});
    // |G'| = r, p odd: 1 + r + s + pr + qr + rs + pqr + prs + qrs.
    out.push_back({"rem37-a1",
                   "1 + r + s + |G|/55 + |G|/33 + |G|/15 + |G|/11 + |G|/5 + |G|/3 (pqr > rs)",
                   {one_1155,
                    {1, 165, "r = |G|/pqs with pqs >= 3*5*11"},
                    {1, 105, "s = |G|/pqr with pqr >= 3*5*7"},
                    {1, 55},
                    {1, 33},
                    {1, 15},
                    {1, 11},
                    {1, 5},
                    {1, 3}}});
    out.push_back({"rem37-a2",
                   "1 + r + s + |G|/85 + |G|/51 + |G|/17 + |G|/15 + |G|/5 + |G|/3 (pqr < rs)",
                   {one_1155,
                    {1, 165, "r = |G|/pqs with pqs >= 3*5*11"},
                    {1, 105, "s = |G|/pqr with pqr >= 3*5*7"},
                    {1, 85},
                    {1, 51},
                    {1, 17},
                    {1, 15},
                    {1, 5},
                    {1, 3}}});
    // |G'| a product of two primes.
    out.push_back({"rem37-a3",
                   "1 + q + r + |G|/105 + |G|/33 + |G|/21 + |G|/15 + |G|/5 + |G|/3 (qr > ps)",
                   {one_1155,
                    {1, 231, "q = |G|/prs with prs >= 3*7*11"},
                    {1, 165, "r = |G|/pqs with pqs >= 3*5*11"},
                    {1, 105},
                    {1, 33},
                    {1, 21},
                    {1, 15},
                    {1, 5},
                    {1, 3}}});
    out.push_back({"rem37-a4",
                   "1 + q + r + |G|/105 + |G|/35 + |G|/21 + |G|/15 + |G|/5 + |G|/3 (qr < ps)",
                   {one_1155,
                    {1, 231, "q = |G|/prs with prs >= 3*7*11"},
                    {1, 165, "r = |G|/pqs with pqs >= 3*5*11"},
                    {1, 105},
                    {1, 35},
                    {1, 21},
                    {1, 15},
                    {1, 5},
                    {1, 3}}});
    return out;
  }();
  return registry;
}

inline const FractionBound& find_bound(const std::string& id) {
  for (const auto& b : bound_registry())
    if (b.id == id) return b;
  throw InputError("unknown bound id: " + id);
}

}  // namespace leinster::nt
