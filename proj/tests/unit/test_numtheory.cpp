#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "leinster/equations.hpp"
#include "leinster/numtheory.hpp"
#include "leinster/rational.hpp"
#include "support/oracles.hpp"

using namespace leinster;
using namespace leinster::nt;

namespace {

std::uint64_t naive_divisor_sum(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

// Bounds small enough for the brute-force oracle.
Bounds oracle_bounds(const EquationSpec& eq) {
  Bounds b = eq.default_bounds;
  for (auto v : eq.free) b[v] = std::min<std::uint64_t>(b[v], v == P ? 60 : 400);
  if (eq.free.size() == 2 && eq.fixed.size() <= 1) {
    for (auto v : eq.free) b[v] = std::min<std::uint64_t>(eq.default_bounds[v], 3000);
  }
  return b;
}

}  // namespace

TEST_CASE("is_perfect", "[numtheory]") {
  CHECK(is_perfect(6));
  CHECK_FALSE(is_perfect(12));
  CHECK(is_perfect(28));
  CHECK(is_perfect(496));
  CHECK(is_perfect(8128));
  CHECK_FALSE(is_perfect(1));
  std::vector<std::uint64_t> found;
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    CHECK(divisor_sum(n) == naive_divisor_sum(n));
    if (is_perfect(n)) found.push_back(n);
  }
  CHECK(found == std::vector<std::uint64_t>{6, 28, 496, 8128});
}

TEST_CASE("mult_order", "[numtheory]") {
  CHECK(mult_order(1, 7) == 1);
  CHECK(mult_order(1, 1) == 1);
  CHECK(mult_order(6, 7) == 2);
  CHECK(mult_order(3, 7) == 6);
  CHECK(mult_order(2, 7) == 3);
  CHECK_THROWS_AS(mult_order(7, 14), InputError);
  for (std::uint64_t a = 2; a <= 60; ++a) {
    for (std::int64_t t = 1; t < static_cast<std::int64_t>(a); ++t) {
      if (std::gcd(static_cast<std::uint64_t>(t), a) != 1) continue;
      std::uint64_t k = 1, x = static_cast<std::uint64_t>(t) % a;
      while (x != 1) {
        x = x * static_cast<std::uint64_t>(t) % a;
        ++k;
      }
      CHECK(mult_order(t, a) == k);
    }
  }
}

TEST_CASE("primes, factorization and divisors", "[numtheory]") {
  const auto ps = primes_up_to(100);
  CHECK(ps.size() == 25);
  CHECK(ps.front() == 2);
  CHECK(ps.back() == 97);
  for (std::uint64_t n = 0; n <= 2000; ++n) {
    bool naive = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && naive; ++d) naive = n % d != 0;
    CHECK(is_prime(n) == naive);
  }
  CHECK(is_prime(1000000007));
  CHECK_FALSE(is_prime(1000000007ull * 3));
  CHECK(factorize(360) == std::vector<std::pair<u64, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
  CHECK(prime_divisors(210) == std::vector<u64>{2, 3, 5, 7});
  CHECK(is_squarefree(210));
  CHECK_FALSE(is_squarefree(12));
  CHECK(big_omega(360) == 6);
  CHECK(p_part(360, 2) == 8);
  CHECK(p_part(360, 7) == 1);
  CHECK(lcm(4, 6) == 12);
  CHECK(pow_mod(3, 200, 1000003) == pow_mod(9, 100, 1000003));
}

TEST_CASE("rational arithmetic", "[numtheory]") {
  const Rational half(1, 2), third(1, 3);
  CHECK((half + third) == Rational(5, 6));
  CHECK((half - third) == Rational(1, 6));
  CHECK((half * third) == Rational(1, 6));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(2, -4).den() == 2);
  CHECK(Rational(3, 6).str() == "1/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(third < half);
  CHECK_THROWS_AS(Rational(1, 0), InputError);
  const Rational huge(INT64_MAX, 1);
  CHECK_THROWS_AS(huge + huge, InputError);
}

TEST_CASE("scan_equation examples", "[numtheory]") {
  const auto& fin = find_equation("thm26-final");
  Bounds b = fin.default_bounds;
  b[Q] = b[R] = 1000;
  CHECK(scan_equation(fin, b) == std::vector<Solution>{{5, 19}, {7, 13}});
  CHECK(scan_equation(fin) == std::vector<Solution>{{5, 19}, {7, 13}});

  CHECK(scan_equation(find_equation("lemma23")).empty());
  CHECK(scan_equation(find_equation("thm26-noP-a")).empty());
  CHECK(scan_equation(find_equation("thm26-withP")) == std::vector<Solution>{{2, 5, 19}, {2, 7, 13}});

  CHECK_THROWS_AS(find_equation("lemma99"), InputError);
}

TEST_CASE("lemma24 and thm26-noP-b have small solutions", "[numtheory]") {
  // Both are exact solutions of the unreduced forms.
  const auto& l24 = find_equation("lemma24");
  CHECK(scan_equation(l24) == std::vector<Solution>{{2, 3, 7}});
  CHECK(2 * 2 * 3 * 7 == 1 + 2 + 7 + 2 * 3 + 2 * 7 + 2 * 2 * 3 + 2 * 3 * 7);

  const auto& nopb = find_equation("thm26-noP-b");
  CHECK(scan_equation(nopb) == std::vector<Solution>{{2, 3, 11}});
  CHECK(2 * 2 * 3 * 11 == 1 + 3 + 11 + 2 * 3 + 3 * 11 + 2 * 2 * 3 + 2 * 3 * 11);
}

TEST_CASE("lemma24: denominator p^2-pq-p-1 drifts from the unreduced form", "[numtheory]") {
  // r = (p^2q+pq+p+1)/(p^2-pq-p-1) has a negative denominator for every q > p,
  // so it never yields a solution, while the unreduced form does.
  const auto& l24 = find_equation("lemma24");
  EquationSpec printed = l24;
  printed.denominator = [](const Assignment& a) {
    const i128 p = a[P], q = a[Q];
    return p * p - p * q - p - 1;
  };
  Bounds b = l24.default_bounds;
  b[Q] = b[R] = 2000;
  CHECK(scan_equation(printed, b).empty());
  CHECK(oracle::solve_unreduced(l24, b) == std::vector<Solution>{{2, 3, 7}});
  CHECK(scan_equation(l24, b) == oracle::solve_unreduced(l24, b));
}

TEST_CASE("every scanner agrees with the brute-force oracle", "[numtheory]") {
  for (const auto& eq : equation_registry()) {
    INFO(eq.id);
    const auto b = oracle_bounds(eq);
    const auto fast = scan_equation(eq, b);
    CHECK(fast == oracle::solve_unreduced(eq, b));
    for (const auto& s : fast) CHECK(satisfies_unreduced(eq, s));
  }
}

TEST_CASE("registered claims match the default scans", "[numtheory]") {
  std::set<std::string> ids;
  for (const auto& eq : equation_registry()) {
    INFO(eq.id);
    CHECK(ids.insert(eq.id).second);
    const auto sols = scan_equation(eq);
    for (const auto& s : sols) CHECK(satisfies_unreduced(eq, s));
    if (eq.id == "lemma24" || eq.id == "thm26-noP-b") continue;
    CHECK(sols == eq.expected);
  }
  CHECK(ids.size() == 19);
}

TEST_CASE("scan rejects bounds that could overflow", "[numtheory]") {
  const auto& eq = find_equation("thm26-withP");
  Bounds b = eq.default_bounds;
  b[Q] = b[R] = 4000000000ull;
  CHECK_THROWS_AS(scan_equation(eq, b), InputError);
}

TEST_CASE("fraction bound values", "[numtheory]") {
  // Each sum by hand over the common denominator.
  const std::vector<std::pair<std::string, Rational>> expect{
      {"rem33-b", Rational(83, 105)},     {"lemma34-a", Rational(53, 55)},  {"lemma34-b", Rational(358, 385)},
      {"lemma36-a", Rational(739, 770)},  {"lemma36-b", Rational(33, 35)},  {"lemma38-a", Rational(75, 77)},
      {"lemma38-b", Rational(67, 70)},    {"rem37-a1", Rational(291, 385)}, {"rem37-a2", Rational(925, 1309)},
      {"rem37-a3", Rational(269, 385)},   {"rem37-a4", Rational(23, 33)}};
  CHECK(bound_registry().size() == expect.size());
  for (const auto& [id, value] : expect) {
    INFO(id);
    const auto r = check_bound(find_bound(id));
    CHECK(r.sum == value);
    CHECK(r.holds);
  }
  // The fractional part of lemma34-a without the lone 1.
  const auto& l34 = find_bound("lemma34-a");
  std::vector<BoundTerm> no_one;
  for (const auto& t : l34.terms)
    if (t.note.empty()) no_one.push_back(t);
  CHECK(check_bound(no_one).sum == Rational(741, 770));

  CHECK_THROWS_AS(find_bound("lemma99"), InputError);
}

TEST_CASE("fraction bound edge cases", "[numtheory]") {
  const auto empty = check_bound(std::vector<BoundTerm>{});
  CHECK(empty.sum == Rational(0));
  CHECK(empty.holds);
  CHECK_FALSE(check_bound(std::vector<BoundTerm>{{1, 2}, {1, 2}}).holds);
  CHECK_FALSE(check_bound(std::vector<BoundTerm>{{1, 2}, {2, 3}}).holds);
  CHECK(check_bound(std::vector<BoundTerm>{{1, 2}, {1, 3}}).holds);
}

TEST_CASE("fraction bound verdicts ignore term order", "[numtheory]") {
  std::mt19937 rng(12345);
  for (const auto& b : bound_registry()) {
    auto terms = b.terms;
    const auto base = check_bound(terms);
    for (int i = 0; i < 20; ++i) {
      std::shuffle(terms.begin(), terms.end(), rng);
      const auto r = check_bound(terms);
      CHECK(r.holds == base.holds);
      CHECK(r.sum == base.sum);
    }
  }
}
