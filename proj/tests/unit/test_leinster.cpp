#include <catch_amalgamated.hpp>

#include <array>
#include <string>
#include <vector>

#include "leinster/constructors.hpp"
#include "leinster/report.hpp"
#include "leinster/squarefree.hpp"
#include "leinster/verify/structural.hpp"
#include "leinster/verify/universe.hpp"
#include "support/oracles.hpp"

using namespace leinster;

namespace {

LeinsterReport explicit_of(const std::string& spec) { return analyze(build(parse_spec(spec))); }

// Report from the brute-force normal subgroup oracle.
LeinsterReport oracle_report(const GroupTable& g) {
  std::vector<std::uint64_t> orders;
  for (const auto& n : oracle::normal_subgroups(g)) orders.push_back(n.size());
  return make_report(g.label(), g.order(), orders);
}

}  // namespace

TEST_CASE("analyze examples", "[leinster]") {
  const auto c6 = explicit_of("C6");
  CHECK(c6.sigma == 12);
  CHECK(c6.tau == 4);
  CHECK(c6.is_leinster);

  const auto d6 = analyze(build(dihedral(3)));
  CHECK(d6.normal_orders == std::vector<std::uint64_t>{1, 3, 6});
  CHECK(d6.sigma == 10);
  CHECK_FALSE(d6.is_leinster);

  const auto q28 = explicit_of("Dic7xC13");
  CHECK(q28.order == 364);
  CHECK(q28.sigma == 728);
  CHECK(q28.is_leinster);

  const auto q20 = explicit_of("Dic5xC19");
  CHECK(q20.sigma == 760);
  CHECK(q20.tau == 10);
  CHECK(q20.is_leinster);
}

TEST_CASE("make_report derives sigma, tau and the odd count", "[leinster]") {
  const auto r = make_report("x", 6, {6, 1, 3, 2});
  CHECK(r.normal_orders == std::vector<std::uint64_t>{1, 2, 3, 6});
  CHECK(r.sigma == 12);
  CHECK(r.tau == 4);
  CHECK(r.odd_normal_count == 2);
  CHECK(r.is_leinster);
}

TEST_CASE("analyze_coprime_product examples and errors", "[leinster]") {
  const auto c6 = explicit_of("C6");
  const auto triv = explicit_of("C1");
  const auto same = analyze_coprime_product(c6, triv, "C6");
  CHECK(same == c6);

  const auto dic5 = explicit_of("Dic5");
  const auto c19 = explicit_of("C19");
  CHECK(dic5.sigma == 38);
  CHECK(c19.sigma == 20);
  const auto prod = analyze_coprime_product(dic5, c19);
  CHECK(prod.sigma == 760);
  CHECK(prod.order == 380);
  CHECK(prod.is_leinster);

  const auto s3 = explicit_of("S3");
  const auto c5 = explicit_of("C5");
  CHECK(s3.sigma == 10);
  CHECK(c5.sigma == 6);
  const auto s3c5 = analyze_coprime_product(s3, c5);
  CHECK(s3c5.sigma == 60);
  CHECK(s3c5.is_leinster);

  CHECK_THROWS_AS(analyze_coprime_product(c6, explicit_of("C4")), InputError);
}

TEST_CASE("coprime product rule equals the explicit product", "[leinster]") {
  const std::vector<std::string> atoms{"C1", "C2", "C3", "C4", "C5", "S3", "Dic3", "D8", "Ab(2,2)", "A4",
                                       "C7", "SD(7,3,2)", "Dic5", "C9", "SF(21,2,20)", "Ab(3,3)", "C11"};
  std::size_t pairs = 0;
  for (const auto& x : atoms) {
    for (const auto& y : atoms) {
      const auto rx = explicit_of(x), ry = explicit_of(y);
      if (std::gcd(rx.order, ry.order) != 1 || rx.order * ry.order > 600) continue;
      INFO(x << " x " << y);
      const auto rule = analyze_coprime_product(rx, ry);
      const auto table = explicit_of(x + "x" + y);
      CHECK(rule.normal_orders == table.normal_orders);
      CHECK(rule.sigma == table.sigma);
      CHECK(rule.tau == table.tau);
      ++pairs;
    }
  }
  CHECK(pairs >= 50);
}

TEST_CASE("metacyclic counting matches the engine", "[leinster]") {
  // x^A = 1, y^B = x^s, y x y^-1 = x^t
  struct Case {
    std::uint64_t A, B, t, s;
    const char* spec;
  };
  for (const auto& c : std::vector<Case>{{7, 8, 6, 0, "SD(7,8,6)"},
                                        {10, 2, 9, 5, "Dic5"},
                                        {12, 2, 11, 6, "Dic6"},
                                        {12, 2, 11, 0, "D24"},
                                        {9, 2, 8, 0, "D18"},
                                        {1, 12, 1, 0, "C12"}}) {
    INFO(c.spec);
    CHECK(metacyclic_normal_orders(c.A, c.B, c.t, c.s) == explicit_of(c.spec).normal_orders);
  }
  CHECK_THROWS_AS(metacyclic_normal_orders(7, 3, 3, 0), InputError);
}

TEST_CASE("structural path equals explicit path on squarefree groups", "[leinster]") {
  std::size_t checked = 0;
  for (std::uint64_t n = 1; n <= 600; ++n) {
    if (!nt::is_squarefree(n)) continue;
    for (const auto& d : enumerate_squarefree(n)) {
      INFO(d.serialize());
      const auto table = analyze(realize(d));
      const auto key = sd_key(d);
      CHECK(analyze_sd(key).normal_orders == table.normal_orders);
      CHECK(analyze_metacyclic("", d.a, d.b, d.t).normal_orders == table.normal_orders);
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("sd keys identify isomorphic split metacyclic groups", "[leinster]") {
  // C_3 x| C_4 acting by inversion is Dic3
  const auto k1 = sd_key(3, 4, 2);
  REQUIRE(k1);
  CHECK(sd_label(*k1) == "Dic3");
  // t = 1 mod 3 but not mod 9 (not a valid action for b = 2)
  CHECK_FALSE(sd_key(9, 2, 4).has_value());
  CHECK(sd_key(4, 3, 5) == SdKey{1, 12, 1});
  CHECK(sd_key(5, 3, 1) == SdKey{1, 15, 1});
  CHECK_THROWS_AS(sd_key(6, 4, 5), InputError);

  // every family member builds to a group with the advertised report
  for (std::uint64_t n = 1; n <= 120; ++n) {
    for (const auto& key : sd_family(n)) {
      const auto label = sd_label(key);
      INFO(label);
      const auto table = explicit_of(label);
      CHECK(table.order == n);
      CHECK(analyze_sd(key).normal_orders == table.normal_orders);
    }
  }
}

TEST_CASE("product with a prime of the family equals the explicit product", "[leinster]") {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    for (const auto& key : sd_family(n)) {
      for (std::uint64_t p : {2, 3, 5, 7}) {
        if (n * p > 400) continue;
        const auto label = sd_label(key) + "xC" + std::to_string(p);
        INFO(label);
        const auto structural = analyze_sd_times_prime(key, p);
        CHECK(structural.label == label);
        CHECK(structural.normal_orders == explicit_of(label).normal_orders);
      }
    }
  }
  CHECK_THROWS_AS(analyze_sd_times_prime(SdKey{1, 6, 1}, 4), InputError);
}

TEST_CASE("elementary abelian p^2 count", "[leinster]") {
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    const auto r = analyze_elementary_p2(p);
    CHECK(r.normal_orders == explicit_of("Ab(" + std::to_string(p) + "," + std::to_string(p) + ")").normal_orders);
    CHECK(r.label == "C" + std::to_string(p) + "xC" + std::to_string(p));
  }
}

TEST_CASE("census candidates match the explicit engine", "[leinster]") {
  std::size_t checked = 0;
  for (std::uint64_t n = 1; n <= 200; ++n) {
    for (const auto& c : verify::census_candidates(n)) {
      INFO(c.label);
      const auto g = build(parse_spec(c.label));
      CHECK(g.order() == n);
      const auto table = analyze(g);
      CHECK(c.report.normal_orders == table.normal_orders);
      CHECK(c.report.label == c.label);
      ++checked;
    }
  }
  CHECK(checked > 400);
}

TEST_CASE("p2qr candidates match the explicit engine", "[leinster]") {
  for (auto [p, q, r] : std::vector<std::array<std::uint64_t, 3>>{{2, 3, 5}, {2, 3, 7}, {2, 5, 7}, {3, 5, 7}}) {
    for (const auto& c : verify::p2qr_candidates(p, q, r)) {
      INFO(c.label);
      const auto table = analyze(build(parse_spec(c.label)));
      CHECK(table.order == p * p * q * r);
      CHECK(c.report.normal_orders == table.normal_orders);
    }
  }
}

TEST_CASE("explicit reports agree with the brute-force oracle", "[leinster]") {
  for (const char* s : {"C6", "S3xC5", "Dic3", "C28", "SD(7,8,6)", "A4", "S4", "D20", "Ab(2,2)xC3"}) {
    const auto g = build(parse_spec(s));
    INFO(s);
    CHECK(analyze(g).normal_orders == oracle_report(g).normal_orders);
  }
}

TEST_CASE("cyclic groups are Leinster exactly at perfect orders", "[leinster]") {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    INFO(n);
    CHECK(analyze(build(cyclic(n))).is_leinster == nt::is_perfect(n));
  }
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    INFO(n);
    CHECK(analyze_sd(SdKey{1, n, 1}).is_leinster == nt::is_perfect(n));
  }
}

TEST_CASE("Leinster groups have an even number of odd-order normal subgroups", "[leinster]") {
  std::size_t found = 0;
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    for (const auto& c : verify::census_candidates(n)) {
      if (!c.report.is_leinster) continue;
      ++found;
      INFO(c.label);
      CHECK(c.report.odd_normal_count % 2 == 0);
    }
  }
  CHECK(found >= 8);
}
