#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "leinster/verify/cache.hpp"
#include "leinster/verify/claims.hpp"
#include "leinster/verify/json_io.hpp"

using namespace leinster;
using namespace leinster::verify;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("leinster_test_" + name)).string();
}

std::string zeroed(std::vector<ClaimResult> claims) {
  for (auto& c : claims) c.elapsed_ms = 0;
  return report_json(claims).dump(2);
}

std::vector<std::string> labels(const std::vector<LeinsterReport>& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs) out.push_back(r.label);
  return out;
}

}  // namespace

TEST_CASE("report json round-trip and consistency check", "[verify]") {
  const auto r = make_report("Dic5xC19", 380, {1, 2, 5, 10, 20, 19, 38, 95, 190, 380});
  const auto j = to_json(r);
  CHECK(j.at("sigma") == 760);
  CHECK(j.at("leinster") == true);
  CHECK(report_from_json(j) == r);

  auto bad = j;
  bad["sigma"] = 761;
  CHECK_THROWS_AS(report_from_json(bad), InputError);
  CHECK_THROWS(report_from_json(Json{{"label", "x"}}));
}

TEST_CASE("cache skips corrupt lines and round-trips reports", "[verify]") {
  const auto path = temp_path("cache.jsonl");
  std::filesystem::remove(path);
  const auto good = make_report("C6", 6, {1, 2, 3, 6});
  {
    std::ofstream out(path);
    out << Json{{"spec", "C6"}, {"report", to_json(good)}}.dump() << "\n";
    out << "{not json\n";
    out << Json{{"spec", "C7"}}.dump() << "\n";
    out << "\n";
  }
  std::ostringstream warn;
  ReportCache cache(path, warn);
  CHECK(cache.skipped_lines() == 2);
  CHECK(warn.str().find("skipping corrupt cache line") != std::string::npos);
  REQUIRE(cache.find("C6"));
  CHECK(*cache.find("C6") == good);
  CHECK_FALSE(cache.find("C7"));

  const auto s3 = make_report("S3", 6, {1, 3, 6});
  cache.insert("S3", s3);
  CHECK(*cache.find("S3") == s3);
  cache.flush();

  std::ostringstream warn2;
  ReportCache again(path, warn2);
  CHECK(again.size() == 2);
  CHECK(*again.find("S3") == s3);
  std::filesystem::remove(path);
}

TEST_CASE("cached and uncached runs agree", "[verify]") {
  const auto path = temp_path("pqrs_cache.jsonl");
  std::filesystem::remove(path);
  const auto plain = zeroed({run_pqrs(600, RunContext{2, nullptr})});
  {
    ReportCache cache(path);
    CHECK(zeroed({run_pqrs(600, RunContext{2, &cache})}) == plain);
    cache.flush();
  }
  ReportCache warm(path);
  CHECK(warm.size() > 0);
  CHECK(zeroed({run_pqrs(600, RunContext{2, &warm})}) == plain);
  std::filesystem::remove(path);
}

TEST_CASE("parallel_map keeps order and rethrows", "[verify]") {
  const auto squares = parallel_map<std::size_t>(100, 4, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < 100; ++i) CHECK(squares[i] == i * i);
  CHECK(parallel_map<int>(0, 4, [](std::size_t) { return 1; }).empty());
  CHECK_THROWS_AS(parallel_map<int>(50, 4,
                                    [](std::size_t i) -> int {
                                      if (i == 17) throw std::runtime_error("boom");
                                      return 0;
                                    }),
                  std::runtime_error);
}

TEST_CASE("results do not depend on the number of jobs", "[verify]") {
  CHECK(zeroed({run_census(600, RunContext{1, nullptr})}) == zeroed({run_census(600, RunContext{4, nullptr})}));
  CHECK(zeroed({run_pqrs(1200, RunContext{1, nullptr})}) == zeroed({run_pqrs(1200, RunContext{4, nullptr})}));
  CHECK(zeroed({run_p2qr(19, RunContext{1, nullptr})}) == zeroed({run_p2qr(19, RunContext{4, nullptr})}));
}

TEST_CASE("census at a smaller bound is a prefix", "[verify]") {
  const auto big = census_hits(1000, 4).hits;
  for (std::uint64_t b : {10, 50, 100, 365, 400, 500}) {
    const auto small = census_hits(b, 2).hits;
    REQUIRE(small.size() <= big.size());
    for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i] == big[i]);
    for (std::size_t i = small.size(); i < big.size(); ++i) CHECK(big[i].order > b);
  }
}

TEST_CASE("census hits", "[verify]") {
  CHECK(labels(census_hits(100, 2).hits) == std::vector<std::string>{"C6", "Dic3", "C28", "S3xC5", "SD(7,8,6)"});
  const auto c500 = census_hits(500, 2).hits;
  CHECK(labels(c500) == std::vector<std::string>{"C6", "Dic3", "C28", "S3xC5", "SD(7,8,6)", "Dic7xC13",
                                                 "Dic5xC19", "C496"});
  for (const auto& h : c500) {
    CHECK(h.sigma == 2 * h.order);
    CHECK(h.odd_normal_count % 2 == 0);
  }
  const auto claim = run_census(500, RunContext{2, nullptr});
  CHECK(claim.status == Status::Verified);
  CHECK(claim.evidence.at("known_missing").empty());
}

TEST_CASE("p2qr sweep at small bounds", "[verify]") {
  CHECK(p2qr_hits(7, 2).hits.empty());
  CHECK(p2qr_hits(11, 2).hits.empty());
  CHECK(labels(p2qr_hits(13, 2).hits) == std::vector<std::string>{"Dic7xC13"});
  const auto c19 = run_p2qr(19, RunContext{2, nullptr});
  CHECK(c19.status == Status::Verified);
  CHECK(c19.evidence.at("coverage").get<std::string>().rfind("PARTIAL COVERAGE", 0) == 0);
  const auto c7 = run_p2qr(7, RunContext{2, nullptr});
  CHECK(c7.status == Status::Verified);
}

TEST_CASE("pqrs at 210 and vacuous bounds", "[verify]") {
  const auto c = run_pqrs(210, RunContext{1, nullptr});
  CHECK(c.status == Status::Verified);
  const auto& rows = c.evidence.at("per_order");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].at("order") == 210);
  CHECK(rows[0].at("groups") == 12);
  CHECK(rows[0].at("holder_count") == 12);
  CHECK(rows[0].at("leinster") == 0);
  CHECK(rows[0].at("explicit_agrees") == true);
  CHECK(c.evidence.at("hits_with_tau_8_to_10") == "vacuous");

  const auto empty = run_pqrs(100, RunContext{1, nullptr});
  CHECK(empty.status == Status::Verified);
  CHECK(empty.evidence.at("per_order").empty());
}

TEST_CASE("four_distinct_primes", "[verify]") {
  CHECK(four_distinct_primes(210));
  CHECK(four_distinct_primes(2 * 3 * 5 * 11));
  CHECK_FALSE(four_distinct_primes(420));
  CHECK_FALSE(four_distinct_primes(30));
  CHECK_FALSE(four_distinct_primes(2310));
}

TEST_CASE("equation and bound claims", "[verify]") {
  CHECK(run_equation_claim(nt::find_equation("thm26-final")).status == Status::Verified);
  CHECK(run_equation_claim(nt::find_equation("lemma23")).status == Status::Verified);
  CHECK(run_equation_claim(nt::find_equation("lemma24")).status == Status::Refuted);
  for (const auto& b : nt::bound_registry()) CHECK(run_bound_claim(b).status == Status::Verified);
}

TEST_CASE("claim ids are unique and cover the commands", "[verify]") {
  std::set<std::string> ids;
  for (const auto& c : list_claims()) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.anchor.empty());
  }
  for (const char* id : {"census", "pqrs", "p2qr", "cyclic-perfect", "thm26-final", "lemma34-a"})
    CHECK(ids.count(id) == 1);
}
