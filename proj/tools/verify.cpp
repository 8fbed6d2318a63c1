// Command-line front end for the Leinster group checks.
//
//   verify census --bound 400
//   verify pqrs --bound 2500 --jobs 4
//   verify p2qr --prime-bound 19
//   verify theorems --format text
//   verify list-claims

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leinster/error.hpp"
#include "leinster/verify/cache.hpp"
#include "leinster/verify/claims.hpp"

namespace {

using namespace leinster;
using namespace leinster::verify;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

std::string render_text(const std::vector<ClaimResult>& claims) {
  std::string out;
  for (const auto& c : claims) {
    std::string status = status_name(c.status);
    status.resize(9, ' ');
    out += status + c.id + ": " + c.summary + "\n";
  }
  return out;
}

int emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    return kExitOk;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitUsage;
  }
  out << body;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leinster group verification"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  std::string cache_path;
  bool no_cache = false;
  unsigned jobs = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "Write the report to FILE instead of stdout");
  app.add_option("--cache", cache_path, "JSON-lines cache of explicit reports");
  app.add_flag("--no-cache", no_cache, "Ignore --cache");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.fallthrough();

  std::uint64_t census_bound = 400;
  auto* census = app.add_subcommand("census", "Leinster groups among the constructible families");
  census->add_option("--bound", census_bound, "Largest group order")->required()->check(CLI::Range(1, 20000));

  std::uint64_t pqrs_bound = 2500;
  auto* pqrs = app.add_subcommand("pqrs", "All groups of order pqrs up to a bound");
  pqrs->add_option("--bound", pqrs_bound, "Largest group order")->required()->check(CLI::Range(1, 100000));

  std::uint64_t prime_bound = 19;
  auto* p2qr = app.add_subcommand("p2qr", "Candidate families of order p^2qr");
  p2qr->add_option("--prime-bound", prime_bound, "Largest prime r")->required()->check(CLI::Range(5, 200));

  auto* theorems = app.add_subcommand("theorems", "Property suites, equation scans and fraction bounds");
  auto* list = app.add_subcommand("list-claims", "List claim ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::unique_ptr<ReportCache> cache;
  if (!cache_path.empty() && !no_cache) cache = std::make_unique<ReportCache>(cache_path);
  RunContext ctx{jobs, cache.get()};

  if (list->parsed()) {
    std::string body;
    if (format == "json") {
      Json arr = Json::array();
      for (const auto& c : list_claims()) arr.push_back(Json{{"claim_id", c.id}, {"command", c.command}, {"anchor", c.anchor}});
      body = Json{{"tool_version", kToolVersion}, {"claims", arr}}.dump(2) + "\n";
    } else {
      for (const auto& c : list_claims()) body += c.id + "\t" + c.command + "\t" + c.anchor + "\n";
    }
    return emit(body, out_path);
  }

  std::vector<ClaimResult> claims;
  try {
    if (census->parsed()) claims.push_back(run_census(census_bound, ctx));
    if (pqrs->parsed()) claims.push_back(run_pqrs(pqrs_bound, ctx));
    if (p2qr->parsed()) claims.push_back(run_p2qr(prime_bound, ctx));
    if (theorems->parsed()) claims = run_theorems(ctx);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (cache) cache->flush();

  const std::string body = format == "json" ? report_json(claims).dump(2) + "\n" : render_text(claims);
  if (const int rc = emit(body, out_path); rc != kExitOk) return rc;
  for (const auto& c : claims)
    if (c.status == Status::Refuted) return kExitRefuted;
  return kExitOk;
}
