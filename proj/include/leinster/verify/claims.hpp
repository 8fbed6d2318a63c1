#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "leinster/constructors.hpp"
#include "leinster/equations.hpp"
#include "leinster/numtheory.hpp"
#include "leinster/report.hpp"
#include "leinster/squarefree.hpp"
#include "leinster/verify/cache.hpp"
#include "leinster/verify/json_io.hpp"
#include "leinster/verify/properties.hpp"
#include "leinster/verify/structural.hpp"
#include "leinster/verify/universe.hpp"

namespace leinster::verify {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Status { Verified, Refuted, Partial };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Refuted: return "refuted";
    case Status::Partial: return "partial";
  }
  return "?";
}

struct ClaimResult {
  std::string id;
  Status status = Status::Verified;
  std::string anchor;
  std::string summary;
  Json evidence = Json::object();
  std::int64_t elapsed_ms = 0;
};

inline Json to_json(const ClaimResult& c) {
  return Json{{"claim_id", c.id},      {"status", status_name(c.status)}, {"anchor", c.anchor},
              {"summary", c.summary},  {"evidence", c.evidence},          {"elapsed_ms", c.elapsed_ms}};
}

inline Json report_json(const std::vector<ClaimResult>& claims) {
  Json out{{"tool_version", kToolVersion}, {"claims", Json::array()}};
  for (const auto& c : claims) out["claims"].push_back(to_json(c));
  return out;
}

struct RunContext {
  unsigned jobs = 1;
  ReportCache* cache = nullptr;
};

/// Runs f(0..count-1) on `jobs` threads; results land at their own index, so
/// the output does not depend on scheduling. The first exception is rethrown.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, F&& f) {
  std::vector<T> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

/// Explicit-engine report for a spec, through the cache when one is attached.
inline LeinsterReport explicit_report(const std::string& spec, const RunContext& ctx) {
  if (ctx.cache) {
    if (auto hit = ctx.cache->find(spec)) return *hit;
  }
  auto r = analyze(build(parse_spec(spec)));
  if (ctx.cache) ctx.cache->insert(spec, r);
  return r;
}

namespace detail {

template <class F>
ClaimResult timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  ClaimResult c = f();
  c.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return c;
}

inline bool by_order_label(const LeinsterReport& a, const LeinsterReport& b) {
  return a.order != b.order ? a.order < b.order : a.label < b.label;
}

inline std::string hit_list(const std::vector<LeinsterReport>& hits) {
  std::string out;
  for (const auto& r : hits) {
    if (!out.empty()) out += ", ";
    out += r.label + " (" + std::to_string(r.order) + ")";
  }
  return out.empty() ? "none" : out;
}

}  // namespace detail

// Census ----------------------------------------------------------------------

/// Groups known to be Leinster, as census labels, with order <= bound.
inline std::vector<std::pair<std::string, std::uint64_t>> known_leinster(std::uint64_t bound) {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  for (const auto& [label, n] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"C6", 6}, {"S3xC5", 30}, {"SD(7,8,6)", 56}, {"Dic7xC13", 364}, {"Dic5xC19", 380}}) {
    if (n <= bound) out.emplace_back(label, n);
  }
  for (std::uint64_t n = 2; n <= bound; ++n)
    if (n != 6 && nt::is_perfect(n)) out.emplace_back("C" + std::to_string(n), n);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

struct CensusData {
  std::vector<LeinsterReport> hits;
  std::uint64_t examined = 0;
};

inline CensusData census_hits(std::uint64_t bound, unsigned jobs) {
  struct PerOrder {
    std::vector<LeinsterReport> hits;
    std::uint64_t examined = 0;
  };
  auto per = parallel_map<PerOrder>(bound, jobs, [](std::size_t i) {
    PerOrder p;
    for (auto& c : census_candidates(i + 1)) {
      ++p.examined;
      if (c.report.is_leinster) p.hits.push_back(std::move(c.report));
    }
    return p;
  });
  CensusData out;
  for (auto& p : per) {
    out.examined += p.examined;
    for (auto& h : p.hits) out.hits.push_back(std::move(h));
  }
  std::stable_sort(out.hits.begin(), out.hits.end(), detail::by_order_label);
  return out;
}

inline ClaimResult run_census(std::uint64_t bound, const RunContext& ctx) {
  return detail::timed([&] {
    ClaimResult c;
    c.id = "census";
    c.anchor = "Leinster groups G with |G| <= bound: sigma(G) = 2|G|";
    const auto data = census_hits(bound, ctx.jobs);
    Json hits = Json::array();
    Json parity = Json::array();
    std::set<std::string> found;
    for (const auto& r : data.hits) {
      hits.push_back(to_json(r));
      found.insert(r.label);
      if (r.odd_normal_count % 2) parity.push_back(r.label);
    }
    Json missing = Json::array();
    for (const auto& [label, n] : known_leinster(bound))
      if (!found.count(label)) missing.push_back(label);
    c.evidence = Json{{"bound", bound},
                      {"universe",
                       "cyclic, squarefree, dihedral, dicyclic, split metacyclic C_a x| C_b with gcd(a,b)=1, "
                       "A4, S4, A5, and coprime products"},
                      {"groups_examined", data.examined},
                      {"leinster_groups", hits},
                      {"known_missing", missing},
                      {"parity_violations", parity}};
    c.status = missing.empty() && parity.empty() ? Status::Verified : Status::Refuted;
    c.summary = std::to_string(data.hits.size()) + " Leinster groups: " + detail::hit_list(data.hits);
    return c;
  });
}

// pqrs --------------------------------------------------------------------------

inline bool four_distinct_primes(std::uint64_t n) {
  const auto f = nt::factorize(n);
  return f.size() == 4 && std::all_of(f.begin(), f.end(), [](const auto& pe) { return pe.second == 1; });
}

inline constexpr std::uint64_t kExplicitValidationLimit = 600;

inline ClaimResult run_pqrs(std::uint64_t bound, const RunContext& ctx) {
  return detail::timed([&] {
    ClaimResult c;
    c.id = "pqrs";
    c.anchor = "|G| = pqrs, p < q < r < s primes: sigma(G) != 2|G|";
    std::vector<std::uint64_t> orders;
    for (std::uint64_t n = 210; n <= bound; ++n)
      if (four_distinct_primes(n)) orders.push_back(n);

    struct PerOrder {
      Json row;
      std::vector<LeinsterReport> hits;
      bool consistent = true;
    };
    auto per = parallel_map<PerOrder>(orders.size(), ctx.jobs, [&](std::size_t i) {
      const std::uint64_t n = orders[i];
      PerOrder p;
      const auto descs = enumerate_squarefree(n);
      const std::uint64_t holder = holder_count(n);
      std::uint64_t tau_min = UINT64_MAX, tau_max = 0;
      const bool check = n <= kExplicitValidationLimit;
      bool agrees = true;
      for (const auto& d : descs) {
        const auto r = analyze_sd(sd_key(d), sd_label(sd_key(d)));
        tau_min = std::min(tau_min, r.tau);
        tau_max = std::max(tau_max, r.tau);
        if (r.is_leinster) p.hits.push_back(r);
        if (check && explicit_report(d.serialize(), ctx).normal_orders != r.normal_orders) agrees = false;
      }
      p.consistent = agrees && descs.size() == holder;
      p.row = Json{{"order", n},
                   {"groups", descs.size()},
                   {"holder_count", holder},
                   {"tau_min", tau_min},
                   {"tau_max", tau_max},
                   {"leinster", p.hits.size()},
                   {"explicit_checked", check}};
      if (check) p.row["explicit_agrees"] = agrees;
      return p;
    });

    Json rows = Json::array();
    Json counterexamples = Json::array();
    Json window = Json::array();
    std::uint64_t total = 0;
    bool consistent = true;
    for (auto& p : per) {
      total += p.row["groups"].get<std::uint64_t>();
      rows.push_back(std::move(p.row));
      consistent &= p.consistent;
      for (const auto& h : p.hits) {
        counterexamples.push_back(to_json(h));
        if (h.tau >= 8 && h.tau <= 10) window.push_back(h.label);
      }
    }
    c.evidence = Json{{"bound", bound},
                      {"orders_checked", orders.size()},
                      {"groups_analyzed", total},
                      {"explicit_validation_limit", kExplicitValidationLimit},
                      {"per_order", rows},
                      {"counterexamples", counterexamples},
                      {"hits_with_tau_8_to_10", counterexamples.empty() ? Json("vacuous") : window}};
    if (!counterexamples.empty()) {
      c.status = Status::Refuted;
    } else if (!consistent) {
      c.status = Status::Partial;
      c.evidence["note"] = "enumeration count or explicit validation disagreed on some order";
    }
    c.summary = std::to_string(orders.size()) + " orders, " + std::to_string(total) + " groups, " +
                std::to_string(counterexamples.size()) + " Leinster";
    return c;
  });
}

// p^2 q r ------------------------------------------------------------------------

struct P2qrData {
  std::vector<LeinsterReport> hits;
  std::uint64_t orders = 0;
  std::uint64_t candidates = 0;
};

inline P2qrData p2qr_hits(std::uint64_t prime_bound, unsigned jobs,
                          const std::function<bool(std::uint64_t, std::uint64_t, std::uint64_t)>& keep = {}) {
  const auto ps = nt::primes_up_to(prime_bound);
  std::vector<std::array<std::uint64_t, 3>> triples;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      for (std::size_t k = j + 1; k < ps.size(); ++k)
        if (!keep || keep(ps[i], ps[j], ps[k])) triples.push_back({ps[i], ps[j], ps[k]});
  struct PerOrder {
    std::vector<LeinsterReport> hits;
    std::uint64_t candidates = 0;
  };
  auto per = parallel_map<PerOrder>(triples.size(), jobs, [&](std::size_t i) {
    PerOrder p;
    for (auto& c : p2qr_candidates(triples[i][0], triples[i][1], triples[i][2])) {
      ++p.candidates;
      if (c.report.is_leinster) p.hits.push_back(std::move(c.report));
    }
    return p;
  });
  P2qrData out;
  out.orders = triples.size();
  for (auto& p : per) {
    out.candidates += p.candidates;
    for (auto& h : p.hits) out.hits.push_back(std::move(h));
  }
  std::stable_sort(out.hits.begin(), out.hits.end(), detail::by_order_label);
  return out;
}

inline ClaimResult run_p2qr(std::uint64_t prime_bound, const RunContext& ctx) {
  return detail::timed([&] {
    ClaimResult c;
    c.id = "p2qr";
    c.anchor = "|G| = p^2qr, p < q < r primes, sigma(G) = 2|G| implies G = Q20 x C19 or Q28 x C13";
    const auto data = p2qr_hits(prime_bound, ctx.jobs);
    std::vector<std::string> expected;
    if (prime_bound >= 13) expected.push_back("Dic7xC13");
    if (prime_bound >= 19) expected.push_back("Dic5xC19");
    std::vector<std::string> got;
    Json hits = Json::array();
    for (const auto& h : data.hits) {
      got.push_back(h.label);
      hits.push_back(to_json(h));
    }
    c.evidence = Json{{"prime_bound", prime_bound},
                      {"coverage",
                       "PARTIAL COVERAGE: candidate families only (metacyclic, C_p x C_p x H, H x C_p, dicyclic and "
                       "named products); not a full isomorphism-class enumeration of order p^2qr"},
                      {"orders_checked", data.orders},
                      {"candidates_examined", data.candidates},
                      {"leinster_groups", hits},
                      {"expected", expected}};
    c.status = got == expected ? Status::Verified : Status::Refuted;
    c.summary = std::to_string(data.candidates) + " candidates over " + std::to_string(data.orders) +
                " orders; hits: " + detail::hit_list(data.hits);
    return c;
  });
}

// Equations and bounds -------------------------------------------------------------

inline Json solutions_json(const std::vector<nt::Solution>& sols) {
  Json out = Json::array();
  for (const auto& s : sols) out.push_back(s);
  return out;
}

inline ClaimResult run_equation_claim(const nt::EquationSpec& eq) {
  return detail::timed([&] {
    ClaimResult c;
    c.id = eq.id;
    c.anchor = eq.unreduced_text + "; " + eq.claim_text;
    const auto sols = nt::scan_equation(eq);
    Json vars = Json::array();
    Json bounds = Json::object();
    for (auto v : eq.free) {
      vars.push_back(nt::kVarNames[v]);
      bounds[nt::kVarNames[v]] = eq.default_bounds[v];
    }
    Json fixed = Json::object();
    for (const auto& [v, val] : eq.fixed) fixed[nt::kVarNames[v]] = val;
    bool unreduced_ok = true;
    for (const auto& s : sols) unreduced_ok &= nt::satisfies_unreduced(eq, s);
    c.evidence = Json{{"solved_form", eq.solved_text},
                      {"variables", vars},
                      {"fixed", fixed},
                      {"bounds", bounds},
                      {"solutions", solutions_json(sols)},
                      {"expected", solutions_json(eq.expected)},
                      {"unreduced_form_holds", unreduced_ok}};
    c.status = sols == eq.expected ? Status::Verified : Status::Refuted;
    std::string listed;
    for (const auto& s : sols) {
      listed += listed.empty() ? "(" : ", (";
      for (std::size_t i = 0; i < s.size(); ++i) listed += (i ? "," : "") + std::to_string(s[i]);
      listed += ")";
    }
    c.summary = "solutions: " + (listed.empty() ? std::string("none") : listed);
    return c;
  });
}

inline ClaimResult run_bound_claim(const nt::FractionBound& b) {
  return detail::timed([&] {
    ClaimResult c;
    c.id = b.id;
    c.anchor = "sigma(G) - |G| <= " + b.display + " < |G|";
    const auto res = nt::check_bound(b);
    Json terms = Json::array();
    for (const auto& t : b.terms) {
      Json j{{"term", t.value().str()}};
      if (!t.note.empty()) j["note"] = t.note;
      terms.push_back(j);
    }
    c.evidence = Json{{"terms", terms}, {"sum", res.sum.str()}, {"below_one", res.holds}};
    c.status = res.holds ? Status::Verified : Status::Refuted;
    c.summary = "sum " + res.sum.str() + (res.holds ? " < 1" : " >= 1");
    return c;
  });
}

// Property suites ------------------------------------------------------------------

/// Explicit corpus: every group of squarefree order <= 600 plus named families.
inline std::vector<std::string> corpus_specs() {
  std::vector<std::string> out;
  for (std::uint64_t n = 1; n <= 600; ++n) {
    if (!nt::is_squarefree(n)) continue;
    for (const auto& d : enumerate_squarefree(n)) out.push_back(d.serialize());
  }
  for (std::uint64_t m = 2; m <= 30; ++m) {
    out.push_back("D" + std::to_string(2 * m));
    out.push_back("Dic" + std::to_string(m));
  }
  for (const char* s : {"A4", "S4", "A5", "SD(7,8,6)", "SD(5,4,2)", "SD(9,2,8)", "SD(9,4,8)", "Dic5xC19",
                        "Dic7xC13", "S3xC5", "Dic3xC5", "A4xC5", "Ab(2,2)", "Ab(2,2,3)", "Ab(3,3)", "Ab(2,4)",
                        "C8", "C16", "C27", "C28", "C496"})
    out.push_back(s);
  return out;
}

/// Small groups paired for the multiplicativity suite.
inline std::vector<std::string> pairing_specs() {
  return {"C2", "C3", "C4", "C5", "C7", "C8", "C9", "C11", "C13", "S3", "D8", "Dic2", "D10",
          "Dic3", "A4", "SF(7,3,2)", "D14", "Dic5", "SD(5,4,2)", "C15", "Ab(2,2)", "Ab(3,3)", "SD(9,2,8)"};
}

inline std::vector<ClaimResult> run_theorems(const RunContext& ctx) {
  std::vector<ClaimResult> out;
  const auto specs = corpus_specs();
  std::vector<GroupFacts> facts;
  std::int64_t corpus_ms = 0;
  {
    const auto start = std::chrono::steady_clock::now();
    facts = parallel_map<GroupFacts>(specs.size(), ctx.jobs, [&](std::size_t i) {
      auto f = examine(build(parse_spec(specs[i])));
      if (ctx.cache) ctx.cache->insert(specs[i], f.report);
      return f;
    });
    corpus_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }

  // Leinster groups found anywhere, for the parity and tau suites.
  std::vector<LeinsterReport> leinster;
  out.push_back(detail::timed([&] {
    ClaimResult c;
    c.id = "abelian-quotients-cyclic";
    c.anchor = "sigma(G) <= 2|G| implies G/N cyclic for every normal N containing G'";
    std::uint64_t applicable = 0;
    Json failures = Json::array();
    for (const auto& f : facts) {
      if (!f.quotients_checked) continue;
      ++applicable;
      if (!f.quotients_cyclic) failures.push_back(f.noncyclic_quotient);
    }
    c.evidence = Json{{"corpus_size", facts.size()}, {"groups_with_sigma_at_most_2n", applicable},
                      {"counterexamples", failures}};
    c.status = failures.empty() ? Status::Verified : Status::Refuted;
    c.summary = std::to_string(applicable) + " groups checked";
    return c;
  }));
  // corpus construction is charged to the first suite
  out.back().elapsed_ms += corpus_ms;

  out.push_back(detail::timed([&] {
    ClaimResult c;
    c.id = "cyclic-perfect";
    c.anchor = "C_n is Leinster iff n is perfect";
    Json failures = Json::array();
    Json perfect = Json::array();
    constexpr std::uint64_t explicit_limit = 600, structural_limit = 10000;
    auto expl = parallel_map<LeinsterReport>(explicit_limit, ctx.jobs, [&](std::size_t i) {
      return explicit_report("C" + std::to_string(i + 1), ctx);
    });
    for (std::uint64_t n = 1; n <= structural_limit; ++n) {
      const bool is_l = n <= explicit_limit ? expl[n - 1].is_leinster : analyze_sd({1, n, 1}).is_leinster;
      if (is_l != nt::is_perfect(n)) failures.push_back(n);
      if (is_l) perfect.push_back(n);
    }
    c.evidence = Json{{"explicit_up_to", explicit_limit}, {"structural_up_to", structural_limit},
                      {"leinster_orders", perfect}, {"counterexamples", failures}};
    c.status = failures.empty() ? Status::Verified : Status::Refuted;
    c.summary = "Leinster cyclic orders: " + perfect.dump();
    return c;
  }));

  out.push_back(detail::timed([&] {
    ClaimResult c;
    c.id = "coprime-multiplicativity";
    c.anchor = "gcd(|G1|,|G2|) = 1 implies sigma(G1 x G2) = sigma(G1)sigma(G2), tau(G1 x G2) = tau(G1)tau(G2)";
    const auto small = pairing_specs();
    std::vector<GroupTable> tables;
    for (const auto& s : small) tables.push_back(build(parse_spec(s)));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < small.size(); ++i)
      for (std::size_t j = i + 1; j < small.size(); ++j)
        if (std::gcd(tables[i].order(), tables[j].order()) == 1 && tables[i].order() * tables[j].order() <= 600)
          pairs.emplace_back(i, j);
    auto ok = parallel_map<int>(pairs.size(), ctx.jobs, [&](std::size_t k) {
      const auto& [i, j] = pairs[k];
      const auto direct = analyze(direct_product(tables[i], tables[j]));
      const auto rule = analyze_coprime_product(analyze(tables[i]), analyze(tables[j]), direct.label);
      return direct == rule ? 1 : 0;
    });
    Json failures = Json::array();
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (!ok[k]) failures.push_back(small[pairs[k].first] + "x" + small[pairs[k].second]);
    c.evidence = Json{{"pairs", pairs.size()}, {"counterexamples", failures}};
    c.status = failures.empty() ? (pairs.size() >= 50 ? Status::Verified : Status::Partial) : Status::Refuted;
    c.summary = std::to_string(pairs.size()) + " coprime pairs";
    return c;
  }));

  // Leinster sample: census to 2000, the p^2qr sweep, and the corpus.
  {
    auto census = census_hits(2000, ctx.jobs);
    leinster = census.hits;
    for (auto& h : p2qr_hits(31, ctx.jobs).hits) leinster.push_back(h);
    for (const auto& f : facts)
      if (f.report.is_leinster) leinster.push_back(f.report);
    std::stable_sort(leinster.begin(), leinster.end(), detail::by_order_label);
    leinster.erase(std::unique(leinster.begin(), leinster.end(),
                               [](const auto& a, const auto& b) { return a.label == b.label; }),
                   leinster.end());
  }

  out.push_back(detail::timed([&] {
    ClaimResult c;
    c.id = "tau-lower-bound";
    c.anchor = "G Leinster, |G| a product of four primes, G != C7 x| C8 implies tau(G) > 7";
    Json checked = Json::array();
    Json failures = Json::array();
    for (const auto& r : leinster) {
      if (nt::big_omega(r.order) != 4 || r.label == "SD(7,8,6)") continue;
      checked.push_back(Json{{"label", r.label}, {"tau", r.tau}});
      if (r.tau <= 7) failures.push_back(r.label);
    }
    c.evidence = Json{{"sample", "census <= 2000, p2qr sweep to 31, explicit corpus"},
                      {"checked", checked}, {"counterexamples", failures}};
    c.status = failures.empty() ? Status::Verified : Status::Refuted;
    c.summary = std::to_string(checked.size()) + " Leinster groups with four prime factors";
    return c;
  }));

  out.push_back(detail::timed([&] {
    ClaimResult c;
    c.id = "prime-index-center";
    c.anchor = "abelian normal A with |G:A| = p prime implies |G| = p|G'||Z(G)|";
    std::uint64_t applicable = 0, skipped_abelian = 0;
    Json failures = Json::array();
    for (const auto& f : facts) {
      if (f.abelian_prime_indices.empty()) continue;
      if (f.abelian) {
        ++skipped_abelian;
        continue;
      }
      ++applicable;
      if (!f.prime_index_law) failures.push_back(f.label);
    }
    c.evidence = Json{{"corpus_size", facts.size()}, {"applicable", applicable},
                      {"skipped_abelian", skipped_abelian}, {"counterexamples", failures}};
    c.status = failures.empty() ? Status::Verified : Status::Refuted;
    c.summary = std::to_string(applicable) + " non-abelian groups with an abelian normal subgroup of prime index";
    return c;
  }));

  out.push_back(detail::timed([&] {
    ClaimResult c;
    c.id = "normal-complement";
    c.anchor = "p smallest prime of |G|, Sylow p-subgroup cyclic implies a normal subgroup of order |G|/p^k";
    std::uint64_t applicable = 0;
    Json failures = Json::array();
    for (const auto& f : facts) {
      if (!f.smallest_sylow_cyclic) continue;
      ++applicable;
      if (!f.complement_found) failures.push_back(f.label);
    }
    c.evidence = Json{{"corpus_size", facts.size()}, {"applicable", applicable}, {"counterexamples", failures}};
    c.status = failures.empty() ? Status::Verified : Status::Refuted;
    c.summary = std::to_string(applicable) + " groups with cyclic Sylow at the smallest prime";
    return c;
  }));

  out.push_back(detail::timed([&] {
    ClaimResult c;
    c.id = "odd-normal-parity";
    c.anchor = "G Leinster implies an even number of odd-order normal subgroups";
    Json checked = Json::array();
    Json failures = Json::array();
    for (const auto& r : leinster) {
      checked.push_back(Json{{"label", r.label}, {"odd_normal_count", r.odd_normal_count}});
      if (r.odd_normal_count % 2) failures.push_back(r.label);
    }
    c.evidence = Json{{"checked", checked}, {"counterexamples", failures}};
    c.status = failures.empty() ? Status::Verified : Status::Refuted;
    c.summary = std::to_string(checked.size()) + " Leinster groups";
    return c;
  }));

  out.push_back(detail::timed([&] {
    ClaimResult c;
    c.id = "p3q-candidates";
    c.anchor = "|G| = p^3q, G Leinster implies G = C7 x| C8";
    constexpr std::uint64_t limit = 2000;
    Json hits = Json::array();
    bool extra = false;
    for (const auto& r : leinster) {
      const auto f = nt::factorize(r.order);
      const bool p3q = r.order <= limit && f.size() == 2 &&
                       ((f[0].second == 3 && f[1].second == 1) || (f[0].second == 1 && f[1].second == 3));
      if (!p3q) continue;
      hits.push_back(r.label);
      extra |= r.label != "SD(7,8,6)";
    }
    c.evidence = Json{{"coverage", "partial (candidate families only; census universe to order 2000)"},
                      {"leinster_groups", hits}};
    c.status = extra ? Status::Refuted : Status::Partial;
    c.summary = "partial (candidate families only; " + hits.dump() + " found Leinster, no other hits)";
    return c;
  }));

  out.push_back(detail::timed([&] {
    ClaimResult c;
    c.id = "orders-60-132";
    c.anchor = "no Leinster group of order 60 or 132";
    auto data = p2qr_hits(11, ctx.jobs, [](auto p, auto q, auto r) {
      return p == 2 && q == 3 && (r == 5 || r == 11);
    });
    Json hits = Json::array();
    for (const auto& h : data.hits) hits.push_back(to_json(h));
    c.evidence = Json{{"coverage", "partial (candidate families only; not every group of these orders)"},
                      {"candidates_examined", data.candidates},
                      {"leinster_groups", hits}};
    c.status = data.hits.empty() ? Status::Partial : Status::Refuted;
    c.summary = std::to_string(data.candidates) + " candidates, " + std::to_string(data.hits.size()) + " Leinster";
    return c;
  }));

  for (const auto& eq : nt::equation_registry()) out.push_back(run_equation_claim(eq));
  for (const auto& b : nt::bound_registry()) out.push_back(run_bound_claim(b));
  return out;
}

// Listing ----------------------------------------------------------------------------

struct ClaimInfo {
  std::string id;
  std::string command;
  std::string anchor;
};

inline std::vector<ClaimInfo> list_claims() {
  std::vector<ClaimInfo> out{
      {"census", "census", "Leinster groups G with |G| <= bound"},
      {"pqrs", "pqrs", "|G| = pqrs, p < q < r < s primes: not Leinster"},
      {"p2qr", "p2qr", "|G| = p^2qr Leinster implies Q20 x C19 or Q28 x C13"},
      {"abelian-quotients-cyclic", "theorems", "sigma(G) <= 2|G| implies abelian quotients cyclic"},
      {"cyclic-perfect", "theorems", "C_n Leinster iff n perfect"},
      {"coprime-multiplicativity", "theorems", "sigma, tau multiplicative on coprime direct products"},
      {"tau-lower-bound", "theorems", "Leinster of order pqrs, G != C7 x| C8: tau(G) > 7"},
      {"prime-index-center", "theorems", "abelian normal subgroup of prime index p: |G| = p|G'||Z(G)|"},
      {"normal-complement", "theorems", "cyclic Sylow at the smallest prime has a normal complement"},
      {"odd-normal-parity", "theorems", "Leinster: even number of odd-order normal subgroups"},
      {"p3q-candidates", "theorems", "|G| = p^3q Leinster implies C7 x| C8 (partial)"},
      {"orders-60-132", "theorems", "no Leinster group of order 60 or 132 (partial)"},
  };
  for (const auto& eq : nt::equation_registry())
    out.push_back({eq.id, "theorems", eq.unreduced_text + "; " + eq.claim_text});
  for (const auto& b : nt::bound_registry()) out.push_back({b.id, "theorems", b.display + " < |G|"});
  return out;
}

}  // namespace leinster::verify
