#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "leinster/constructors.hpp"
#include "leinster/numtheory.hpp"
#include "leinster/report.hpp"
#include "leinster/verify/structural.hpp"

namespace leinster::verify {

/// A group from one of the constructible families together with its report.
/// `label` parses back to a spec that builds the group.
struct Candidate {
  std::string label;
  std::string family;
  LeinsterReport report;
};

namespace detail {

/// Explicit reports for the named permutation groups, computed once.
inline const LeinsterReport& named_report(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, LeinsterReport> memo;
  std::lock_guard lock(mu);
  auto it = memo.find(name);
  if (it == memo.end()) it = memo.emplace(name, analyze(build(named(name)))).first;
  return it->second;
}

}  // namespace detail

/// Families outside the split metacyclic one: D_2m and Dic_m with m even
/// (non-cyclic Sylow 2-subgroup) and A4, S4, A5. Only those of order k.
inline std::vector<Candidate> non_sd_atoms(std::uint64_t k) {
  std::vector<Candidate> out;
  if (k % 4 == 0) {
    const std::uint64_t m = k / 2;
    const std::string label = "D" + std::to_string(k);
    out.push_back({label, "dihedral", analyze_metacyclic(label, m, 2, m - 1, 0)});
  }
  if (k % 8 == 0) {
    const std::uint64_t m = k / 4;
    const std::string label = "Dic" + std::to_string(m);
    out.push_back({label, "dicyclic", analyze_metacyclic(label, 2 * m, 2, 2 * m - 1, m)});
  }
  for (const char* name : {"A4", "S4", "A5"}) {
    const auto& r = detail::named_report(name);
    if (r.order == k) out.push_back({name, "named", r});
  }
  return out;
}

/// The census universe at order n: cyclic, squarefree, dihedral, dicyclic and
/// split metacyclic C_a x| C_b with gcd(a, b) = 1 (one family up to
/// isomorphism), the named groups, and coprime products of these. Sorted by
/// label.
inline std::vector<Candidate> census_candidates(std::uint64_t n) {
  std::vector<Candidate> out;
  for (const auto& key : sd_family(n)) out.push_back({sd_label(key), "metacyclic", analyze_sd(key)});
  // Every non-metacyclic atom has even order, so at most one can appear in a
  // coprime product; the other factor is metacyclic.
  for (std::uint64_t k : nt::divisors(n)) {
    if (std::gcd(k, n / k) != 1) continue;
    for (const auto& atom : non_sd_atoms(k)) {
      if (k == n) {
        out.push_back(atom);
        continue;
      }
      for (const auto& key : sd_family(n / k)) {
        const std::string label = atom.label + "x" + sd_label(key);
        out.push_back({label, atom.family + " x metacyclic", analyze_coprime_product(atom.report, analyze_sd(key), label)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
  return out;
}

/// Candidates of order p^2 q r: the census universe plus the families whose
/// Sylow p-subgroup is C_p x C_p, namely C_p x C_p x H with |H| = qr and
/// H x C_p with |H| = pqr where p divides the non-central part of H.
inline std::vector<Candidate> p2qr_candidates(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  const std::uint64_t n = p * p * q * r;
  auto out = census_candidates(n);
  const auto elem = analyze_elementary_p2(p);
  for (const auto& key : sd_family(q * r)) {
    const std::string label = elem.label + "x" + sd_label(key);
    out.push_back({label, "elementary x metacyclic", analyze_coprime_product(elem, analyze_sd(key), label)});
  }
  for (const auto& key : sd_family(p * q * r)) {
    const bool p_in_derived = key.a1 % p == 0;
    const bool p_acts = key.a1 > 1 && nt::mult_order(static_cast<nt::i64>(key.t), key.a1) % p == 0;
    // Otherwise the C_p factor of H is central and the group is C_p x C_p x H'.
    if (!p_in_derived && !p_acts) continue;
    out.push_back({sd_label(key) + "xC" + std::to_string(p), "metacyclic x C_p", analyze_sd_times_prime(key, p)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
  return out;
}

}  // namespace leinster::verify
