#pragma once

#include <string>

#include "json.hpp"
#include "leinster/report.hpp"

namespace leinster::verify {

using Json = nlohmann::ordered_json;

inline Json to_json(const LeinsterReport& r) {
  return Json{{"label", r.label},
              {"order", r.order},
              {"normal_orders", r.normal_orders},
              {"sigma", r.sigma},
              {"tau", r.tau},
              {"leinster", r.is_leinster},
              {"odd_normal_count", r.odd_normal_count}};
}

/// Inverse of to_json; rejects records whose derived fields disagree with
/// normal_orders.
inline LeinsterReport report_from_json(const Json& j) {
  auto r = make_report(j.at("label").get<std::string>(), j.at("order").get<std::uint64_t>(),
                       j.at("normal_orders").get<std::vector<std::uint64_t>>());
  if (r.sigma != j.at("sigma").get<std::uint64_t>() || r.tau != j.at("tau").get<std::uint64_t>() ||
      r.is_leinster != j.at("leinster").get<bool>() ||
      r.odd_normal_count != j.at("odd_normal_count").get<std::uint64_t>()) {
    throw InputError("inconsistent report record for " + r.label);
  }
  return r;
}

}  // namespace leinster::verify
