#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "leinster/verify/json_io.hpp"

namespace leinster::verify {

/// JSON-lines store of explicit reports, one {spec, report} record per line,
/// keyed by the exact spec text. Lookups and inserts are thread-safe; only
/// flush() touches the file, and it appends new records in key order.
class ReportCache {
 public:
  ReportCache() = default;

  explicit ReportCache(std::string path, std::ostream& warn = std::cerr) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        const auto j = Json::parse(line);
        const auto spec = j.at("spec").get<std::string>();
        stored_.insert_or_assign(spec, report_from_json(j.at("report")));
      } catch (const std::exception& e) {
        warn << "warning: " << path_ << ":" << lineno << ": skipping corrupt cache line (" << e.what()
             << ")\n";
        ++skipped_;
      }
    }
  }

  std::optional<LeinsterReport> find(const std::string& spec) const {
    std::lock_guard lock(mu_);
    if (auto it = stored_.find(spec); it != stored_.end()) return it->second;
    if (auto it = fresh_.find(spec); it != fresh_.end()) return it->second;
    return std::nullopt;
  }

  void insert(const std::string& spec, const LeinsterReport& r) {
    std::lock_guard lock(mu_);
    if (!stored_.count(spec)) fresh_.emplace(spec, r);
  }

  void flush() {
    std::lock_guard lock(mu_);
    if (path_.empty() || fresh_.empty()) return;
    std::ofstream out(path_, std::ios::app);
    for (const auto& [spec, r] : fresh_) out << Json{{"spec", spec}, {"report", to_json(r)}}.dump() << '\n';
    stored_.merge(fresh_);
    fresh_.clear();
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return stored_.size() + fresh_.size();
  }
  std::size_t skipped_lines() const { return skipped_; }

 private:
  std::string path_;
  mutable std::mutex mu_;
  std::map<std::string, LeinsterReport> stored_, fresh_;
  std::size_t skipped_ = 0;
};

}  // namespace leinster::verify
