#include "ckhopf/report.hpp"

#include <algorithm>
#include <sstream>

namespace ckhopf {

void VerificationReport::add(const std::string& check, const std::string& algebra_id, const std::string& item,
                             bool pass, std::string residual, double ms, std::string note) {
  entries_.push_back({check, algebra_id, item, pass, std::move(residual), ms, std::move(note)});
}

void VerificationReport::merge(const VerificationReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool VerificationReport::all_pass() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const ReportEntry& e) { return e.pass; });
}

std::size_t VerificationReport::failures() const {
  return std::count_if(entries_.begin(), entries_.end(), [](const ReportEntry& e) { return !e.pass; });
}

VerificationReport VerificationReport::filter(const std::string& prefix) const {
  VerificationReport r(seed_);
  for (const auto& e : entries_) {
    if (e.check.compare(0, prefix.size(), prefix) == 0) r.add(e);
  }
  return r;
}

nlohmann::json VerificationReport::to_json(bool deterministic) const {
  nlohmann::json j;
  j["status"] = all_pass() ? "pass" : "fail";
  j["seed"] = seed_;
  j["total"] = entries_.size();
  j["failures"] = failures();
  auto& arr = j["entries"] = nlohmann::json::array();
  for (const auto& e : entries_) {
    nlohmann::json o{{"check", e.check},
                     {"algebra_id", e.algebra_id},
                     {"item", e.item},
                     {"status", e.pass ? "pass" : "fail"},
                     {"residual", e.residual},
                     {"wall_time_ms", deterministic ? 0.0 : e.wall_time_ms}};
    if (!e.note.empty()) o["note"] = e.note;
    arr.push_back(std::move(o));
  }
  return j;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << entries_.size() - failures() << "/" << entries_.size() << " passed";
  for (const auto& e : entries_) {
    if (!e.pass) os << "\n  FAIL " << e.check << " [" << e.algebra_id << "] " << e.item << ": " << e.residual;
  }
  return os.str();
}

}  // namespace ckhopf
