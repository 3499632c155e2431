#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ckhopf {

struct ReportEntry {
  std::string check;
  std::string algebra_id;
  std::string item;
  bool pass = true;
  std::string residual = "0";
  double wall_time_ms = 0;
  std::string note;  // advisory flags, witnesses
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::uint64_t seed) : seed_(seed) {}

  void add(ReportEntry e) { entries_.push_back(std::move(e)); }
  void add(const std::string& check, const std::string& algebra_id, const std::string& item, bool pass,
           std::string residual, double ms = 0, std::string note = {});

  /// Times `f`, which returns the canonical residual text; "0" means pass.
  template <class F>
  void record(const std::string& check, const std::string& algebra_id, const std::string& item, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    std::string residual = f();
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    bool pass = residual == "0";
    add(check, algebra_id, item, pass, std::move(residual), ms);
  }

  void merge(const VerificationReport& other);

  const std::vector<ReportEntry>& entries() const { return entries_; }
  bool all_pass() const;
  std::size_t failures() const;
  std::size_t size() const { return entries_.size(); }
  std::uint64_t seed() const { return seed_; }
  void set_seed(std::uint64_t s) { seed_ = s; }

  /// Entries whose check name starts with `prefix`.
  VerificationReport filter(const std::string& prefix) const;

  /// With `deterministic`, wall times are written as 0 so that reruns are byte-identical.
  nlohmann::json to_json(bool deterministic = false) const;
  std::string summary() const;

 private:
  std::uint64_t seed_ = 0;
  std::vector<ReportEntry> entries_;
};

}  // namespace ckhopf
