#pragma once

// Seeded property suite: one property per acceptance criterion. Every case
// is generated into a Document, so a failing case can be replayed from the
// report alone.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ntt/document.hpp"

namespace ntt {

struct SuiteConfig {
  std::uint32_t prime = 2;
  /// "one-vertex", "A<n>" (linear quiver) or a path to a document whose
  /// quiver is used.
  std::string quiver = "one-vertex";
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  std::size_t max_dim = 4;
  int window_lo = -4;
  int window_hi = 4;
  std::vector<int> shifts{-2, -1, 0, 1, 2};
  /// Properties to run; empty runs all of them.
  std::vector<std::string> properties;
  /// "" or "brutal-truncation".
  std::string fault;
  /// 0 picks NTT_THREADS or the hardware concurrency.
  std::size_t threads = 0;
  bool timings = false;

  /// Throws std::invalid_argument on an invalid configuration.
  void validate() const;
  QuiverPtr resolve_quiver() const;
};

SuiteConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const SuiteConfig& c);

struct CheckResult {
  bool ok = true;
  std::string detail;
};

struct PropertyInfo {
  std::string name;
  int criterion;
  std::string summary;
};

const std::vector<PropertyInfo>& property_list();
std::size_t instance_count(const std::string& property, const SuiteConfig& config);
std::uint64_t case_seed(std::uint64_t seed, const std::string& property, std::size_t index);
Document generate_instance(const std::string& property, const SuiteConfig& config, std::size_t index);
/// Exceptions thrown while checking are reported as failures.
CheckResult check_instance(const std::string& property, const Document& doc);

struct Counterexample {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string detail;
  Document document;
};

struct PropertyReport {
  std::string name;
  int criterion = 0;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<Counterexample> counterexample;  // lowest failing index
  std::optional<double> seconds;
  bool ok() const { return failed == 0; }
};

struct Report {
  SuiteConfig config;
  std::vector<PropertyReport> properties;
  bool ok() const;
};

Report run_suite(const SuiteConfig& config);
nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string report_to_text(const Report& r);

/// Re-checks the counterexample of a property entry in a JSON report.
CheckResult replay(const nlohmann::json& property_entry);

}  // namespace ntt
