#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lrd/plan.hpp"

namespace lrd {

// Outcome of one experiment run. Key order in the vectors is the key order
// in the rendered JSON, and runs are deterministic given the plan, so two
// renders differ only in the timing block.
struct experiment_report {
  plan p;
  std::vector<std::string> notes;  // resolved-interpretation markers
  std::vector<std::pair<std::string, double>> stats;
  std::vector<std::pair<std::string, double>> slopes;
  std::vector<std::pair<std::string, bool>> flags;
  std::vector<std::pair<std::string, double>> tolerances;
  double seconds = 0.0;
  std::string csv_header;
  std::vector<std::string> csv_rows;

  bool passed() const;
  double stat(const std::string& key) const;   // throws data_error if absent
  double slope(const std::string& key) const;
};

std::uint64_t fnv1a64(const std::string& s);
std::string hex64(std::uint64_t v);

// Shortest decimal text that round-trips the value exactly; the one number
// format used in canonical plans and CSV output.
std::string format_double(double x);

// Canonical "key=value\n" serialization of a plan; hashed into
// version.config_hash.
std::string plan_canonical(const plan& p);

// Render the full report as JSON text (top-level keys: plan, seeds, stats,
// slopes, flags, tolerances, version, timing).
std::string render_json(const experiment_report& r);

// Write <stem>.json and <stem>_replicates.csv under dir. Returns the JSON
// path.
std::string write_report_files(const std::string& dir, const std::string& stem,
                               const experiment_report& r);

}  // namespace lrd
