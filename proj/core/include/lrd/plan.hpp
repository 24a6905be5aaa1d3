#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace lrd {

// Fully resolved run description. Every field participates in the canonical
// serialization, so any change to a default changes config hashes.
struct plan {
  std::string experiment;
  double alpha = 0.4;
  std::size_t truncation = std::size_t{1} << 16;  // psi tail cut M
  std::size_t n = std::size_t{1} << 12;
  std::size_t replicates = 2000;
  std::string subordinator = "auto";
  double lambda = 1.0;       // qexp rate
  double lognormal_m = 0.0;  // lognormal location
  double lognormal_s = 0.5;  // lognormal scale
  std::string kinds = "S,N,Z";
  std::size_t horizon_min = std::size_t{1} << 10;
  std::size_t horizon_max = std::size_t{1} << 16;
  std::size_t coupling_replicates = 50;
  std::size_t t_count = 100;
  int rank_m = 1;          // edf deviation order
  double level_t = 0.5;    // edf evaluation level in (0,1)
  std::uint64_t base_seed = 1;
  unsigned workers = 1;
  double tolerance = -1.0;  // negative means the experiment default
};

// Default plan for a named experiment. Throws parameter_error for unknown
// names.
plan default_plan(const std::string& experiment);

// Apply "key=value" lines to p. Unknown keys and malformed values throw
// parameter_error; '#' starts a comment, blank lines are skipped.
void apply_config(plan& p, const std::string& text);

// Set one key. Throws parameter_error for unknown keys or bad values.
void set_field(plan& p, const std::string& key, const std::string& value);

// Range and consistency checks; throws parameter_error.
void validate(const plan& p);

}  // namespace lrd
