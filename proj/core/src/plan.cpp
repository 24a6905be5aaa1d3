#include "lrd/plan.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <string>

#include "lrd/errors.hpp"

namespace lrd {

namespace {

const std::array<const char*, 7> kExperiments = {
    "clt_sum",        "fpt_clt",  "vervaat_chi2", "identity_sweep",
    "coupling",       "reduction", "edf_marginal"};

const std::array<const char*, 6> kSubordinators = {
    "auto", "identity", "square", "exp", "qexp", "lognormal"};

bool known_experiment(const std::string& name) {
  return std::find_if(kExperiments.begin(), kExperiments.end(),
                      [&](const char* s) { return name == s; }) !=
         kExperiments.end();
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw parameter_error("bad value for " + key + ": " + v);
  }
  if (pos != v.size())
    throw parameter_error("bad value for " + key + ": " + v);
  return x;
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  unsigned long long x = 0;
  try {
    x = std::stoull(v, &pos);
  } catch (const std::exception&) {
    throw parameter_error("bad value for " + key + ": " + v);
  }
  if (pos != v.size() || (!v.empty() && v[0] == '-'))
    throw parameter_error("bad value for " + key + ": " + v);
  return static_cast<std::uint64_t>(x);
}

}  // namespace

plan default_plan(const std::string& experiment) {
  if (!known_experiment(experiment))
    throw parameter_error("unknown experiment: " + experiment);
  plan p;
  p.experiment = experiment;
  if (experiment == "clt_sum") {
    p.replicates = 2000;
  } else if (experiment == "fpt_clt") {
    p.replicates = 2000;
  } else if (experiment == "vervaat_chi2") {
    p.replicates = 2000;
  } else if (experiment == "identity_sweep") {
    p.n = 1000;
    p.replicates = 50;
  } else if (experiment == "edf_marginal") {
    p.alpha = 0.5;
    p.replicates = 1000;
  }
  // coupling and reduction read horizon_* and coupling_replicates instead of
  // n and replicates.
  return p;
}

void set_field(plan& p, const std::string& key, const std::string& value) {
  if (key == "experiment") {
    if (!known_experiment(value))
      throw parameter_error("unknown experiment: " + value);
    p.experiment = value;
  } else if (key == "alpha") {
    p.alpha = parse_double(key, value);
  } else if (key == "truncation") {
    p.truncation = parse_u64(key, value);
  } else if (key == "n") {
    p.n = parse_u64(key, value);
  } else if (key == "replicates") {
    p.replicates = parse_u64(key, value);
  } else if (key == "subordinator") {
    p.subordinator = value;
  } else if (key == "lambda") {
    p.lambda = parse_double(key, value);
  } else if (key == "lognormal_m") {
    p.lognormal_m = parse_double(key, value);
  } else if (key == "lognormal_s") {
    p.lognormal_s = parse_double(key, value);
  } else if (key == "kinds") {
    p.kinds = value;
  } else if (key == "horizon_min") {
    p.horizon_min = parse_u64(key, value);
  } else if (key == "horizon_max") {
    p.horizon_max = parse_u64(key, value);
  } else if (key == "coupling_replicates") {
    p.coupling_replicates = parse_u64(key, value);
  } else if (key == "t_count") {
    p.t_count = parse_u64(key, value);
  } else if (key == "rank_m") {
    p.rank_m = static_cast<int>(parse_u64(key, value));
  } else if (key == "level_t") {
    p.level_t = parse_double(key, value);
  } else if (key == "base_seed") {
    p.base_seed = parse_u64(key, value);
  } else if (key == "workers") {
    p.workers = static_cast<unsigned>(parse_u64(key, value));
  } else if (key == "tolerance") {
    p.tolerance = parse_double(key, value);
  } else {
    throw parameter_error("unknown config key: " + key);
  }
}

void apply_config(plan& p, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw parameter_error("config line " + std::to_string(lineno) +
                            " is not key=value: " + line);
    set_field(p, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void validate(const plan& p) {
  if (!known_experiment(p.experiment))
    throw parameter_error("unknown experiment: " + p.experiment);
  if (!(p.alpha > 0.0 && p.alpha < 1.0))
    throw parameter_error("alpha must lie in (0,1), got " +
                          std::to_string(p.alpha));
  if (p.truncation < 1) throw parameter_error("truncation must be >= 1");
  if (p.n < 2) throw parameter_error("n must be >= 2");
  if (p.replicates < 1) throw parameter_error("replicates must be >= 1");
  if (std::find_if(kSubordinators.begin(), kSubordinators.end(),
                   [&](const char* s) { return p.subordinator == s; }) ==
      kSubordinators.end())
    throw parameter_error("unknown subordinator: " + p.subordinator);
  if (!(p.lambda > 0.0)) throw parameter_error("lambda must be positive");
  if (!(p.lognormal_s > 0.0))
    throw parameter_error("lognormal_s must be positive");
  if (p.horizon_min < 4 || p.horizon_max < p.horizon_min)
    throw parameter_error("need 4 <= horizon_min <= horizon_max");
  if (p.coupling_replicates < 2)
    throw parameter_error("coupling_replicates must be >= 2");
  if (p.t_count < 8) throw parameter_error("t_count must be >= 8");
  if (p.rank_m < 1) throw parameter_error("rank_m must be >= 1");
  if (p.rank_m * p.alpha >= 1.0)
    throw parameter_error("need rank_m * alpha < 1");
  if (!(p.level_t > 0.0 && p.level_t < 1.0))
    throw parameter_error("level_t must lie in (0,1)");
  if (p.workers < 1) throw parameter_error("workers must be >= 1");
  if (p.kinds.empty()) throw parameter_error("kinds must be nonempty");
}

}  // namespace lrd
