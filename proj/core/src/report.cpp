#include "lrd/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "lrd/errors.hpp"
#include "lrd/version.hpp"

namespace lrd {

namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  double back = 0.0;
  for (int prec = 1; prec <= 16; ++prec) {
    char probe[64];
    std::snprintf(probe, sizeof probe, "%.*g", prec, x);
    std::sscanf(probe, "%lf", &back);
    if (back == x) return probe;
  }
  return buf;
}

bool experiment_report::passed() const {
  for (const auto& [key, ok] : flags)
    if (!ok) return false;
  return true;
}

double experiment_report::stat(const std::string& key) const {
  for (const auto& [k, v] : stats)
    if (k == key) return v;
  throw data_error("no stat named " + key);
}

double experiment_report::slope(const std::string& key) const {
  for (const auto& [k, v] : slopes)
    if (k == key) return v;
  throw data_error("no slope named " + key);
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

std::string plan_canonical(const plan& p) {
  std::string out;
  auto add = [&](const char* key, const std::string& value) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  };
  add("experiment", p.experiment);
  add("alpha", format_double(p.alpha));
  add("truncation", std::to_string(p.truncation));
  add("n", std::to_string(p.n));
  add("replicates", std::to_string(p.replicates));
  add("subordinator", p.subordinator);
  add("lambda", format_double(p.lambda));
  add("lognormal_m", format_double(p.lognormal_m));
  add("lognormal_s", format_double(p.lognormal_s));
  add("kinds", p.kinds);
  add("horizon_min", std::to_string(p.horizon_min));
  add("horizon_max", std::to_string(p.horizon_max));
  add("coupling_replicates", std::to_string(p.coupling_replicates));
  add("t_count", std::to_string(p.t_count));
  add("rank_m", std::to_string(p.rank_m));
  add("level_t", format_double(p.level_t));
  add("base_seed", std::to_string(p.base_seed));
  add("tolerance", format_double(p.tolerance));
  // workers is deliberately absent: it schedules the run without touching
  // any result, so it must not split config hashes.
  return out;
}

std::string render_json(const experiment_report& r) {
  ordered_json j;

  ordered_json jp;
  jp["experiment"] = r.p.experiment;
  jp["alpha"] = r.p.alpha;
  jp["truncation"] = r.p.truncation;
  jp["n"] = r.p.n;
  jp["replicates"] = r.p.replicates;
  jp["subordinator"] = r.p.subordinator;
  jp["lambda"] = r.p.lambda;
  jp["lognormal_m"] = r.p.lognormal_m;
  jp["lognormal_s"] = r.p.lognormal_s;
  jp["kinds"] = r.p.kinds;
  jp["horizon_min"] = r.p.horizon_min;
  jp["horizon_max"] = r.p.horizon_max;
  jp["coupling_replicates"] = r.p.coupling_replicates;
  jp["t_count"] = r.p.t_count;
  jp["rank_m"] = r.p.rank_m;
  jp["level_t"] = r.p.level_t;
  jp["base_seed"] = r.p.base_seed;
  jp["tolerance"] = r.p.tolerance;
  jp["notes"] = r.notes;
  j["plan"] = std::move(jp);

  ordered_json js;
  js["base_seed"] = r.p.base_seed;
  js["replicate_policy"] =
      "splitmix64(base_seed + 0x9e3779b97f4a7c15 * (r + 1))";
  js["innovation_stream"] = 0;
  j["seeds"] = std::move(js);

  ordered_json jstats;
  for (const auto& [k, v] : r.stats) jstats[k] = v;
  j["stats"] = std::move(jstats);

  ordered_json jslopes;
  for (const auto& [k, v] : r.slopes) jslopes[k] = v;
  j["slopes"] = std::move(jslopes);

  ordered_json jflags;
  for (const auto& [k, v] : r.flags) jflags[k] = v;
  j["flags"] = std::move(jflags);

  ordered_json jtol;
  for (const auto& [k, v] : r.tolerances) jtol[k] = v;
  j["tolerances"] = std::move(jtol);

  ordered_json jver;
  jver["artifact"] = artifact_version;
  jver["config_hash"] = hex64(fnv1a64(plan_canonical(r.p)));
  j["version"] = std::move(jver);

  ordered_json jtime;
  jtime["seconds"] = r.seconds;
  jtime["workers"] = r.p.workers;
  j["timing"] = std::move(jtime);

  return j.dump(2) + "\n";
}

std::string write_report_files(const std::string& dir, const std::string& stem,
                               const experiment_report& r) {
  namespace fs = std::filesystem;
  const fs::path base = dir.empty() ? fs::path(".") : fs::path(dir);
  std::error_code ec;
  fs::create_directories(base, ec);
  if (ec) throw data_error("cannot create directory " + base.string());

  const fs::path json_path = base / (stem + ".json");
  {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw data_error("cannot write " + json_path.string());
    out << render_json(r);
  }

  const fs::path csv_path = base / (stem + "_replicates.csv");
  {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw data_error("cannot write " + csv_path.string());
    out << r.csv_header << '\n';
    for (const auto& row : r.csv_rows) out << row << '\n';
  }
  return json_path.string();
}

}  // namespace lrd
