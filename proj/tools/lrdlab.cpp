// lrdlab: generate model paths, verify limit behaviour, print constants.
//
// Exit codes: 0 success (verify: all flags passed), 1 verify ran but a flag
// failed or compared reports differ, 2 invalid parameters or usage, 3 a
// numeric routine gave up.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lrd/constants.hpp"
#include "lrd/errors.hpp"
#include "lrd/experiments.hpp"
#include "lrd/fbm.hpp"
#include "lrd/linear_process.hpp"
#include "lrd/plan.hpp"
#include "lrd/processes.hpp"
#include "lrd/report.hpp"
#include "lrd/rng.hpp"
#include "lrd/subordination.hpp"
#include "lrd/version.hpp"

namespace fs = std::filesystem;

namespace {

struct common_opts {
  std::string config_path;
  std::vector<std::string> sets;
  std::string out_dir;
};

void add_common(CLI::App* cmd, common_opts& opts) {
  cmd->add_option("--config", opts.config_path,
                  "key=value configuration file");
  cmd->add_option("--set", opts.sets, "override one key, key=value")
      ->take_all();
  cmd->add_option("--out", opts.out_dir,
                  "output directory (default $LRDLAB_OUT, then .)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lrd::parameter_error("cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string resolve_out(const common_opts& opts) {
  if (!opts.out_dir.empty()) return opts.out_dir;
  if (const char* env = std::getenv("LRDLAB_OUT"); env && *env) return env;
  return ".";
}

// Plan assembly order: defaults for the experiment, config file, --set
// overrides. The experiment itself must not change along the way.
lrd::plan assemble_plan(const std::string& experiment,
                        const common_opts& opts) {
  lrd::plan p = lrd::default_plan(experiment);
  if (!opts.config_path.empty())
    lrd::apply_config(p, read_file(opts.config_path));
  for (const std::string& kv : opts.sets) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos)
      throw lrd::parameter_error("--set expects key=value, got " + kv);
    lrd::set_field(p, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (p.experiment != experiment)
    throw lrd::parameter_error("experiment may not be overridden (plan says " +
                               p.experiment + ", command says " + experiment +
                               ")");
  return p;
}

std::string find_experiment(const common_opts& opts) {
  std::string found;
  auto scan = [&](const std::string& key, const std::string& value) {
    if (key == "experiment") found = value;
  };
  if (!opts.config_path.empty()) {
    std::istringstream in(read_file(opts.config_path));
    std::string line;
    while (std::getline(in, line)) {
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(0, eq);
      std::string value = line.substr(eq + 1);
      const auto strip = [](std::string& s) {
        while (!s.empty() && std::isspace((unsigned char)s.front()))
          s.erase(s.begin());
        while (!s.empty() && std::isspace((unsigned char)s.back()))
          s.pop_back();
      };
      strip(key);
      strip(value);
      scan(key, value);
    }
  }
  for (const std::string& kv : opts.sets) {
    const std::size_t eq = kv.find('=');
    if (eq != std::string::npos) scan(kv.substr(0, eq), kv.substr(eq + 1));
  }
  return found;
}

void write_csv(const fs::path& path, const std::string& header,
               const std::vector<std::pair<long long, double>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lrd::data_error("cannot write " + path.string());
  out << header << '\n';
  for (const auto& [i, v] : rows)
    out << i << ',' << lrd::format_double(v) << '\n';
}

int cmd_constants(const std::vector<double>& alphas) {
  std::printf("%8s %14s %14s %14s %8s %8s\n", "alpha", "b", "kappa2", "kappa",
              "gamma", "H");
  for (double a : alphas) {
    std::printf("%8.4f %14.9f %14.9f %14.9f %8.4f %8.4f\n", a,
                lrd::b_alpha(a), lrd::kappa_alpha2(a), lrd::kappa_alpha(a),
                lrd::gamma_rate(a), lrd::hurst(a));
  }
  return 0;
}

int cmd_generate(const std::string& what, const common_opts& opts) {
  lrd::plan p = lrd::default_plan("identity_sweep");
  p.subordinator = "qexp";
  if (!opts.config_path.empty())
    lrd::apply_config(p, read_file(opts.config_path));
  for (const std::string& kv : opts.sets) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos)
      throw lrd::parameter_error("--set expects key=value, got " + kv);
    lrd::set_field(p, kv.substr(0, eq), kv.substr(eq + 1));
  }
  lrd::validate(p);

  const bool want_eta = what == "eta" || what == "bundle";
  const bool want_path = what == "path" || what == "bundle";
  const bool want_fbm = what == "fbm" || what == "bundle";
  const bool want_coupled = what == "coupled" || what == "bundle";
  if (!(want_eta || want_path || want_fbm || want_coupled))
    throw lrd::parameter_error("unknown artifact: " + what);

  const lrd::subordinator sub =
      p.subordinator == "auto"
          ? lrd::make_quantile_exponential(p.lambda)
          : (p.subordinator == "lognormal"
                 ? lrd::make_subordinator(p.subordinator, p.lognormal_m,
                                          p.lognormal_s)
                 : lrd::make_subordinator(p.subordinator, p.lambda,
                                          p.lognormal_s));
  if (want_path && !sub.positive)
    throw lrd::parameter_error(
        "path generation needs a positive subordinator, " + sub.description +
        " is not");

  const fs::path base = resolve_out(opts);
  std::error_code ec;
  fs::create_directories(base, ec);
  if (ec) throw lrd::data_error("cannot create directory " + base.string());

  const lrd::linear_model model(p.alpha, p.truncation);
  const lrd::normal_stream innovations(p.base_seed, 0);
  const lrd::normal_stream fbm_stream(p.base_seed, 1);
  const std::size_t n = p.n;

  std::vector<std::string> files;
  std::vector<double> eta;
  if (want_eta || want_path) {
    eta = model.generate(n, innovations);
  }
  if (want_eta) {
    std::vector<std::pair<long long, double>> rows(n);
    for (std::size_t j = 0; j < n; ++j)
      rows[j] = {static_cast<long long>(j), eta[j]};
    write_csv(base / "eta.csv", "index,value", rows);
    files.push_back("eta.csv");
  }
  if (want_path) {
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = sub.g(eta[i]);
    const lrd::sample_path path(std::move(y), sub.mu);
    std::vector<std::pair<long long, double>> rows(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
      rows[k] = {static_cast<long long>(k), path.s()[k]};
    write_csv(base / "path.csv", "index,value", rows);
    files.push_back("path.csv");
  }
  if (want_fbm) {
    const std::vector<double> w =
        lrd::fbm_circulant(n, lrd::hurst(p.alpha), 1.0, fbm_stream);
    std::vector<std::pair<long long, double>> rows(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
      rows[i] = {static_cast<long long>(i), w[i]};
    write_csv(base / "fbm.csv", "index,value", rows);
    files.push_back("fbm.csv");
  }
  if (want_coupled) {
    const lrd::coupled_fbm cw =
        lrd::coupled_fbm_path(p.alpha, p.truncation, n, innovations);
    std::vector<std::pair<long long, double>> rows(n + 1);
    for (std::size_t t = 0; t <= n; ++t)
      rows[t] = {static_cast<long long>(t), cw.w[t]};
    write_csv(base / "coupled.csv", "index,value", rows);
    files.push_back("coupled.csv");
  }

  nlohmann::ordered_json meta;
  meta["artifact"] = what;
  meta["alpha"] = p.alpha;
  meta["truncation"] = p.truncation;
  meta["n"] = n;
  meta["subordinator"] = sub.description;
  meta["hurst"] = lrd::hurst(p.alpha);
  meta["base_seed"] = p.base_seed;
  meta["streams"] = {{"innovations", 0}, {"fbm", 1}};
  meta["files"] = files;
  meta["version"] = {{"artifact", lrd::artifact_version},
                     {"config_hash", lrd::hex64(lrd::fnv1a64(
                                         lrd::plan_canonical(p)))}};
  {
    std::ofstream out(base / "meta.json", std::ios::binary);
    if (!out)
      throw lrd::data_error("cannot write " + (base / "meta.json").string());
    out << meta.dump(2) << '\n';
  }
  for (const std::string& f : files) std::cout << (base / f).string() << '\n';
  std::cout << (base / "meta.json").string() << '\n';
  return 0;
}

int cmd_verify(const std::string& experiment, const std::string& stem_opt,
               const common_opts& opts) {
  std::string name = experiment;
  if (name.empty()) name = find_experiment(opts);
  if (name.empty())
    throw lrd::parameter_error(
        "no experiment named (argument, config, or --set experiment=...)");
  const lrd::plan p = assemble_plan(name, opts);
  const lrd::experiment_report rep = lrd::run_experiment(p);

  const std::string stem = stem_opt.empty() ? name : stem_opt;
  const std::string json_path =
      lrd::write_report_files(resolve_out(opts), stem, rep);

  std::cout << name << ": ";
  bool first = true;
  for (const auto& [k, v] : rep.stats) {
    if (!first) std::cout << "  ";
    std::cout << k << "=" << lrd::format_double(v);
    first = false;
  }
  std::cout << '\n';
  for (const auto& [k, v] : rep.slopes)
    std::cout << "slope " << k << " = " << lrd::format_double(v) << '\n';
  for (const auto& [k, ok] : rep.flags)
    std::cout << "flag " << k << ": " << (ok ? "PASS" : "FAIL") << '\n';
  std::cout << "report: " << json_path << '\n';
  return rep.passed() ? 0 : 1;
}

int cmd_report(const std::string& in_path, const std::string& check_path) {
  std::ifstream in(in_path, std::ios::binary);
  if (!in) throw lrd::parameter_error("cannot read " + in_path);
  nlohmann::ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw lrd::data_error("bad report JSON in " + in_path + ": " + e.what());
  }

  if (!check_path.empty()) {
    std::ifstream other(check_path, std::ios::binary);
    if (!other) throw lrd::parameter_error("cannot read " + check_path);
    nlohmann::ordered_json j2;
    try {
      other >> j2;
    } catch (const nlohmann::json::exception& e) {
      throw lrd::data_error("bad report JSON in " + check_path + ": " +
                            e.what());
    }
    j.erase("timing");
    j2.erase("timing");
    if (j == j2) {
      std::cout << "reports identical modulo timing\n";
      return 0;
    }
    std::cout << "reports differ\n";
    return 1;
  }

  std::cout << "experiment: " << j["plan"]["experiment"].get<std::string>()
            << '\n';
  std::cout << "config_hash: "
            << j["version"]["config_hash"].get<std::string>() << '\n';
  if (j.contains("stats"))
    for (const auto& [k, v] : j["stats"].items())
      std::cout << "stat " << k << " = " << v.dump() << '\n';
  if (j.contains("slopes"))
    for (const auto& [k, v] : j["slopes"].items())
      std::cout << "slope " << k << " = " << v.dump() << '\n';
  bool all = true;
  if (j.contains("flags"))
    for (const auto& [k, v] : j["flags"].items()) {
      const bool ok = v.get<bool>();
      all = all && ok;
      std::cout << "flag " << k << ": " << (ok ? "PASS" : "FAIL") << '\n';
    }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"long-range dependent sequence laboratory"};
  app.require_subcommand(1);

  common_opts gen_opts;
  std::string gen_what = "bundle";
  CLI::App* gen = app.add_subcommand(
      "generate", "write model path CSVs (eta, path, fbm, coupled, bundle)");
  gen->add_option("what", gen_what, "artifact to write")->capture_default_str();
  add_common(gen, gen_opts);

  common_opts ver_opts;
  std::string ver_experiment;
  std::string ver_stem;
  CLI::App* ver =
      app.add_subcommand("verify", "run an experiment and write its report");
  ver->add_option("experiment", ver_experiment,
                  "clt_sum | fpt_clt | vervaat_chi2 | identity_sweep | "
                  "coupling | reduction | edf_marginal");
  ver->add_option("--stem", ver_stem, "report file stem (default experiment)");
  add_common(ver, ver_opts);

  std::vector<double> con_alphas{0.2, 0.4, 0.5, 0.6, 0.8};
  CLI::App* con =
      app.add_subcommand("constants", "print the limit constants table");
  con->add_option("--alpha", con_alphas, "alpha values")->take_all();

  std::string rep_in;
  std::string rep_check;
  CLI::App* repc =
      app.add_subcommand("report", "summarize or compare report files");
  repc->add_option("file", rep_in, "report JSON")->required();
  repc->add_option("--check", rep_check,
                   "second report; compare modulo timing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_generate(gen_what, gen_opts);
    if (ver->parsed()) return cmd_verify(ver_experiment, ver_stem, ver_opts);
    if (con->parsed()) return cmd_constants(con_alphas);
    if (repc->parsed()) return cmd_report(rep_in, rep_check);
  } catch (const lrd::parameter_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const lrd::numerical_error& e) {
    std::cerr << "error: " << e.what() << " (last " << e.last_estimate()
              << ", previous " << e.previous_estimate() << ")\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
