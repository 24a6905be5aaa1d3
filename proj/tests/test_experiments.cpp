#include <string>

#include "doctest.h"
#include "json.hpp"
#include "lrd/errors.hpp"
#include "lrd/experiments.hpp"
#include "lrd/plan.hpp"
#include "lrd/report.hpp"

namespace {

// Small plans keep this suite quick; statistical quality is the acceptance
// binary's job.
lrd::plan small_identity_sweep() {
  lrd::plan p = lrd::default_plan("identity_sweep");
  p.n = 200;
  p.replicates = 8;
  p.t_count = 12;
  p.truncation = 256;
  return p;
}

lrd::plan small_reduction() {
  lrd::plan p = lrd::default_plan("reduction");
  p.truncation = 512;
  p.horizon_min = 128;
  p.horizon_max = 512;
  p.coupling_replicates = 6;
  return p;
}

nlohmann::ordered_json parsed(const lrd::experiment_report& r) {
  return nlohmann::ordered_json::parse(lrd::render_json(r));
}

}  // namespace

TEST_CASE("plan defaults and key handling") {
  const lrd::plan p = lrd::default_plan("edf_marginal");
  CHECK(p.alpha == 0.5);
  CHECK(p.replicates == 1000);
  CHECK_THROWS_AS(lrd::default_plan("nope"), lrd::parameter_error);

  lrd::plan q = lrd::default_plan("clt_sum");
  lrd::set_field(q, "alpha", "0.3");
  CHECK(q.alpha == 0.3);
  CHECK_THROWS_AS(lrd::set_field(q, "alpha", "abc"), lrd::parameter_error);
  CHECK_THROWS_AS(lrd::set_field(q, "frobnicate", "1"), lrd::parameter_error);
  CHECK_THROWS_AS(lrd::set_field(q, "n", "-5"), lrd::parameter_error);

  lrd::apply_config(q, "# comment\n\n n = 512 \nsubordinator=qexp\n");
  CHECK(q.n == 512);
  CHECK(q.subordinator == "qexp");
  CHECK_THROWS_AS(lrd::apply_config(q, "just words\n"), lrd::parameter_error);
}

TEST_CASE("validation rejects out-of-range plans") {
  lrd::plan p = lrd::default_plan("clt_sum");
  p.alpha = 1.2;
  CHECK_THROWS_AS(lrd::validate(p), lrd::parameter_error);
  p.alpha = 0.4;
  p.subordinator = "cauchy";
  CHECK_THROWS_AS(lrd::validate(p), lrd::parameter_error);
  p.subordinator = "auto";
  p.level_t = 1.5;
  CHECK_THROWS_AS(lrd::validate(p), lrd::parameter_error);
  p.level_t = 0.5;
  p.rank_m = 3;  // 3 * 0.4 >= 1 leaves the LRD regime
  CHECK_THROWS_AS(lrd::validate(p), lrd::parameter_error);
}

TEST_CASE("subordinator constraints surface as parameter errors") {
  lrd::plan p = lrd::default_plan("fpt_clt");
  p.subordinator = "identity";  // not positive
  CHECK_THROWS_AS(lrd::run_experiment(p), lrd::parameter_error);

  lrd::plan q = lrd::default_plan("clt_sum");
  q.subordinator = "square";  // rank 2, no linear term to normalize by
  CHECK_THROWS_AS(lrd::run_experiment(q), lrd::parameter_error);
}

TEST_CASE("deterministic rerun, byte identical modulo timing") {
  const lrd::plan p = small_identity_sweep();
  auto a = parsed(lrd::run_experiment(p));
  auto b = parsed(lrd::run_experiment(p));
  a.erase("timing");
  b.erase("timing");
  CHECK(a == b);
}

TEST_CASE("worker count never changes results") {
  lrd::plan p = small_reduction();
  p.workers = 1;
  const lrd::experiment_report a = lrd::run_experiment(p);
  p.workers = 4;
  const lrd::experiment_report b = lrd::run_experiment(p);
  CHECK(a.stats == b.stats);
  CHECK(a.slopes == b.slopes);
  CHECK(a.flags == b.flags);
  CHECK(a.csv_rows == b.csv_rows);
  // And the full canonical record agrees: workers lives in timing only.
  auto ja = parsed(a);
  auto jb = parsed(b);
  ja.erase("timing");
  jb.erase("timing");
  CHECK(ja == jb);
}

TEST_CASE("report shape and hash") {
  const lrd::experiment_report r = lrd::run_experiment(small_identity_sweep());
  const auto j = parsed(r);
  for (const char* key :
       {"plan", "seeds", "stats", "slopes", "flags", "tolerances", "version",
        "timing"})
    CHECK(j.contains(key));
  CHECK(j["version"]["artifact"] == "0.1.0");
  CHECK(j["version"]["config_hash"].get<std::string>().size() == 16);
  CHECK(j["plan"]["experiment"] == "identity_sweep");
  CHECK(r.csv_rows.size() == 8);
  CHECK(r.csv_header == "replicate,seed,max_rel_residual");
  CHECK(r.stat("max_rel_residual") < 1e-9);
  CHECK(r.passed());

  // FNV-1a offset basis: hashing nothing returns the basis itself.
  CHECK(lrd::fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(lrd::hex64(0xcbf29ce484222325ull) == "cbf29ce484222325");
}

TEST_CASE("config hash tracks the statistical plan only") {
  lrd::plan p = small_identity_sweep();
  const std::string h1 = lrd::hex64(lrd::fnv1a64(lrd::plan_canonical(p)));
  p.workers = 8;
  CHECK(lrd::hex64(lrd::fnv1a64(lrd::plan_canonical(p))) == h1);
  p.n = 201;
  CHECK(lrd::hex64(lrd::fnv1a64(lrd::plan_canonical(p))) != h1);
}

TEST_CASE("reduction with the identity map is exactly zero") {
  lrd::plan p = small_reduction();
  p.subordinator = "identity";
  const lrd::experiment_report r = lrd::run_experiment(p);
  CHECK(r.stat("max_sup") == 0.0);
  CHECK(r.passed());
  CHECK(r.slopes.empty());
}

TEST_CASE("small clt run produces sane statistics") {
  lrd::plan p = lrd::default_plan("clt_sum");
  p.n = 256;
  p.truncation = 512;
  p.replicates = 64;
  const lrd::experiment_report r = lrd::run_experiment(p);
  CHECK(r.stat("ks") > 0.0);
  CHECK(r.stat("ks") < 0.5);
  CHECK(std::abs(r.stat("mean")) < 1.0);
  CHECK(r.csv_rows.size() == 64);
}
