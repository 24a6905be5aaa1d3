#pragma once

#include "lrd/plan.hpp"
#include "lrd/report.hpp"

namespace lrd {

// Run the experiment described by p (validated first). Deterministic given
// the plan: the worker count changes scheduling only, never results.
experiment_report run_experiment(const plan& p);

}  // namespace lrd
