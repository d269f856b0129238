// Composite reproducibility report: constructions over a prime grid,
// discrepancy sweeps, element/sum error measurements, exceptional-set counts
// and the Ding-condition demonstration, with one pass/fail entry per check.

#pragma once

#include <nlohmann/json_fwd.hpp>

namespace sidonlab {

struct SuiteOptions {
    bool quick = false;      // restrict grid: p <= 101, N <= 1e4, no exact search
    bool json_only = false;  // suppress CSV emission in the CLI layer
};

// Returns the composite JSON report; "all_passed" summarizes the checks.
nlohmann::json run_paper_suite(const SuiteOptions& opts = {});

}  // namespace sidonlab
