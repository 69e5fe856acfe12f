#pragma once

#include <string>

namespace cjt {

struct VerifyOptions {
    int n = 2;
    int max_cells = 4;
    std::string suite = "all";  // determinants | paths | regions | tableaux | all
};

struct VerifyResult {
    bool ok = true;
    std::string report;
};

/// Runs the selected identity suite over every skew diagram with at most
/// max_cells cells (widths and lengths capped by max_cells) that satisfies
/// the positivity condition. The report carries one line per diagram with
/// counts and timings; on failure it ends with a counterexample dump.
VerifyResult run_verify(const VerifyOptions& opts);

bool valid_suite(const std::string& name);

}  // namespace cjt
