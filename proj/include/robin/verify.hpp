#pragma once

#include "robin/threads.hpp"

#include <string>
#include <vector>

namespace robin::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details; // deviations and fitted constants, deterministic
};

struct Report {
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
    std::string text; // one line per criterion; byte-stable across runs
};

// Criteria 1-11: every numerical claim the library reproduces, at pinned
// tolerances.  The report text contains no timing or environment data, so
// identical inputs give identical bytes.
Report run_primary(Exec exec = Exec::Parallel);

// Criteria 1-12: runs the primary set under 1 worker thread and again under
// 8, compares the two reports byte for byte, and appends the determinism
// verdict.
Report run_full();

namespace oracle {
// Quad-precision ascending series for integer orders, independent of the
// library evaluator; the reference side of the cross-check.
double bessel_j_series_q(int nu, double x);
} // namespace oracle

} // namespace robin::verify
