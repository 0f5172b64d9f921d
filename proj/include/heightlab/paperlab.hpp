#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heightlab/height.hpp"

namespace heightlab {

enum class StepStatus { VerifiedExact, VerifiedNumeric, AssertedFromPaper };

std::string to_string(StepStatus s);

struct TranscriptStep {
    std::string id;
    std::string claim;
    std::string evidence;
    StepStatus status = StepStatus::VerifiedExact;
    bool ok = false;
};

// Audit trail for one scenario: a scenario passes iff no step failed;
// asserted-from-paper steps are flagged and counted separately.
struct Transcript {
    std::string scenario;
    std::vector<TranscriptStep> steps;
    std::vector<std::string> table_header;
    std::vector<std::vector<std::string>> table;

    bool pass() const;
    int asserted_count() const;
};

struct LabOptions {
    long prec_cap = 4096;
    double eps = 1e-9;
};

// The small-height family 5x^(2n) - 6x^n + 5 (n-th roots of (2+i)/(2-i),
// rescaled): all roots on the unit circle, h = log(5)/(2n) -> 0.
Transcript run_small_height_sequence(int n_max = 12, const LabOptions& opt = {});

// End-to-end certification that the splitting field of x^5 + x^3 + 1 over
// Q^tr is a totally imaginary extension without i, is not formally real,
// and carries an explicit height bound above 1/2000000.
Transcript run_example1_pipeline(const LabOptions& opt = {});

// x^4 - p over Q(sqrt(p)): the 4-th root of p is totally real while the
// Galois closure picks up i.
Transcript run_example2_pipeline(std::uint64_t p = 2, const LabOptions& opt = {});

std::vector<IntPoly> default_schinzel_corpus();

// Every totally real element off the unit circle satisfies the height gap
// (1/2)log((1+sqrt 5)/2); on-circle elements are exempt.
Transcript run_schinzel_suite(const std::vector<IntPoly>& corpus, const LabOptions& opt = {});

// Embedding statistics and the effective bound for one polynomial.
Transcript run_bound_report(const IntPoly& f, bool totally_imaginary, const LabOptions& opt = {});

}  // namespace heightlab
