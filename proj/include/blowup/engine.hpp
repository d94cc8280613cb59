#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blowup/graph.hpp"
#include "blowup/spectrum.hpp"

namespace blowup {

struct EngineOptions {
    double tol = 1e-7;                 // merge tolerance (absolute)
    bool use_eta_reduction = true;     // enumerate s^k eta patterns instead of (2s)^k pi patterns
    bool use_rotation_quotient = true; // fix eta=1 on the minimum vertex, close under rotations
    bool use_connected_reduction = true;
    bool certify = true;
    int worker_count = 1;

    // Defective-eigenvalue handling. Computed eigenvalues of a weighted
    // subgraph matrix scatter by ~eps^(1/p) around a Jordan block of index
    // p; at desk scale (n <= 6) the scatter stays below 4e-3 while distinct
    // true eigenvalues are never closer than 0.1. Values within zero_snap
    // of 0 are dropped when det A(S) == 0 over the integers (0 is injected
    // exactly anyway); remaining values of one solve are collapsed to
    // cluster means at collapse_tol.
    double zero_snap = 1e-2;
    double collapse_tol = 5e-3;
};

struct ReportedValue {
    std::complex<double> value;
    Witness witness;
    std::optional<double> residual;  // certification residual, when certify is on
};

struct EngineCounts {
    std::int64_t subsets = 0;
    std::int64_t matrices = 0;
    std::int64_t records = 0;
    double wall_ms = 0.0;
};

struct SpectrumReport {
    double tol = 1e-7;
    int s = 2;
    std::vector<ReportedValue> values;  // sorted by (re, im)
    EngineCounts counts;
    EngineOptions options;

    SpectrumSet as_spectrum_set() const;
};

// The full pipeline: enumerate (connected induced subgraph, weight
// assignment) pairs, collect eigenvalues with witnesses, close under
// rotations, merge, and certify every nonzero value by constructing an
// explicit tensor eigenvector. 0 is always present.
SpectrumReport blowup_spectrum(const Graph& g, int s, const EngineOptions& opts = {});

// Re-verification of a witnessed spectrum: re-solve each witness matrix,
// locate the matching eigenpair, re-run the constructive certification.
struct VerifiedValue {
    std::complex<double> value;
    bool passed = false;
    double residual = 0.0;
    std::string message;
};
struct VerifyResult {
    bool all_passed = false;
    std::vector<VerifiedValue> values;
};
VerifyResult verify_spectrum(const Graph& g, int s, const std::vector<ReportedValue>& values,
                             double tol = 1e-7);

// Runs the pipeline with each reduction toggled off in turn and compares
// all results against the fully reduced run.
struct CrossValidationRun {
    std::string name;
    std::int64_t matrices = 0;
    std::size_t value_count = 0;
    SpectraDiff diff_vs_baseline;
};
struct CrossValidationReport {
    bool all_equal = false;
    std::vector<CrossValidationRun> runs;  // runs[0] is the baseline
};
CrossValidationReport cross_validate_reductions(const Graph& g, int s,
                                                const EngineOptions& base_opts = {});

}  // namespace blowup
