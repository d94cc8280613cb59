#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "blowup/graph.hpp"

namespace blowup {

// Provenance of one eigenvalue record: the induced subgraph (in parent
// labels) and the eta exponents (already including any global rotation
// applied during closure) that produced it. A zero_certificate witness
// stands for the single-vertex eigenvector that certifies 0.
struct Witness {
    VertexSubset subset;
    std::vector<int> eta_exponents;
    int rotation = 0;
    bool zero_certificate = false;

    // Total order used to pick deterministic representatives.
    friend bool operator<(const Witness& a, const Witness& b);
    friend bool operator==(const Witness& a, const Witness& b);
};

struct EigRecord {
    std::complex<double> value;
    Witness witness;
};

// One deduplicated spectrum value: cluster centroid plus up to
// kWitnessCandidates smallest witnesses of the cluster.
struct SpectrumValue {
    std::complex<double> value;
    std::vector<Witness> witnesses;
};

inline constexpr int kWitnessCandidates = 8;

// Deduplicated set of complex values, sorted by (re, im); pairwise
// distances exceed tol after single-linkage clustering at tol.
struct SpectrumSet {
    double tol = 1e-7;
    std::vector<SpectrumValue> values;

    std::vector<std::complex<double>> plain_values() const;
};

SpectrumSet merge_spectrum(std::span<const std::complex<double>> values, double tol);
SpectrumSet merge_records(std::span<const EigRecord> records, double tol);

// Closure of sp under multiplication by all s-th roots of unity, merged
// at sp.tol; witnesses carry the rotation index and rotated exponents.
SpectrumSet rotation_closure(const SpectrumSet& sp, int s);

// Tolerance set comparison: greedy nearest-neighbor matching at tol.
struct SpectraDiff {
    std::vector<std::complex<double>> a_minus_b;
    std::vector<std::complex<double>> b_minus_a;
    bool equal() const { return a_minus_b.empty() && b_minus_a.empty(); }
};
SpectraDiff compare_spectra(const SpectrumSet& a, const SpectrumSet& b, double tol);

}  // namespace blowup
