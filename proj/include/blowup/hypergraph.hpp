#pragma once

#include <complex>
#include <span>
#include <vector>

#include "blowup/graph.hpp"
#include "blowup/weights.hpp"

namespace blowup {

struct UniformHypergraph {
    int k = 0;                           // uniformity
    int n = 0;                           // vertex count
    std::vector<std::vector<int>> edges; // sorted k-subsets, no duplicates
    std::vector<std::vector<int>> incidence;  // vertex -> edge indices

    static UniformHypergraph from_edges(int k, int n, std::vector<std::vector<int>> edges);
};

// Block structure of the s-blowup: base vertex i owns hypergraph vertices
// [s*i, s*i + s), with representative s*i.
struct BlowupMap {
    Graph base;
    int s = 2;

    int block_start(int i) const { return s * i; }
    int representative(int i) const { return s * i; }
    int vertex_count() const { return s * base.vertex_count(); }
};

// The 2s-uniform hypergraph G^[s]: one hyperedge V_i u V_j per base edge.
std::pair<UniformHypergraph, BlowupMap> build_blowup(const Graph& g, int s);

// Component v of the result is sum over edges e containing v of the
// product of x_u over u in e \ {v}.
std::vector<std::complex<double>> apply_adjacency(const UniformHypergraph& h,
                                                  std::span<const std::complex<double>> x);

struct TensorEigenPair {
    std::complex<double> lambda;
    std::vector<std::complex<double>> x;
};

struct ResidualReport {
    double max_residual = 0.0;          // max(per_vertex) / scale
    std::vector<double> per_vertex;     // |lambda x_v^{k-1} - rhs_v|, unscaled
    double scale = 1.0;                 // max(1, |lambda| * |x|_inf^{k-1})

    bool certified() const { return max_residual <= 1e-8; }
};

ResidualReport eigen_residual(const UniformHypergraph& h, const TensorEigenPair& p);

struct CertifiedPair {
    TensorEigenPair pair;
    ResidualReport residual;
};

// Lifts an eigenpair (lambda, y) of adjacency_from_pi(induced subgraph, w)
// to a tensor eigenpair of the blowup: x is pi(i) z_i on representatives,
// z_i elsewhere in block i (z_i the principal s-th root of y_i), zero
// outside the subset's blocks. Throws ValidationError when (lambda, y)
// fails its own residual bound or y has a component below 1e-10 in
// modulus, CertificationError when the constructed pair fails the 1e-8
// residual gate.
CertifiedPair construct_blowup_eigenvector(const BlowupMap& bm, const UniformHypergraph& h,
                                           const VertexSubset& subset, const WeightAssignment& w,
                                           std::complex<double> lambda,
                                           std::span<const std::complex<double>> y);

// (0, indicator of one vertex): certifies the always-present eigenvalue 0
// of any k-uniform hypergraph with k >= 3.
CertifiedPair zero_eigenpair(const UniformHypergraph& h);

}  // namespace blowup
