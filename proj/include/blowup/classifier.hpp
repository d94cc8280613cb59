#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "blowup/complex_matrix.hpp"
#include "blowup/graph.hpp"
#include "blowup/hypergraph.hpp"

namespace blowup {

// If the lambda-eigenspace of the real symmetric matrix m contains a
// vector with no zero coordinate, returns one; absent when lambda is not
// an eigenvalue (within 1e-8) or some coordinate vanishes identically on
// the eigenspace.
std::optional<std::vector<double>> nowhere_zero_in_eigenspace(const ComplexMatrix& m,
                                                              double lambda);

enum class HNClass { H, N, Zero };

struct SubsetFailure {
    VertexSubset subset;
    std::string reason;
};

struct HNVerdict {
    double lambda = 0.0;
    HNClass verdict = HNClass::N;
    // H (and Zero): a real tensor eigenvector and its certification residual.
    std::vector<double> eigenvector;
    double residual = 0.0;
    VertexSubset witness_subset;  // H: the subgraph the vector was lifted from
    // N: why each connected induced subgraph fails.
    std::vector<SubsetFailure> failures;
};

// Classifies a real eigenvalue of G^[s] as H (has a real eigenvector) or
// N (has none), via the reduction to nowhere-zero eigenvectors of plain
// adjacency matrices of induced subgraphs; lambda = 0 reports Zero with
// the single-vertex certificate. lambda must be an eigenvalue of G^[s].
HNVerdict classify_real_eigenvalue(const Graph& g, int s, double lambda);

// Independent numeric cross-check: multi-start damped Gauss-Newton descent
// on the eigen-equation residual over real unit vectors. Best-effort; a
// residual <= 1e-6 counts as "real eigenvector found".
struct SearchResult {
    double residual = 0.0;
    std::vector<double> vector;
};
SearchResult numeric_real_eigvec_search(const UniformHypergraph& h, double lambda, int restarts);

// The exact integer certificate that -2 has no real eigenvector on the
// 2-blowup of the triangle: the 3x3 linear system forced by the sign
// analysis has nonzero determinant, hence only the trivial solution.
struct K3Minus2Certificate {
    std::array<std::array<long, 3>, 3> matrix;
    long determinant = 0;
    bool only_trivial_solution = false;
};
K3Minus2Certificate k3_minus2_certificate();

}  // namespace blowup
