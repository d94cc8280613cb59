#pragma once

#include <complex>
#include <vector>

#include "blowup/complex_matrix.hpp"
#include "blowup/graph.hpp"

namespace blowup {

// exp(2*pi*i * num/den), exact on quarter turns so that weights like
// +/-1 and +/-i materialize without rounding.
std::complex<double> unit_root(long num, long den);

// Per-vertex 2s-th roots of unity pi(i) = exp(2*pi*i * e_i / (2s)),
// stored as integer exponents e_i in [0, 2s).
struct WeightAssignment {
    int s = 2;
    std::vector<int> exponents;

    std::complex<double> pi(int i) const { return unit_root(exponents[i], 2L * s); }
    void validate(int n) const;
};

// Per-vertex s-th roots of unity eta_i = exp(2*pi*i * f_i / s) = pi(i)^2,
// exponents f_i in [0, s).
struct EtaAssignment {
    int s = 2;
    std::vector<int> exponents;

    std::complex<double> eta(int i) const { return unit_root(exponents[i], s); }
    void validate(int n) const;

    // Squares of a weight assignment: f_i = e_i mod s.
    static EtaAssignment squares_of(const WeightAssignment& w);
};

// A WeightAssignment whose squares reproduce this eta assignment
// (e_i = f_i, one of the 2^k possible square roots).
WeightAssignment weights_from_eta(const EtaAssignment& h);

// M[i][j] = pi(i)*pi(j) on edges, 0 elsewhere. Symmetric, not Hermitian.
ComplexMatrix adjacency_from_pi(const Graph& g, const WeightAssignment& w);

// M[i][j] = eta_i on edges (row i scaled by eta_i), 0 elsewhere. Similar
// to adjacency_from_pi when eta_i = pi(i)^2, hence the same spectrum.
ComplexMatrix adjacency_from_eta(const Graph& g, const EtaAssignment& h);

}  // namespace blowup
