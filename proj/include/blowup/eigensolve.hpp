#pragma once

#include <complex>
#include <vector>

#include "blowup/complex_matrix.hpp"

namespace blowup {

struct EigenPair {
    std::complex<double> value;
    std::vector<std::complex<double>> vector;  // scaled so max-modulus entry == 1
};

// All dim eigenpairs (with algebraic multiplicity), sorted by (re, im).
// Every returned pair satisfies |m v - lambda v|_inf <= 1e-8 * max(1, |m|_inf);
// a violation or solver non-convergence throws NumericError.
std::vector<EigenPair> complex_eigenpairs(const ComplexMatrix& m);

// Eigenvalues only; same backend, cheaper (no vectors).
std::vector<std::complex<double>> complex_eigenvalues(const ComplexMatrix& m);

// Eigen-decomposition of a real symmetric matrix (validated). Values
// ascending, vectors orthonormal.
struct SymmetricEigen {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;  // vectors[j] belongs to values[j]
};
SymmetricEigen symmetric_eigenpairs(const ComplexMatrix& m);

}  // namespace blowup
