#pragma once

#include <complex>
#include <vector>

#include "blowup/complex_matrix.hpp"

namespace blowup {

// Monic characteristic polynomial det(lambda I - M). Coefficients ascending:
// coeffs[j] multiplies lambda^j, coeffs.back() == 1 exactly.
struct PolyCoeffs {
    std::vector<std::complex<double>> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::complex<double> eval(std::complex<double> x) const;
};

// Faddeev-LeVerrier recurrence. Intended for dim <= 8.
PolyCoeffs char_poly(const ComplexMatrix& m);

}  // namespace blowup
