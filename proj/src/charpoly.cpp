#include "blowup/charpoly.hpp"

#include <complex>

#include "blowup/errors.hpp"

namespace blowup {

std::complex<double> PolyCoeffs::eval(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (size_t j = coeffs.size(); j-- > 0;) acc = acc * x + coeffs[j];
    return acc;
}

PolyCoeffs char_poly(const ComplexMatrix& m) {
    if (m.dim() < 1) throw ValidationError("char_poly requires dim >= 1");
    const int n = m.dim();
    // Faddeev-LeVerrier: B_0 = I; c_{n-k} = -tr(M B_{k-1}) / k,
    // B_k = M B_{k-1} + c_{n-k} I.
    std::vector<std::complex<double>> B(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) B[static_cast<size_t>(i) * n + i] = 1.0;
    PolyCoeffs p;
    p.coeffs.assign(static_cast<size_t>(n) + 1, 0.0);
    p.coeffs[static_cast<size_t>(n)] = 1.0;
    std::vector<std::complex<double>> MB(static_cast<size_t>(n) * n);
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::complex<double> acc = 0.0;
                for (int t = 0; t < n; ++t) acc += m.at(i, t) * B[static_cast<size_t>(t) * n + j];
                MB[static_cast<size_t>(i) * n + j] = acc;
            }
        std::complex<double> tr = 0.0;
        for (int i = 0; i < n; ++i) tr += MB[static_cast<size_t>(i) * n + i];
        std::complex<double> c = -tr / static_cast<double>(k);
        p.coeffs[static_cast<size_t>(n - k)] = c;
        B = MB;
        for (int i = 0; i < n; ++i) B[static_cast<size_t>(i) * n + i] += c;
    }
    return p;
}

}  // namespace blowup
