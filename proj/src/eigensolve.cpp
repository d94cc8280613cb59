#include "blowup/eigensolve.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
    Eigen::MatrixXcd a(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) a(i, j) = m.at(i, j);
    return a;
}

void check_input(const ComplexMatrix& m) {
    if (m.dim() < 1) throw ValidationError("eigensolve requires dim >= 1");
    if (!m.all_finite()) throw ValidationError("eigensolve: non-finite matrix entry");
}

bool value_less(const std::complex<double>& a, const std::complex<double>& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

std::vector<EigenPair> complex_eigenpairs(const ComplexMatrix& m) {
    check_input(m);
    Eigen::MatrixXcd a = to_eigen(m);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw NumericError("complex eigensolver failed to converge (dim=" +
                           std::to_string(m.dim()) + ")");
    const double bound = 1e-8 * std::max(1.0, m.norm_inf());
    std::vector<EigenPair> out(static_cast<size_t>(m.dim()));
    for (int j = 0; j < m.dim(); ++j) {
        EigenPair p;
        p.value = solver.eigenvalues()(j);
        Eigen::VectorXcd v = solver.eigenvectors().col(j);
        // canonical scaling: max-modulus entry becomes exactly 1
        int arg = 0;
        for (int i = 1; i < m.dim(); ++i)
            if (std::abs(v(i)) > std::abs(v(arg))) arg = i;
        if (std::abs(v(arg)) == 0.0)
            throw NumericError("eigensolver returned a zero eigenvector");
        v /= v(arg);
        double resid = (a * v - p.value * v).cwiseAbs().maxCoeff();
        if (!(resid <= bound))
            throw NumericError("eigenpair residual " + std::to_string(resid) +
                               " exceeds bound " + std::to_string(bound));
        p.vector.assign(v.data(), v.data() + m.dim());
        out[static_cast<size_t>(j)] = std::move(p);
    }
    std::sort(out.begin(), out.end(),
              [](const EigenPair& x, const EigenPair& y) { return value_less(x.value, y.value); });
    return out;
}

std::vector<std::complex<double>> complex_eigenvalues(const ComplexMatrix& m) {
    check_input(m);
    Eigen::MatrixXcd a = to_eigen(m);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericError("complex eigensolver failed to converge (dim=" +
                           std::to_string(m.dim()) + ")");
    std::vector<std::complex<double>> out(static_cast<size_t>(m.dim()));
    for (int j = 0; j < m.dim(); ++j) out[static_cast<size_t>(j)] = solver.eigenvalues()(j);
    std::sort(out.begin(), out.end(), value_less);
    return out;
}

SymmetricEigen symmetric_eigenpairs(const ComplexMatrix& m) {
    check_input(m);
    Eigen::MatrixXd a(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            if (m.at(i, j).imag() != 0.0)
                throw ValidationError("symmetric_eigenpairs: matrix has imaginary entries");
            a(i, j) = m.at(i, j).real();
        }
    if (!a.isApprox(a.transpose(), 1e-12))
        throw ValidationError("symmetric_eigenpairs: matrix not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success)
        throw NumericError("symmetric eigensolver failed to converge");
    SymmetricEigen out;
    out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + m.dim());
    out.vectors.resize(static_cast<size_t>(m.dim()));
    for (int j = 0; j < m.dim(); ++j) {
        Eigen::VectorXd v = solver.eigenvectors().col(j);
        out.vectors[static_cast<size_t>(j)].assign(v.data(), v.data() + m.dim());
    }
    return out;
}

}  // namespace blowup
