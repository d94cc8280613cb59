#include "blowup/weights.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace blowup {

std::complex<double> unit_root(long num, long den) {
    long q = ((num % den) + den) % den;
    // quarter turns are exact
    if (4 * q % den == 0) {
        switch (4 * q / den) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            case 3: return {0.0, -1.0};
        }
    }
    double angle = 2.0 * std::numbers::pi * static_cast<double>(q) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

void WeightAssignment::validate(int n) const {
    if (s < 2) throw ValidationError("weight assignment requires s >= 2");
    if (static_cast<int>(exponents.size()) != n)
        throw ValidationError("weight assignment length " + std::to_string(exponents.size()) +
                              " != vertex count " + std::to_string(n));
    for (int e : exponents)
        if (e < 0 || e >= 2 * s)
            throw ValidationError("pi exponent out of range [0, 2s): " + std::to_string(e));
}

void EtaAssignment::validate(int n) const {
    if (s < 2) throw ValidationError("eta assignment requires s >= 2");
    if (static_cast<int>(exponents.size()) != n)
        throw ValidationError("eta assignment length " + std::to_string(exponents.size()) +
                              " != vertex count " + std::to_string(n));
    for (int f : exponents)
        if (f < 0 || f >= s)
            throw ValidationError("eta exponent out of range [0, s): " + std::to_string(f));
}

EtaAssignment EtaAssignment::squares_of(const WeightAssignment& w) {
    EtaAssignment h;
    h.s = w.s;
    h.exponents.reserve(w.exponents.size());
    for (int e : w.exponents) h.exponents.push_back(e % w.s);
    return h;
}

WeightAssignment weights_from_eta(const EtaAssignment& h) {
    // pi(i) = exp(2 pi i f_i / (2s)) squares to eta_i; any root works.
    return WeightAssignment{h.s, h.exponents};
}

ComplexMatrix adjacency_from_pi(const Graph& g, const WeightAssignment& w) {
    w.validate(g.vertex_count());
    ComplexMatrix m(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        auto a = w.pi(u) * w.pi(v);
        m.at(u, v) = a;
        m.at(v, u) = a;
    }
    return m;
}

ComplexMatrix adjacency_from_eta(const Graph& g, const EtaAssignment& h) {
    h.validate(g.vertex_count());
    ComplexMatrix m(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        m.at(u, v) = h.eta(u);
        m.at(v, u) = h.eta(v);
    }
    return m;
}

// --- ComplexMatrix ----------------------------------------------------

double ComplexMatrix::norm_inf() const {
    double best = 0.0;
    for (int i = 0; i < dim_; ++i) {
        double row = 0.0;
        for (int j = 0; j < dim_; ++j) row += std::abs(at(i, j));
        best = std::max(best, row);
    }
    return best;
}

std::vector<std::complex<double>> ComplexMatrix::apply(
    const std::vector<std::complex<double>>& x) const {
    std::vector<std::complex<double>> out(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < dim_; ++j) acc += at(i, j) * x[j];
        out[i] = acc;
    }
    return out;
}

bool ComplexMatrix::all_finite() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (!std::isfinite(at(i, j).real()) || !std::isfinite(at(i, j).imag())) return false;
    return true;
}

}  // namespace blowup
