#include "blowup/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace blowup {

namespace {
using Cd = std::complex<double>;

Cd ipow(Cd base, int e) {
    Cd acc = 1.0;
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}
}  // namespace

UniformHypergraph UniformHypergraph::from_edges(int k, int n,
                                                std::vector<std::vector<int>> edges) {
    if (k < 1) throw ValidationError("hypergraph uniformity must be >= 1");
    UniformHypergraph h;
    h.k = k;
    h.n = n;
    std::set<std::vector<int>> seen;
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != k ||
            std::adjacent_find(e.begin(), e.end()) != e.end())
            throw ValidationError("hyperedge must have exactly k distinct vertices");
        if (e.front() < 0 || e.back() >= n) throw ValidationError("hyperedge vertex out of range");
        if (!seen.insert(e).second) throw ValidationError("duplicate hyperedge");
    }
    h.edges = std::move(edges);
    h.incidence.assign(static_cast<size_t>(n), {});
    for (size_t ei = 0; ei < h.edges.size(); ++ei)
        for (int v : h.edges[ei]) h.incidence[static_cast<size_t>(v)].push_back(static_cast<int>(ei));
    return h;
}

std::pair<UniformHypergraph, BlowupMap> build_blowup(const Graph& g, int s) {
    if (s < 2) throw ValidationError("blowup requires s >= 2 (s = 1 unsupported)");
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<size_t>(g.edge_count()));
    for (auto [i, j] : g.edges()) {
        std::vector<int> e;
        e.reserve(static_cast<size_t>(2 * s));
        for (int t = 0; t < s; ++t) e.push_back(s * i + t);
        for (int t = 0; t < s; ++t) e.push_back(s * j + t);
        edges.push_back(std::move(e));
    }
    UniformHypergraph h = UniformHypergraph::from_edges(2 * s, s * g.vertex_count(), std::move(edges));
    return {std::move(h), BlowupMap{g, s}};
}

std::vector<Cd> apply_adjacency(const UniformHypergraph& h, std::span<const Cd> x) {
    if (static_cast<int>(x.size()) != h.n)
        throw ValidationError("apply_adjacency: vector length " + std::to_string(x.size()) +
                              " != vertex count " + std::to_string(h.n));
    std::vector<Cd> out(static_cast<size_t>(h.n), 0.0);
    std::vector<Cd> pref, suf;
    for (const auto& e : h.edges) {
        const size_t k = e.size();
        pref.assign(k + 1, 1.0);
        suf.assign(k + 1, 1.0);
        for (size_t i = 0; i < k; ++i) pref[i + 1] = pref[i] * x[static_cast<size_t>(e[i])];
        for (size_t i = k; i-- > 0;) suf[i] = suf[i + 1] * x[static_cast<size_t>(e[i])];
        for (size_t i = 0; i < k; ++i)
            out[static_cast<size_t>(e[i])] += pref[i] * suf[i + 1];
    }
    return out;
}

ResidualReport eigen_residual(const UniformHypergraph& h, const TensorEigenPair& p) {
    if (static_cast<int>(p.x.size()) != h.n)
        throw ValidationError("eigen_residual: vector length mismatch");
    bool nonzero = false;
    for (const auto& c : p.x)
        if (c != Cd(0.0)) nonzero = true;
    if (!nonzero) throw ValidationError("eigen_residual: zero vector");
    std::vector<Cd> rhs = apply_adjacency(h, p.x);
    double xinf = 0.0;
    for (const auto& c : p.x) xinf = std::max(xinf, std::abs(c));
    ResidualReport rep;
    rep.per_vertex.resize(static_cast<size_t>(h.n));
    double scale_pow = 1.0;
    for (int i = 0; i < h.k - 1; ++i) scale_pow *= xinf;
    rep.scale = std::max(1.0, std::abs(p.lambda) * scale_pow);
    double worst = 0.0;
    for (int v = 0; v < h.n; ++v) {
        Cd lhs = p.lambda * ipow(p.x[static_cast<size_t>(v)], h.k - 1);
        double r = std::abs(lhs - rhs[static_cast<size_t>(v)]);
        rep.per_vertex[static_cast<size_t>(v)] = r;
        worst = std::max(worst, r);
    }
    rep.max_residual = worst / rep.scale;
    return rep;
}

CertifiedPair construct_blowup_eigenvector(const BlowupMap& bm, const UniformHypergraph& h,
                                           const VertexSubset& subset, const WeightAssignment& w,
                                           Cd lambda, std::span<const Cd> y) {
    auto sub = induced_subgraph(bm.base, subset);
    const int k = sub.graph.vertex_count();
    if (static_cast<int>(y.size()) != k)
        throw ValidationError("construct_blowup_eigenvector: eigenvector length mismatch");
    if (std::abs(lambda) <= 1e-8)
        throw ValidationError("construct_blowup_eigenvector: lambda == 0 (use the single-vertex certificate)");

    ComplexMatrix m = adjacency_from_pi(sub.graph, w);
    std::vector<Cd> yv(y.begin(), y.end());

    // normalize |y|_inf = 1 by dividing by the max-modulus component
    int arg = 0;
    for (int i = 1; i < k; ++i)
        if (std::abs(yv[static_cast<size_t>(i)]) > std::abs(yv[static_cast<size_t>(arg)])) arg = i;
    if (std::abs(yv[static_cast<size_t>(arg)]) == 0.0)
        throw ValidationError("construct_blowup_eigenvector: zero eigenvector");
    Cd div = yv[static_cast<size_t>(arg)];
    for (auto& c : yv) c /= div;

    // input eigenpair must satisfy the matrix eigen-equation
    std::vector<Cd> my = m.apply(yv);
    double resid = 0.0;
    for (int i = 0; i < k; ++i) resid = std::max(resid, std::abs(my[static_cast<size_t>(i)] - lambda * yv[static_cast<size_t>(i)]));
    if (!(resid <= 1e-8 * std::max(1.0, m.norm_inf())))
        throw ValidationError("construct_blowup_eigenvector: (lambda, y) residual " +
                              std::to_string(resid) + " too large");

    for (const auto& c : yv)
        if (std::abs(c) < 1e-10)
            throw ValidationError("construct_blowup_eigenvector: eigenvector component below 1e-10");

    const int s = bm.s;
    TensorEigenPair pair;
    pair.lambda = lambda;
    pair.x.assign(static_cast<size_t>(bm.vertex_count()), 0.0);
    for (int a = 0; a < k; ++a) {
        int base_vertex = sub.original_labels[static_cast<size_t>(a)];
        Cd z = std::pow(yv[static_cast<size_t>(a)], 1.0 / static_cast<double>(s));
        pair.x[static_cast<size_t>(bm.representative(base_vertex))] = w.pi(a) * z;
        for (int t = 1; t < s; ++t)
            pair.x[static_cast<size_t>(bm.block_start(base_vertex) + t)] = z;
    }

    ResidualReport rep = eigen_residual(h, pair);
    if (!rep.certified())
        throw CertificationError("constructed blowup eigenvector failed certification: residual " +
                                 std::to_string(rep.max_residual));
    return {std::move(pair), std::move(rep)};
}

CertifiedPair zero_eigenpair(const UniformHypergraph& h) {
    if (h.k < 3) throw ValidationError("zero eigenpair requires uniformity >= 3");
    if (h.n < 1) throw ValidationError("zero eigenpair requires a nonempty hypergraph");
    TensorEigenPair pair;
    pair.lambda = 0.0;
    pair.x.assign(static_cast<size_t>(h.n), 0.0);
    pair.x[0] = 1.0;
    ResidualReport rep = eigen_residual(h, pair);
    if (!rep.certified())
        throw CertificationError("single-vertex zero certificate failed (impossible for k >= 3)");
    return {std::move(pair), std::move(rep)};
}

}  // namespace blowup
