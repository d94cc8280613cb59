#include "blowup/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "blowup/eigensolve.hpp"
#include "blowup/hypergraph.hpp"
#include "blowup/weights.hpp"

namespace blowup {

namespace {

using Cd = std::complex<double>;

// Exact determinant of the 0/1 adjacency matrix (fraction-free Bareiss).
// Decides whether 0 is a true eigenvalue of every weighting of the
// subgraph: det(diag(eta) A) = (prod eta) det(A).
__int128 adjacency_det(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<__int128> a(static_cast<size_t>(n) * n, 0);
    for (auto [u, v] : g.edges()) {
        a[static_cast<size_t>(u) * n + v] = 1;
        a[static_cast<size_t>(v) * n + u] = 1;
    }
    __int128 prev = 1;
    int sign = 1;
    for (int p = 0; p < n; ++p) {
        int pivot = -1;
        for (int r = p; r < n; ++r)
            if (a[static_cast<size_t>(r) * n + p] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != p) {
            for (int c = 0; c < n; ++c)
                std::swap(a[static_cast<size_t>(pivot) * n + c], a[static_cast<size_t>(p) * n + c]);
            sign = -sign;
        }
        for (int r = p + 1; r < n; ++r)
            for (int c = p + 1; c < n; ++c)
                a[static_cast<size_t>(r) * n + c] =
                    (a[static_cast<size_t>(r) * n + c] * a[static_cast<size_t>(p) * n + p] -
                     a[static_cast<size_t>(r) * n + p] * a[static_cast<size_t>(p) * n + c]) /
                    prev;
        prev = a[static_cast<size_t>(p) * n + p];
    }
    return sign * a[static_cast<size_t>(n - 1) * n + (n - 1)];
}

// Single-linkage collapse of one solve's eigenvalues at tol; clusters are
// replaced by their means. See EngineOptions for why.
std::vector<Cd> collapse_values(const std::vector<Cd>& vals, double tol) {
    const size_t k = vals.size();
    std::vector<size_t> parent(k);
    for (size_t i = 0; i < k; ++i) parent[i] = i;
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            if (std::abs(vals[i] - vals[j]) <= tol) parent[find(i)] = find(j);
    std::vector<Cd> sums(k, 0.0);
    std::vector<long> counts(k, 0);
    for (size_t i = 0; i < k; ++i) {
        size_t r = find(i);
        sums[r] += vals[i];
        counts[r] += 1;
    }
    std::vector<Cd> out;
    for (size_t i = 0; i < k; ++i)
        if (counts[i] > 0) out.push_back(sums[i] / static_cast<double>(counts[i]));
    std::sort(out.begin(), out.end(), [](const Cd& a, const Cd& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

struct ItemResult {
    std::vector<EigRecord> records;
    std::int64_t matrices = 0;
};

// All eigenvalue records contributed by one connected subset: one matrix
// per weight pattern, defect cleanup, optional rotation expansion.
ItemResult process_subset(const Graph& g, int s, const EngineOptions& opts,
                          const VertexSubset& subset) {
    ItemResult res;
    InducedSubgraph sub = induced_subgraph(g, subset);
    const int k = sub.graph.vertex_count();
    const bool det_zero = adjacency_det(sub.graph) == 0;
    const int radix = opts.use_eta_reduction ? s : 2 * s;
    const int free_slots = opts.use_rotation_quotient ? k - 1 : k;

    std::vector<int> exps(static_cast<size_t>(k), 0);
    std::vector<int> eta_exps(static_cast<size_t>(k), 0);
    while (true) {
        ComplexMatrix m = opts.use_eta_reduction
                              ? adjacency_from_eta(sub.graph, EtaAssignment{s, exps})
                              : adjacency_from_pi(sub.graph, WeightAssignment{s, exps});
        std::vector<Cd> vals = complex_eigenvalues(m);
        res.matrices += 1;
        if (det_zero)
            std::erase_if(vals, [&](const Cd& v) { return std::abs(v) <= opts.zero_snap; });
        vals = collapse_values(vals, opts.collapse_tol);

        for (int i = 0; i < k; ++i) eta_exps[static_cast<size_t>(i)] = exps[static_cast<size_t>(i)] % s;
        for (const Cd& v : vals) {
            res.records.push_back({v, Witness{subset, eta_exps, 0, false}});
            if (opts.use_rotation_quotient) {
                for (int r = 1; r < s; ++r) {
                    Witness w{subset, eta_exps, r, false};
                    for (auto& f : w.eta_exponents) f = (f + r) % s;
                    res.records.push_back({v * unit_root(r, s), std::move(w)});
                }
            }
        }

        // next pattern (counter over the free slots, last slot fastest)
        int pos = k - 1;
        int lowest = k - free_slots;
        while (pos >= lowest && ++exps[static_cast<size_t>(pos)] == radix) {
            exps[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < lowest) break;
    }
    return res;
}

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

struct CertOutcome {
    Witness witness;
    double residual = 0.0;
    bool ok = false;
    std::string message;
};

// Re-solve one witness matrix, locate the eigenpair matching `value`, and
// run the constructive certification. match_tol absorbs both merge
// clustering and defective-eigenvalue scatter.
CertOutcome certify_witness(const Graph& g, const BlowupMap& bm, const UniformHypergraph& h,
                            const Witness& w, Cd value, double match_tol) {
    CertOutcome out;
    out.witness = w;
    if (w.zero_certificate) {
        CertifiedPair zp = zero_eigenpair(h);
        ResidualReport rep = eigen_residual(h, TensorEigenPair{value, zp.pair.x});
        out.ok = rep.certified();
        out.residual = rep.max_residual;
        if (!out.ok) out.message = "zero certificate residual too large";
        return out;
    }
    if (w.subset.empty()) {
        out.message = "witness missing subset";
        return out;
    }
    WeightAssignment wa = weights_from_eta(EtaAssignment{bm.s, w.eta_exponents});
    InducedSubgraph sub = induced_subgraph(g, w.subset);
    std::vector<EigenPair> pairs;
    try {
        pairs = complex_eigenpairs(adjacency_from_pi(sub.graph, wa));
    } catch (const Error& e) {
        out.message = e.what();
        return out;
    }
    std::sort(pairs.begin(), pairs.end(), [&](const EigenPair& a, const EigenPair& b) {
        return std::abs(a.value - value) < std::abs(b.value - value);
    });
    std::string last = "no eigenpair of the witness matrix matches " + std::to_string(value.real()) +
                       (value.imag() < 0 ? "" : "+") + std::to_string(value.imag()) + "i";
    for (const auto& p : pairs) {
        if (std::abs(p.value - value) > match_tol) break;
        try {
            CertifiedPair cp = construct_blowup_eigenvector(bm, h, w.subset, wa, p.value, p.vector);
            out.ok = true;
            out.residual = cp.residual.max_residual;
            return out;
        } catch (const ValidationError& e) {
            last = e.what();  // e.g. near-zero eigenvector component; try next match
        }
    }
    out.message = last;
    return out;
}

}  // namespace

SpectrumSet SpectrumReport::as_spectrum_set() const {
    SpectrumSet sp;
    sp.tol = tol;
    sp.values.reserve(values.size());
    for (const auto& v : values) sp.values.push_back({v.value, {v.witness}});
    return sp;
}

SpectrumReport blowup_spectrum(const Graph& g, int s, const EngineOptions& opts) {
    if (s < 2) throw ValidationError("blowup spectrum requires s >= 2");
    if (g.vertex_count() < 1) throw ValidationError("blowup spectrum requires a nonempty graph");
    if (!(opts.tol > 0.0)) throw ValidationError("merge tolerance must be positive");
    if (opts.worker_count < 1) throw ValidationError("worker_count must be >= 1");

    const double t0 = now_ms();
    std::vector<VertexSubset> subsets = opts.use_connected_reduction
                                            ? enumerate_connected_subsets(g)
                                            : enumerate_all_subsets(g);

    SpectrumReport report;
    report.tol = opts.tol;
    report.s = s;
    report.options = opts;
    report.counts.subsets = static_cast<std::int64_t>(subsets.size());

    std::vector<EigRecord> records;
    std::int64_t matrices = 0;

#ifdef _OPENMP
    const bool parallel = opts.worker_count > 1;
#else
    const bool parallel = false;
#endif
    if (!parallel) {
        for (const auto& subset : subsets) {
            ItemResult r = process_subset(g, s, opts, subset);
            matrices += r.matrices;
            records.insert(records.end(), std::make_move_iterator(r.records.begin()),
                           std::make_move_iterator(r.records.end()));
        }
    } else {
#ifdef _OPENMP
        std::vector<ItemResult> slots(subsets.size());
        std::exception_ptr failure;
#pragma omp parallel num_threads(opts.worker_count)
        {
#pragma omp for schedule(dynamic)
            for (long i = 0; i < static_cast<long>(subsets.size()); ++i) {
                try {
                    slots[static_cast<size_t>(i)] =
                        process_subset(g, s, opts, subsets[static_cast<size_t>(i)]);
                } catch (...) {
#pragma omp critical
                    if (!failure) failure = std::current_exception();
                }
            }
        }
        if (failure) std::rethrow_exception(failure);
        for (auto& slot : slots) {
            matrices += slot.matrices;
            records.insert(records.end(), std::make_move_iterator(slot.records.begin()),
                           std::make_move_iterator(slot.records.end()));
        }
#endif
    }

    // 0 is an eigenvalue of every k-uniform hypergraph with k >= 3;
    // inserted exactly with its single-vertex certificate.
    records.push_back({Cd(0.0), Witness{VertexSubset{g.vertex_count(), 1}, {0}, 0, true}});
    report.counts.matrices = matrices;
    report.counts.records = static_cast<std::int64_t>(records.size());

    SpectrumSet merged = merge_records(records, opts.tol);
    records.clear();
    records.shrink_to_fit();

    auto [h, bm] = build_blowup(g, s);
    const double match_tol = std::max(100.0 * opts.tol, 1e-2);

    report.values.resize(merged.values.size());
    std::exception_ptr cert_failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(opts.worker_count) if (parallel)
#endif
    for (long i = 0; i < static_cast<long>(merged.values.size()); ++i) {
        try {
            const SpectrumValue& sv = merged.values[static_cast<size_t>(i)];
            ReportedValue rv;
            rv.value = sv.value;
            if (!opts.certify) {
                rv.witness = sv.witnesses.empty() ? Witness{} : sv.witnesses.front();
            } else {
                bool any = false;
                double best = 0.0;
                Witness best_w;
                std::string first_error;
                for (const auto& w : sv.witnesses) {
                    CertOutcome oc = certify_witness(g, bm, h, w, sv.value, match_tol);
                    if (oc.ok && (!any || oc.residual < best)) {
                        any = true;
                        best = oc.residual;
                        best_w = w;
                    } else if (!oc.ok && first_error.empty()) {
                        first_error = oc.message;
                    }
                }
                if (!any)
                    throw CertificationError(
                        "no witness certifies value (" + std::to_string(sv.value.real()) + ", " +
                        std::to_string(sv.value.imag()) + "i): " + first_error);
                rv.witness = best_w;
                rv.residual = best;
            }
            report.values[static_cast<size_t>(i)] = std::move(rv);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!cert_failure) cert_failure = std::current_exception();
        }
    }
    if (cert_failure) std::rethrow_exception(cert_failure);

    report.counts.wall_ms = now_ms() - t0;
    return report;
}

VerifyResult verify_spectrum(const Graph& g, int s, const std::vector<ReportedValue>& values,
                             double tol) {
    if (s < 2) throw ValidationError("verify requires s >= 2");
    auto [h, bm] = build_blowup(g, s);
    const double match_tol = std::max(100.0 * tol, 1e-2);
    VerifyResult res;
    res.all_passed = true;
    for (const auto& v : values) {
        if (!v.witness.zero_certificate && v.witness.subset.empty())
            throw ValidationError("verify: value without witness");
        CertOutcome oc = certify_witness(g, bm, h, v.witness, v.value, match_tol);
        VerifiedValue vv;
        vv.value = v.value;
        vv.passed = oc.ok && oc.residual <= 1e-8;
        vv.residual = oc.residual;
        vv.message = oc.message;
        res.all_passed = res.all_passed && vv.passed;
        res.values.push_back(std::move(vv));
    }
    return res;
}

CrossValidationReport cross_validate_reductions(const Graph& g, int s,
                                                const EngineOptions& base_opts) {
    EngineOptions base = base_opts;
    base.use_eta_reduction = true;
    base.use_rotation_quotient = true;
    base.use_connected_reduction = true;
    base.certify = false;

    CrossValidationReport rep;
    SpectrumReport baseline = blowup_spectrum(g, s, base);
    SpectrumSet base_set = baseline.as_spectrum_set();
    rep.runs.push_back({"all reductions", baseline.counts.matrices, baseline.values.size(), {}});

    struct Mode {
        std::string name;
        void (*toggle)(EngineOptions&);
    };
    const Mode modes[] = {
        {"no eta reduction", [](EngineOptions& o) { o.use_eta_reduction = false; }},
        {"no rotation quotient", [](EngineOptions& o) { o.use_rotation_quotient = false; }},
        {"no connected reduction", [](EngineOptions& o) { o.use_connected_reduction = false; }},
    };
    rep.all_equal = true;
    for (const auto& mode : modes) {
        EngineOptions o = base;
        mode.toggle(o);
        SpectrumReport run = blowup_spectrum(g, s, o);
        SpectraDiff diff = compare_spectra(run.as_spectrum_set(), base_set, base.tol);
        rep.all_equal = rep.all_equal && diff.equal();
        rep.runs.push_back({mode.name, run.counts.matrices, run.values.size(), std::move(diff)});
    }
    return rep;
}

}  // namespace blowup
