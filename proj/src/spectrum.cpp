#include "blowup/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "blowup/errors.hpp"
#include "blowup/weights.hpp"

namespace blowup {

bool operator<(const Witness& a, const Witness& b) {
    if (a.zero_certificate != b.zero_certificate) return a.zero_certificate;
    int ca = a.subset.count(), cb = b.subset.count();
    if (ca != cb) return ca < cb;
    if (a.subset.members != b.subset.members) return a.subset.members < b.subset.members;
    if (a.eta_exponents != b.eta_exponents) return a.eta_exponents < b.eta_exponents;
    return a.rotation < b.rotation;
}

bool operator==(const Witness& a, const Witness& b) {
    return a.zero_certificate == b.zero_certificate && a.subset == b.subset &&
           a.eta_exponents == b.eta_exponents && a.rotation == b.rotation;
}

std::vector<std::complex<double>> SpectrumSet::plain_values() const {
    std::vector<std::complex<double>> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.value);
    return out;
}

namespace {

using Cd = std::complex<double>;

bool cd_less(const Cd& a, const Cd& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

// Weighted point: a pre-merged group of records sharing (nearly) one value.
struct Point {
    Cd sum;
    long count = 0;
    std::vector<Witness> cands;  // sorted, at most kWitnessCandidates

    Cd centroid() const { return sum / static_cast<double>(count); }
};

void merge_candidates(std::vector<Witness>& into, const std::vector<Witness>& from) {
    std::vector<Witness> merged;
    merged.reserve(into.size() + from.size());
    std::merge(into.begin(), into.end(), from.begin(), from.end(), std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    if (merged.size() > kWitnessCandidates) merged.resize(kWitnessCandidates);
    into = std::move(merged);
}

void insert_candidate(std::vector<Witness>& into, const Witness& w) {
    auto it = std::lower_bound(into.begin(), into.end(), w);
    if (it != into.end() && *it == w) return;
    if (into.size() == kWitnessCandidates) {
        if (it == into.end()) return;
        into.pop_back();
        it = std::lower_bound(into.begin(), into.end(), w);
    }
    into.insert(it, w);
}

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = i;
    }
    size_t find(size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

SpectrumSet cluster_points(std::vector<Point> pts, double tol) {
    // Single-linkage at tol: plane sweep on the real part; only pairs with
    // |re difference| <= tol can be within tol.
    std::sort(pts.begin(), pts.end(),
              [](const Point& a, const Point& b) { return cd_less(a.centroid(), b.centroid()); });
    UnionFind uf(pts.size());
    size_t lo = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        Cd ci = pts[i].centroid();
        while (lo < i && pts[lo].centroid().real() < ci.real() - tol) ++lo;
        for (size_t j = lo; j < i; ++j)
            if (std::abs(pts[j].centroid() - ci) <= tol) uf.unite(j, i);
    }
    std::vector<Point> clusters;
    std::vector<long> slot(pts.size(), -1);
    for (size_t i = 0; i < pts.size(); ++i) {
        size_t r = uf.find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<long>(clusters.size());
            clusters.push_back(Point{});
        }
        Point& c = clusters[static_cast<size_t>(slot[r])];
        c.sum += pts[i].sum;
        c.count += pts[i].count;
        merge_candidates(c.cands, pts[i].cands);
    }
    SpectrumSet out;
    out.tol = tol;
    out.values.reserve(clusters.size());
    for (auto& c : clusters) out.values.push_back({c.centroid(), std::move(c.cands)});
    std::sort(out.values.begin(), out.values.end(),
              [](const SpectrumValue& a, const SpectrumValue& b) { return cd_less(a.value, b.value); });
    return out;
}

SpectrumSet merge_impl(std::vector<EigRecord> records, double tol, bool with_witnesses) {
    if (!(tol > 0.0)) throw ValidationError("merge tolerance must be positive");
    for (const auto& r : records)
        if (!std::isfinite(r.value.real()) || !std::isfinite(r.value.imag()))
            throw ValidationError("merge: non-finite value");
    std::sort(records.begin(), records.end(), [](const EigRecord& a, const EigRecord& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        if (a.value.imag() != b.value.imag()) return a.value.imag() < b.value.imag();
        return a.witness < b.witness;
    });
    // Pre-pass: collapse runs of near-identical values (distance far below
    // tol) into weighted points, so duplicate-heavy inputs stay cheap.
    const double micro = tol * 1e-3;
    std::vector<Point> pts;
    for (size_t i = 0; i < records.size();) {
        Point p;
        Cd last = records[i].value;
        size_t j = i;
        while (j < records.size() && std::abs(records[j].value - last) <= micro) {
            p.sum += records[j].value;
            p.count += 1;
            last = records[j].value;
            if (with_witnesses) insert_candidate(p.cands, records[j].witness);
            ++j;
        }
        pts.push_back(std::move(p));
        i = j;
    }
    return cluster_points(std::move(pts), tol);
}

}  // namespace

SpectrumSet merge_spectrum(std::span<const Cd> values, double tol) {
    std::vector<EigRecord> records;
    records.reserve(values.size());
    for (const auto& v : values) records.push_back({v, {}});
    return merge_impl(std::move(records), tol, /*with_witnesses=*/false);
}

SpectrumSet merge_records(std::span<const EigRecord> records, double tol) {
    return merge_impl(std::vector<EigRecord>(records.begin(), records.end()), tol,
                      /*with_witnesses=*/true);
}

SpectrumSet rotation_closure(const SpectrumSet& sp, int s) {
    if (s < 1) throw ValidationError("rotation_closure requires s >= 1");
    std::vector<EigRecord> records;
    records.reserve(sp.values.size() * static_cast<size_t>(s));
    for (const auto& sv : sp.values) {
        for (int r = 0; r < s; ++r) {
            Cd rotated = sv.value * unit_root(r, s);
            if (sv.witnesses.empty()) {
                records.push_back({rotated, {}});
                continue;
            }
            for (const auto& w : sv.witnesses) {
                Witness rw = w;
                if (!w.zero_certificate && r != 0) {
                    rw.rotation = (w.rotation + r) % s;
                    for (auto& f : rw.eta_exponents) f = (f + r) % s;
                }
                records.push_back({rotated, std::move(rw)});
            }
        }
    }
    return merge_impl(std::move(records), sp.tol, /*with_witnesses=*/true);
}

SpectraDiff compare_spectra(const SpectrumSet& a, const SpectrumSet& b, double tol) {
    if (!(tol > 0.0)) throw ValidationError("compare tolerance must be positive");
    SpectraDiff diff;
    std::vector<bool> used(b.values.size(), false);
    for (const auto& av : a.values) {
        long best = -1;
        double best_d = 0.0;
        for (size_t j = 0; j < b.values.size(); ++j) {
            if (used[j]) continue;
            double d = std::abs(av.value - b.values[j].value);
            if (best < 0 || d < best_d) {
                best = static_cast<long>(j);
                best_d = d;
            }
        }
        if (best >= 0 && best_d <= tol)
            used[static_cast<size_t>(best)] = true;
        else
            diff.a_minus_b.push_back(av.value);
    }
    for (size_t j = 0; j < b.values.size(); ++j)
        if (!used[j]) diff.b_minus_a.push_back(b.values[j].value);
    return diff;
}

}  // namespace blowup
