#include <doctest.h>

#include <complex>
#include <random>

#include "blowup/engine.hpp"
#include "blowup/weights.hpp"
#include "test_support.hpp"

using namespace blowup;
using testsupport::Cd;

namespace {

// Independent desk-scale oracle for n <= 3: all nonempty subsets, all full
// eta patterns, closed-form roots, own dedup. No engine code paths.
std::vector<Cd> brute_spectrum_small(const Graph& g, int s) {
    std::vector<Cd> vals{Cd(0.0)};
    int n = g.vertex_count();
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) verts.push_back(v);
        size_t k = verts.size();
        std::vector<int> f(k, 0);
        while (true) {
            std::vector<std::vector<Cd>> m(k, std::vector<Cd>(k, 0.0));
            for (size_t a = 0; a < k; ++a)
                for (size_t b = 0; b < k; ++b)
                    if (a != b && g.adjacent(verts[a], verts[b]))
                        m[a][b] = unit_root(f[a], s);
            auto eigs = testsupport::small_matrix_eigs(m);
            vals.insert(vals.end(), eigs.begin(), eigs.end());
            int pos = static_cast<int>(k) - 1;
            while (pos >= 0 && ++f[static_cast<size_t>(pos)] == s) {
                f[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    // own dedup
    std::vector<Cd> out;
    for (const auto& v : vals) {
        bool found = false;
        for (const auto& w : out)
            if (std::abs(v - w) <= 1e-6) found = true;
        if (!found) out.push_back(v);
    }
    return out;
}

std::vector<Cd> report_values(const SpectrumReport& rep) {
    std::vector<Cd> out;
    for (const auto& v : rep.values) out.push_back(v.value);
    return out;
}

}  // namespace

TEST_CASE("K3 blowup spectrum matches the golden 11-value set") {
    const double r = std::sqrt(7.0) / 2.0;  // 1.3228756555322954
    const std::vector<Cd> golden{Cd(0),        Cd(1),        Cd(-1),      Cd(0, 1),
                                 Cd(0, -1),    Cd(2),        Cd(-2),      Cd(0.5, r),
                                 Cd(0.5, -r),  Cd(-0.5, r),  Cd(-0.5, -r)};
    SpectrumReport rep = blowup_spectrum(testsupport::k3(), 2);
    REQUIRE(rep.values.size() == 11);
    CHECK(testsupport::sets_match(report_values(rep), golden, 1e-9));
    // matches the independent closed-form oracle as well
    CHECK(testsupport::sets_match(report_values(rep), brute_spectrum_small(testsupport::k3(), 2),
                                  1e-9));
    // certification: every nonzero value carries a residual within gate
    for (const auto& v : rep.values) {
        REQUIRE(v.residual.has_value());
        CHECK(*v.residual <= 1e-8);
        if (std::abs(v.value) > 1e-8) CHECK_FALSE(v.witness.subset.empty());
    }
}

TEST_CASE("K2 blowup spectrum is {0} plus the 2s-th roots of unity") {
    for (int s : {2, 3, 4}) {
        SpectrumReport rep = blowup_spectrum(testsupport::k2(), s);
        std::vector<Cd> expect{Cd(0.0)};
        for (int j = 0; j < 2 * s; ++j) expect.push_back(unit_root(j, 2 * s));
        CHECK(testsupport::sets_match(report_values(rep), expect, 1e-9));
    }
}

TEST_CASE("P3 blowup spectrum matches the closed-form oracle") {
    SpectrumReport rep = blowup_spectrum(testsupport::p3(), 2);
    const double r2 = std::sqrt(2.0);
    const std::vector<Cd> golden{Cd(0),      Cd(1),  Cd(-1),     Cd(0, 1), Cd(0, -1),
                                 Cd(r2), Cd(-r2), Cd(0, r2), Cd(0, -r2)};
    CHECK(testsupport::sets_match(report_values(rep), golden, 1e-9));
    CHECK(testsupport::sets_match(report_values(rep), brute_spectrum_small(testsupport::p3(), 2),
                                  1e-9));
}

TEST_CASE("edgeless graph has spectrum {0}") {
    SpectrumReport rep = blowup_spectrum(Graph(3), 2);
    REQUIRE(rep.values.size() == 1);
    CHECK(rep.values[0].value == Cd(0.0));
    CHECK(rep.values[0].witness.zero_certificate);
}

TEST_CASE("engine input validation") {
    CHECK_THROWS_AS(blowup_spectrum(testsupport::k2(), 1), ValidationError);
    CHECK_THROWS_AS(blowup_spectrum(Graph(0), 2), ValidationError);
    EngineOptions bad_tol;
    bad_tol.tol = 0.0;
    CHECK_THROWS_AS(blowup_spectrum(testsupport::k2(), 2, bad_tol), ValidationError);
    EngineOptions bad_workers;
    bad_workers.worker_count = 0;
    CHECK_THROWS_AS(blowup_spectrum(testsupport::k2(), 2, bad_workers), ValidationError);
}

TEST_CASE("deterministic across worker counts") {
    std::mt19937_64 rng(307);
    Graph g = testsupport::random_graph(7, 0.5, rng);
    EngineOptions serial;
    serial.worker_count = 1;
    EngineOptions parallel;
    parallel.worker_count = 4;
    SpectrumReport a = blowup_spectrum(g, 2, serial);
    SpectrumReport b = blowup_spectrum(g, 2, parallel);
    REQUIRE(a.values.size() == b.values.size());
    for (size_t i = 0; i < a.values.size(); ++i) {
        CHECK(a.values[i].value == b.values[i].value);  // bitwise
        CHECK(a.values[i].witness == b.values[i].witness);
        CHECK(a.values[i].residual == b.values[i].residual);
    }
}

TEST_CASE("monotonicity under induced subgraphs") {
    std::mt19937_64 rng(311);
    for (int trial = 0; trial < 6; ++trial) {
        Graph g = testsupport::random_graph(5, 0.6, rng);
        SpectrumReport full = blowup_spectrum(g, 2);
        SpectrumSet full_set = full.as_spectrum_set();
        std::uint64_t members = 1 + rng() % ((1ull << 5) - 1);
        auto sub = induced_subgraph(g, VertexSubset{5, members});
        if (sub.graph.vertex_count() == 0) continue;
        SpectrumReport part = blowup_spectrum(sub.graph, 2);
        for (const auto& v : part.values) {
            double best = 1e9;
            for (const auto& w : full.values) best = std::min(best, std::abs(v.value - w.value));
            CHECK(best <= 1e-7);
        }
    }
}

TEST_CASE("rotation symmetry of the output set") {
    for (int s : {2, 3}) {
        SpectrumReport rep = blowup_spectrum(testsupport::p3(), s);
        auto vals = report_values(rep);
        for (int r = 0; r < s; ++r) {
            std::vector<Cd> rotated;
            for (const auto& v : vals) rotated.push_back(v * unit_root(r, s));
            CHECK(testsupport::sets_match(vals, rotated, 1e-7));
        }
    }
}

TEST_CASE("spectral radius identity on samples") {
    std::mt19937_64 rng(313);
    for (int trial = 0; trial < 5; ++trial) {
        Graph g = testsupport::random_graph(5, 0.5, rng);
        if (!is_connected(g)) continue;
        SpectrumReport rep = blowup_spectrum(g, 2);
        double max_mod = 0.0;
        for (const auto& v : rep.values) max_mod = std::max(max_mod, std::abs(v.value));
        CHECK(max_mod == doctest::Approx(spectral_radius(g)).epsilon(1e-7));
    }
}

TEST_CASE("verify_spectrum") {
    SUBCASE("round trip on engine output") {
        SpectrumReport rep = blowup_spectrum(testsupport::k3(), 2);
        VerifyResult res = verify_spectrum(testsupport::k3(), 2, rep.values, rep.tol);
        CHECK(res.all_passed);
        CHECK(res.values.size() == rep.values.size());
    }
    SUBCASE("3.0 with a full-triangle witness fails") {
        ReportedValue fake;
        fake.value = Cd(3.0);
        fake.witness.subset = VertexSubset::full(3);
        fake.witness.eta_exponents = {0, 0, 0};
        VerifyResult res = verify_spectrum(testsupport::k3(), 2, {fake});
        CHECK_FALSE(res.all_passed);
        REQUIRE(res.values.size() == 1);
        CHECK_FALSE(res.values[0].passed);
        CHECK(res.values[0].message.find("no eigenpair") != std::string::npos);
    }
    SUBCASE("{0} with the single-vertex witness passes") {
        ReportedValue zero;
        zero.value = Cd(0.0);
        zero.witness.zero_certificate = true;
        zero.witness.subset = VertexSubset{3, 1};
        zero.witness.eta_exponents = {0};
        VerifyResult res = verify_spectrum(testsupport::k3(), 2, {zero});
        CHECK(res.all_passed);
    }
    SUBCASE("value without witness is a validation error") {
        ReportedValue naked;
        naked.value = Cd(1.0);
        CHECK_THROWS_AS(verify_spectrum(testsupport::k3(), 2, {naked}), ValidationError);
    }
}

TEST_CASE("cross validation of the reductions") {
    SUBCASE("K3, s=2: four equal runs of 11 values") {
        CrossValidationReport rep = cross_validate_reductions(testsupport::k3(), 2);
        CHECK(rep.all_equal);
        REQUIRE(rep.runs.size() == 4);
        for (const auto& run : rep.runs) CHECK(run.value_count == 11);
        // the reductions really cut work
        CHECK(rep.runs[1].matrices > rep.runs[0].matrices);
        CHECK(rep.runs[2].matrices > rep.runs[0].matrices);
        CHECK(rep.runs[3].matrices >= rep.runs[0].matrices);  // K3: every subset is connected
    }
    SUBCASE("P3, s=2 equal; disconnected subsets add work but no values") {
        CrossValidationReport rep = cross_validate_reductions(testsupport::p3(), 2);
        CHECK(rep.all_equal);
        CHECK(rep.runs[3].matrices > rep.runs[0].matrices);
    }
    SUBCASE("K2, s=3 equal and the spectrum is {0} plus 6th roots") {
        CrossValidationReport rep = cross_validate_reductions(testsupport::k2(), 3);
        CHECK(rep.all_equal);
        CHECK(rep.runs[0].value_count == 7);
    }
}

TEST_CASE("eta reduction, quotient and connectivity all reduce matrix counts") {
    EngineOptions all_on;
    SpectrumReport fast = blowup_spectrum(testsupport::p3(), 2, all_on);
    EngineOptions off = all_on;
    off.use_eta_reduction = false;
    off.use_rotation_quotient = false;
    off.use_connected_reduction = false;
    SpectrumReport slow = blowup_spectrum(testsupport::p3(), 2, off);
    CHECK(fast.counts.matrices < slow.counts.matrices);
    CHECK(testsupport::sets_match(report_values(fast), report_values(slow), 1e-7));
}
