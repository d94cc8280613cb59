#include <doctest.h>

#include <complex>
#include <random>

#include "blowup/charpoly.hpp"
#include "blowup/eigensolve.hpp"
#include "blowup/graph.hpp"
#include "blowup/weights.hpp"
#include "test_support.hpp"

using namespace blowup;
using testsupport::Cd;

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list("0 1\n1 2\n0 2");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(0, 2));

    SUBCASE("declared vertex count") {
        Graph h = parse_edge_list("n 4\n0 1");
        CHECK(h.vertex_count() == 4);
        CHECK(h.edge_count() == 1);
        CHECK(h.degree(2) == 0);
        CHECK(h.degree(3) == 0);
    }
    SUBCASE("comments, blanks, duplicates") {
        Graph h = parse_edge_list("# triangle\n0 1\n\n1 0\n1 2\n");
        CHECK(h.vertex_count() == 3);
        CHECK(h.edge_count() == 2);
    }
    SUBCASE("self-loop rejected") { CHECK_THROWS_AS(parse_edge_list("0 0"), ValidationError); }
    SUBCASE("label beyond declared count") {
        CHECK_THROWS_AS(parse_edge_list("n 2\n0 5"), ValidationError);
    }
    SUBCASE("malformed token carries line number") {
        try {
            parse_edge_list("0 1\n0 x");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("too many fields") { CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError); }
}

TEST_CASE("graph6 parsing") {
    // 'B' = 66 -> n=3; 'w' = 119 -> 56 = 0b111000 -> edges (0,1),(0,2),(1,2)
    Graph g = parse_graph6("Bw");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);

    Graph e = parse_graph6("A_");  // '_' = 95 -> 32 = 0b100000 -> edge (0,1)
    CHECK(e.vertex_count() == 2);
    CHECK(e.adjacent(0, 1));

    Graph iso = parse_graph6("A?");  // '?' = 63 -> no bits set
    CHECK(iso.vertex_count() == 2);
    CHECK(iso.edge_count() == 0);

    CHECK_THROWS_AS(parse_graph6("B\x20"), ParseError);   // byte below 63
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);       // truncated
    CHECK_THROWS_AS(parse_graph6("~??"), ParseError);     // long size form
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("graph6 round-trip on all graphs with n <= 7") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 7; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            Graph g = testsupport::random_graph(n, 0.4, rng);
            Graph back = parse_graph6(testsupport::encode_graph6(g));
            CHECK(back == g);
        }
    }
}

TEST_CASE("induced subgraphs") {
    Graph g = testsupport::k3();
    SUBCASE("edge of a triangle") {
        auto sub = induced_subgraph(g, VertexSubset::of(3, {0, 1}));
        CHECK(sub.graph.vertex_count() == 2);
        CHECK(sub.graph.adjacent(0, 1));
        CHECK(sub.original_labels == std::vector<int>{0, 1});
    }
    SUBCASE("identity case") {
        auto sub = induced_subgraph(g, VertexSubset::full(3));
        CHECK(sub.graph == g);
    }
    SUBCASE("nonadjacent endpoints of a path") {
        auto sub = induced_subgraph(testsupport::p3(), VertexSubset::of(3, {0, 2}));
        CHECK(sub.graph.vertex_count() == 2);
        CHECK(sub.graph.edge_count() == 0);
    }
    SUBCASE("empty subset rejected") {
        CHECK_THROWS_AS(induced_subgraph(g, VertexSubset{3, 0}), ValidationError);
    }
    SUBCASE("edge set matches brute force") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 40; ++trial) {
            int n = 3 + static_cast<int>(rng() % 4);  // up to 6
            Graph h = testsupport::random_graph(n, 0.5, rng);
            std::uint64_t members = 1 + rng() % ((1ull << n) - 1);
            auto sub = induced_subgraph(h, VertexSubset{n, members});
            auto labels = sub.original_labels;
            int expected_edges = 0;
            for (auto [u, v] : h.edges())
                if (((members >> u) & 1) && ((members >> v) & 1)) ++expected_edges;
            CHECK(sub.graph.edge_count() == expected_edges);
            for (size_t a = 0; a < labels.size(); ++a)
                for (size_t b = a + 1; b < labels.size(); ++b)
                    CHECK(sub.graph.adjacent(static_cast<int>(a), static_cast<int>(b)) ==
                          h.adjacent(labels[a], labels[b]));
        }
    }
}

TEST_CASE("connected subset enumeration") {
    SUBCASE("triangle has all 7 nonempty subsets") {
        auto subs = enumerate_connected_subsets(testsupport::k3());
        CHECK(subs.size() == 7);
    }
    SUBCASE("path P3 misses only {0,2}") {
        auto subs = enumerate_connected_subsets(testsupport::p3());
        CHECK(subs.size() == 6);
        for (const auto& s : subs) CHECK(s.members != 0b101u);
    }
    SUBCASE("edgeless graph yields singletons") {
        auto subs = enumerate_connected_subsets(Graph(3));
        REQUIRE(subs.size() == 3);
        CHECK(subs[0].members == 1u);
        CHECK(subs[1].members == 2u);
        CHECK(subs[2].members == 4u);
    }
    SUBCASE("order: min vertex, then ascending mask") {
        auto subs = enumerate_connected_subsets(testsupport::k3());
        std::vector<std::uint64_t> masks;
        for (const auto& s : subs) masks.push_back(s.members);
        CHECK(masks == std::vector<std::uint64_t>{0b001, 0b011, 0b101, 0b111, 0b010, 0b110, 0b100});
    }
    SUBCASE("matches brute-force connectivity filter up to n = 10") {
        std::mt19937_64 rng(23);
        for (int n = 1; n <= 10; ++n) {
            Graph g = testsupport::random_graph(n, n <= 5 ? 0.5 : 0.3, rng);
            auto subs = enumerate_connected_subsets(g);
            std::set<std::uint64_t> got;
            for (const auto& s : subs) CHECK(got.insert(s.members).second);  // exactly once
            std::set<std::uint64_t> expect;
            for (std::uint64_t m = 1; m < (1ull << n); ++m)
                if (testsupport::subset_connected_bruteforce(g, m)) expect.insert(m);
            CHECK(got == expect);
        }
    }
}

TEST_CASE("weighted adjacency matrices") {
    SUBCASE("trivial weights give the plain adjacency") {
        auto m = adjacency_from_pi(testsupport::k2(), WeightAssignment{2, {0, 0}});
        CHECK(m.at(0, 1) == Cd(1.0));
        CHECK(m.at(1, 0) == Cd(1.0));
        CHECK(m.at(0, 0) == Cd(0.0));
    }
    SUBCASE("K2 with exponents (1,0) gives +/- i eigenvalues") {
        auto m = adjacency_from_pi(testsupport::k2(), WeightAssignment{2, {1, 0}});
        CHECK(m.at(0, 1) == Cd(0.0, 1.0));
        CHECK(m.at(1, 0) == Cd(0.0, 1.0));
        auto eigs = complex_eigenvalues(m);
        CHECK(testsupport::sets_match(eigs, {Cd(0, 1), Cd(0, -1)}, 1e-12));
    }
    SUBCASE("K3 with all exponents 1: off-diagonal entries are -1") {
        auto m = adjacency_from_pi(testsupport::k3(), WeightAssignment{2, {1, 1, 1}});
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) CHECK(m.at(i, j) == Cd(-1.0));
    }
    SUBCASE("eta matrix scales rows") {
        auto m = adjacency_from_eta(testsupport::k3(), EtaAssignment{2, {0, 0, 0}});
        auto eigs = complex_eigenvalues(m);
        CHECK(testsupport::sets_match(eigs, {Cd(2), Cd(-1), Cd(-1)}, 1e-9));

        auto neg = adjacency_from_eta(testsupport::k3(), EtaAssignment{2, {1, 1, 1}});
        auto eigs2 = complex_eigenvalues(neg);
        CHECK(testsupport::sets_match(eigs2, {Cd(-2), Cd(1), Cd(1)}, 1e-9));
    }
    SUBCASE("K2, s=3, eta=(omega, 1)") {
        auto m = adjacency_from_eta(testsupport::k2(), EtaAssignment{3, {1, 0}});
        Cd omega = unit_root(1, 3);
        CHECK(std::abs(m.at(0, 1) - omega) < 1e-15);
        CHECK(m.at(1, 0) == Cd(1.0));
        Cd root = std::sqrt(omega);
        CHECK(testsupport::sets_match(complex_eigenvalues(m), {root, -root}, 1e-12));
    }
    SUBCASE("length mismatch") {
        CHECK_THROWS_AS(adjacency_from_pi(testsupport::k3(), WeightAssignment{2, {0, 0}}),
                        ValidationError);
        CHECK_THROWS_AS(adjacency_from_eta(testsupport::k3(), EtaAssignment{2, {0}}),
                        ValidationError);
    }
}

TEST_CASE("pi/eta spectral equivalence and global rotation") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);  // up to 6
        int s = 2 + static_cast<int>(rng() % 2);  // 2 or 3
        Graph g = testsupport::random_graph(n, 0.5, rng);
        WeightAssignment w{s, {}};
        for (int i = 0; i < n; ++i) w.exponents.push_back(static_cast<int>(rng() % (2 * s)));
        EtaAssignment h = EtaAssignment::squares_of(w);

        auto mp = adjacency_from_pi(g, w);
        auto me = adjacency_from_eta(g, h);

        // similar matrices share their characteristic polynomial exactly
        auto pp = char_poly(mp), pe = char_poly(me);
        for (size_t j = 0; j < pp.coeffs.size(); ++j)
            CHECK(std::abs(pp.coeffs[j] - pe.coeffs[j]) < 1e-9);

        // eigenvalue multisets agree; tolerance leaves room for the
        // eps^(1/p) scatter of repeated (possibly defective) eigenvalues
        CHECK(testsupport::multisets_match(complex_eigenvalues(mp), complex_eigenvalues(me), 5e-3));

        // multiplying every eta by a fixed s-th root rotates the spectrum
        int r = 1 + static_cast<int>(rng() % (s - 1 ? s - 1 : 1));
        EtaAssignment rotated = h;
        for (auto& f : rotated.exponents) f = (f + r) % s;
        auto rotated_eigs = complex_eigenvalues(adjacency_from_eta(g, rotated));
        std::vector<Cd> expected;
        for (const auto& v : complex_eigenvalues(me)) expected.push_back(v * unit_root(r, s));
        CHECK(testsupport::multisets_match(rotated_eigs, expected, 5e-3));
    }
}

TEST_CASE("spectral radius") {
    CHECK(spectral_radius(testsupport::k3()) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(spectral_radius(testsupport::k2()) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(spectral_radius(testsupport::petersen()) == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(spectral_radius(Graph(4)) == 0.0);
}
