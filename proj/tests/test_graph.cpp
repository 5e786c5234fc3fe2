#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "pcc/generate.hpp"
#include "pcc/graph.hpp"
#include "pcc/rng.hpp"

using namespace pcc;

namespace {

EdgeColouredGraph rainbow_complete(int n) {
    EdgeColouredGraph g(n);
    ColourId c = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v, c++);
    return g;
}

EdgeColouredGraph mono_complete(int n) {
    EdgeColouredGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v, 0);
    return g;
}

// Independent ground truth for delta1: try every subset of every colour
// class as the deleted monochromatic subgraph.
int delta1_by_enumeration(const EdgeColouredGraph& g) {
    std::map<ColourId, std::vector<std::pair<Vertex, Vertex>>> classes;
    for (auto [u, v] : g.edges()) classes[g.colour(u, v)].push_back({u, v});
    int best = -1;
    for (const auto& [c, edges] : classes) {
        int m = static_cast<int>(edges.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> deg(g.vertex_count(), 0);
            for (Vertex v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) {
                    --deg[edges[i].first];
                    --deg[edges[i].second];
                }
            int mn = *std::min_element(deg.begin(), deg.end());
            if (best < 0 || mn < best) best = mn;
        }
    }
    return best < 0 ? 0 : best;
}

EdgeColouredGraph random_complete(int n, int cap, std::uint64_t seed) {
    GenSpec spec;
    spec.kind = GenSpec::Kind::RandomComplete;
    spec.n = n;
    spec.mono_cap = cap;
    spec.colours = n;
    spec.seed = seed;
    return gen_random(spec);
}

}  // namespace

TEST_CASE("colour degree basics") {
    auto k4 = rainbow_complete(4);
    for (Vertex v = 0; v < 4; ++v) CHECK(colour_degree(k4, v) == 3);
    CHECK(min_colour_degree(k4) == 3);

    EdgeColouredGraph star(6);
    for (Vertex v = 1; v < 6; ++v) star.add_edge(0, v, 7);
    CHECK(colour_degree(star, 0) == 1);

    auto sharp = gen_extremal(9, 5);
    for (Vertex y = 5; y < 9; ++y) CHECK(colour_degree(sharp, y) == 5);
    CHECK(min_colour_degree(sharp) == 5);

    EdgeColouredGraph lonely(3);
    lonely.add_edge(0, 1, 0);
    CHECK(min_colour_degree(lonely) == 0);

    CHECK_THROWS_AS(colour_degree(k4, 9), std::invalid_argument);
}

TEST_CASE("delta1 against subset enumeration") {
    // proper 1-factorization of K4: three colours, each a perfect matching
    EdgeColouredGraph k4(4);
    k4.add_edge(0, 1, 0);
    k4.add_edge(2, 3, 0);
    k4.add_edge(0, 2, 1);
    k4.add_edge(1, 3, 1);
    k4.add_edge(0, 3, 2);
    k4.add_edge(1, 2, 2);
    CHECK(delta1(k4) == 2);
    CHECK(max_mono_degree(k4) == 1);

    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        EdgeColouredGraph g(6);
        for (Vertex u = 0; u < 6; ++u)
            for (Vertex v = u + 1; v < 6; ++v)
                g.add_edge(u, v, static_cast<ColourId>(rng.below(5)));
        CHECK(delta1(g) == delta1_by_enumeration(g));
        CHECK(delta1(g) >= min_colour_degree(g) - 1);
    }

    EdgeColouredGraph empty(4);
    CHECK(delta1(empty) == 0);
    CHECK(max_mono_degree(empty) == 0);
}

TEST_CASE("max mono degree and the complete-graph identity") {
    CHECK(max_mono_degree(rainbow_complete(4)) == 1);
    CHECK(max_mono_degree(mono_complete(4)) == 3);
    Rng rng(92);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 5 + static_cast<int>(rng.below(4));
        EdgeColouredGraph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                g.add_edge(u, v, static_cast<ColourId>(rng.below(4)));
        CHECK(delta1(g) + max_mono_degree(g) == n - 1);
    }
}

TEST_CASE("properly coloured path and cycle predicates") {
    EdgeColouredGraph tri(3);
    tri.add_edge(0, 1, 0);
    tri.add_edge(1, 2, 1);
    tri.add_edge(0, 2, 2);
    CHECK(is_pc_cycle(tri, {0, 1, 2}));
    CHECK(is_pc_path(tri, {0, 1, 2}));
    CHECK(is_pc_path(tri, {0}));

    EdgeColouredGraph bad(3);
    bad.add_edge(0, 1, 5);
    bad.add_edge(1, 2, 5);
    CHECK_FALSE(is_pc_path(bad, {0, 1, 2}));
    CHECK_FALSE(is_pc_path(bad, {0, 2}));  // missing edge is false, not an error
    CHECK_THROWS_AS(is_pc_path(bad, {0, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(is_pc_cycle(bad, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(is_pc_path(bad, std::vector<Vertex>{}), std::invalid_argument);

    // every rotation of a properly coloured cycle, minus its closing edge,
    // is a properly coloured path
    auto k5 = rainbow_complete(5);
    std::vector<Vertex> cyc{0, 2, 4, 1, 3};
    REQUIRE(is_pc_cycle(k5, cyc));
    for (size_t r = 0; r < cyc.size(); ++r) {
        std::vector<Vertex> rot;
        for (size_t i = 0; i < cyc.size(); ++i) rot.push_back(cyc[(r + i) % cyc.size()]);
        CHECK(is_pc_path(k5, rot));
    }
}

TEST_CASE("edge minimal reduction") {
    // monochromatic path a-b-c-d loses its middle edge
    EdgeColouredGraph p4(4);
    p4.add_edge(0, 1, 3);
    p4.add_edge(1, 2, 3);
    p4.add_edge(2, 3, 3);
    auto r = edge_minimal_reduction(p4);
    CHECK(r.edge_count() == 2);
    CHECK(r.has_edge(0, 1));
    CHECK_FALSE(r.has_edge(1, 2));
    CHECK(r.has_edge(2, 3));

    // star-shaped colour classes are already minimal
    EdgeColouredGraph star(5);
    for (Vertex v = 1; v < 5; ++v) star.add_edge(0, v, 1);
    auto rs = edge_minimal_reduction(star);
    CHECK(rs.edge_count() == 4);

    Rng rng(10);
    for (int trial = 0; trial < 10; ++trial) {
        EdgeColouredGraph g(8);
        for (Vertex u = 0; u < 8; ++u)
            for (Vertex v = u + 1; v < 8; ++v)
                g.add_edge(u, v, static_cast<ColourId>(rng.below(4)));
        auto red = edge_minimal_reduction(g);
        // per-vertex colour sets unchanged
        for (Vertex v = 0; v < 8; ++v) {
            std::set<ColourId> before, after;
            for (Vertex u : g.neighbours(v)) before.insert(g.colour(v, u));
            for (Vertex u : red.neighbours(v)) after.insert(red.colour(v, u));
            CHECK(before == after);
            CHECK(red.degree(v) <= g.degree(v));
        }
        // every colour class is a disjoint union of stars
        std::set<ColourId> cols;
        for (auto [u, v] : red.edges()) cols.insert(red.colour(u, v));
        for (ColourId c : cols)
            for (auto [u, v] : red.edges())
                if (red.colour(u, v) == c)
                    CHECK((mono_degree(red, u, c) == 1 || mono_degree(red, v, c) == 1));
    }
}

TEST_CASE("ecg text format") {
    auto g = gen_extremal(6, 3);
    auto text = to_ecg(g);
    auto back = parse_ecg(text);
    CHECK(to_ecg(back) == text);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edge_count() == g.edge_count());

    CHECK_NOTHROW(parse_ecg("# comment\n3 1\n0 1 4\n"));
    CHECK_THROWS_AS(parse_ecg("3 2\n0 1 4\n"), EcgParseError);
    CHECK_THROWS_AS(parse_ecg("3 1\n0 3 4\n"), EcgParseError);
    CHECK_THROWS_AS(parse_ecg("nonsense\n"), EcgParseError);
    try {
        parse_ecg("3 1\n0 0 1\n");
        CHECK(false);
    } catch (const EcgParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("simple graph invariants are enforced") {
    EdgeColouredGraph g(3);
    g.add_edge(0, 1, 0);
    CHECK_THROWS_AS(g.add_edge(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 2, -1), std::invalid_argument);
}

TEST_CASE("random complete generator respects the mono cap") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        auto g = random_complete(9, 2, seed);
        CHECK(g.edge_count() == 36);
        CHECK(max_mono_degree(g) <= 2);
        CHECK(delta1(g) >= 9 - 1 - 2);
    }
}
