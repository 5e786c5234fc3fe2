#include <doctest.h>

#include <algorithm>
#include <set>

#include "pcc/factor.hpp"
#include "pcc/generate.hpp"
#include "pcc/oracle.hpp"
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

EdgeColouredGraph random_complete(int n, int cap, std::uint64_t seed) {
    GenSpec spec;
    spec.kind = GenSpec::Kind::RandomComplete;
    spec.n = n;
    spec.mono_cap = cap;
    spec.colours = n;
    spec.seed = seed;
    return gen_random(spec);
}

// A family with one uncovered vertex, built from an oracle two-factor by
// dropping the cycle containing the highest vertex. Returns false when the
// graph has no two-factor.
bool family_missing_one(const EdgeColouredGraph& g, CycleFamily* out, Vertex* x) {
    auto r = oracle_pc_two_factor(g);
    if (r.status != OracleStatus::Found) return false;
    CycleFamily fam = *r.family;
    int drop = -1;
    for (int i = 0; i < fam.cycle_count(); ++i)
        if (fam.cycles[i].contains(g.vertex_count() - 1)) drop = i;
    *x = g.vertex_count() - 1;
    CycleFamily kept;
    for (int i = 0; i < fam.cycle_count(); ++i)
        if (i != drop) kept.cycles.push_back(fam.cycles[i]);
    *out = kept;
    return true;
}

// A properly coloured path grown greedily from `start`, for classification
// tests.
PCPath grow_path(const EdgeColouredGraph& g, Vertex start, int want) {
    PCPath p{{start}};
    std::set<Vertex> used{start};
    while (p.size() < want) {
        Vertex cur = p.tail();
        bool ext = false;
        for (Vertex v : g.neighbours(cur)) {
            if (used.count(v)) continue;
            if (p.size() >= 2 &&
                g.colour(p.verts[p.size() - 2], cur) == g.colour(cur, v))
                continue;
            p.verts.push_back(v);
            used.insert(v);
            ext = true;
            break;
        }
        if (!ext) break;
    }
    return p;
}

}  // namespace

TEST_CASE("colour neighbourhood with an empty family") {
    auto k5 = rainbow_complete(5);
    auto cn = colour_neighbourhood(k5, CycleFamily{}, 2);
    CHECK(cn.reps.size() == 4);
    CHECK(cn.free_reps == cn.reps);
    CHECK(cn.fwd_anchored.empty());
    CHECK(cn.bwd_anchored.empty());
    CHECK(cn.dual_anchored.empty());
    for (Vertex v : cn.free_reps) CHECK(cn.vertex_colour.at(v) == k5.colour(2, v));
    CHECK_THROWS_AS(colour_neighbourhood(k5, CycleFamily{}, 7), std::invalid_argument);
}

TEST_CASE("colour neighbourhood decomposition counts the colour degree") {
    Rng rng(64);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 6 + static_cast<int>(rng.below(4));
        auto g = random_complete(n, 2 + static_cast<int>(rng.below(2)), rng.next());
        CycleFamily fam;
        Vertex x;
        if (!family_missing_one(g, &fam, &x)) continue;
        ++checked;
        auto cn = colour_neighbourhood(g, fam, x);
        int counted = static_cast<int>(cn.free_reps.size() + cn.fwd_anchored.size() +
                                       cn.bwd_anchored.size() + 2 * cn.dual_anchored.size());
        CHECK(counted == colour_degree(g, x));
        CHECK(static_cast<int>(cn.reps.size()) == colour_degree(g, x));

        // forward-anchored members: the predecessor is a representative and
        // its own backward edge colour differs from its edge to the centre
        std::vector<Vertex> fwd_all = cn.fwd_anchored;
        fwd_all.insert(fwd_all.end(), cn.dual_anchored.begin(), cn.dual_anchored.end());
        std::set<Vertex> reps(cn.reps.begin(), cn.reps.end());
        for (Vertex v : fwd_all) {
            int ci = -1;
            for (int i = 0; i < fam.cycle_count(); ++i)
                if (fam.cycles[i].contains(v)) ci = i;
            REQUIRE(ci >= 0);
            Vertex prev = fam.cycles[ci].pred(v);
            Vertex prev2 = fam.cycles[ci].pred(prev);
            CHECK(reps.count(prev) == 1);
            CHECK(g.has_edge(x, prev));
            CHECK(g.colour(prev, prev2) != g.colour(x, prev));
        }
        // the working colours: sentinel only on dual-anchored vertices
        for (Vertex v : cn.dual_anchored)
            CHECK(cn.vertex_colour.at(v) == cn.sentinel_colour);
        CHECK(cn.sentinel_colour > g.max_colour_id());
    }
    CHECK(checked >= 10);
}

TEST_CASE("augmentation covers one more vertex and stays valid") {
    auto k4 = rainbow_complete(4);
    auto tri = augment_two_factor(k4, CycleFamily{}, 0);
    REQUIRE(tri.has_value());
    CHECK(tri->vertex_count() == 3);
    CHECK(tri->covers(0));
    CHECK_FALSE(family_issue(k4, *tri).has_value());

    Rng rng(11);
    int augmented = 0;
    for (int trial = 0; trial < 50; ++trial) {
        int n = 6 + static_cast<int>(rng.below(4));
        auto g = random_complete(n, 2, rng.next());
        CycleFamily fam;
        Vertex x;
        if (!family_missing_one(g, &fam, &x)) continue;
        auto next = augment_two_factor(g, fam, x);
        if (!next) continue;
        ++augmented;
        CHECK_FALSE(family_issue(g, *next).has_value());
        CHECK(next->covers(x));
        CHECK(next->vertex_count() >= fam.vertex_count() + 1);
        for (Vertex v : fam.vertices()) CHECK(next->covers(v));
    }
    CHECK(augmented >= 20);
}

TEST_CASE("two-factor finder on easy and sharp instances") {
    auto k6 = rainbow_complete(6);
    auto r = find_pc_two_factor(k6, false);
    REQUIRE(r.ok());
    CHECK_FALSE(two_factor_issue(k6, *r.family).has_value());

    auto sharp = gen_extremal(9, 5);
    auto rs = find_pc_two_factor(sharp, true);
    CHECK_FALSE(rs.ok());
    CHECK_FALSE(rs.uncovered.empty());
    CHECK(oracle_pc_two_factor(sharp).status == OracleStatus::None);
}

TEST_CASE("two-factor finder matches the oracle above the threshold") {
    Rng rng(17);
    int tried = 0;
    while (tried < 80) {
        int n = 5 + static_cast<int>(rng.below(5));
        int need = (2 * n + 2) / 3;
        auto g = random_complete(n, std::max(1, (n - 1) / need), rng.next());
        if (min_colour_degree(g) < need) continue;
        ++tried;
        CHECK(oracle_pc_two_factor(g).status == OracleStatus::Found);
        auto r = find_pc_two_factor(g, true);
        REQUIRE(r.ok());
        CHECK_FALSE(two_factor_issue(g, *r.family).has_value());
    }
}

TEST_CASE("endpoint classification identities") {
    auto k8 = rainbow_complete(8);
    PCPath p{{0, 1, 2, 3, 4, 5, 6, 7}};
    for (int k : {1, 2, 3, 4}) {
        auto ec = classify_endpoints(k8, p, k);
        CHECK(ec.head.fwd_attach.size() + ec.head.bwd_attach.size() ==
              ec.head.anchors.size());
        CHECK(ec.tail.fwd_attach.size() + ec.tail.bwd_attach.size() ==
              ec.tail.anchors.size());
        CHECK(ec.guard == (k + 1) / 2);
        // junction sets contain their own end vertex and exclude the other
        CHECK(std::count(ec.head.junction.begin(), ec.head.junction.end(), 0) == 1);
        CHECK(std::count(ec.head.junction.begin(), ec.head.junction.end(), 7) == 0);
        CHECK(std::count(ec.tail.junction.begin(), ec.tail.junction.end(), 7) == 1);
        for (Vertex v : ec.head.anchors) {
            int i = 0;
            while (p.verts[i] != v) ++i;
            CHECK(i >= ec.guard);
            CHECK(i <= 7 - ec.guard);
        }
    }

    // a single edge: no usable anchor once the ends are stripped
    EdgeColouredGraph e2(2);
    e2.add_edge(0, 1, 0);
    auto ec = classify_endpoints(e2, PCPath{{0, 1}}, 2);
    CHECK(ec.head.anchors.empty());
    CHECK(ec.tail.anchors.empty());
    CHECK_THROWS_AS(classify_endpoints(e2, PCPath{{0}}, 2), std::invalid_argument);
}

TEST_CASE("path ends only appear in the one admissible attach set") {
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 8 + static_cast<int>(rng.below(5));
        auto g = random_complete(n, 3, rng.next());
        auto p = grow_path(g, static_cast<Vertex>(rng.below(n)), n - 2);
        if (p.size() < 4) continue;
        for (int k : {1, 2, 3}) {
            auto ec = classify_endpoints(g, p, k);
            // the tail vertex may sit in the head's forward set but never the
            // backward one, and symmetrically for the head vertex
            CHECK(std::count(ec.head.bwd_attach.begin(), ec.head.bwd_attach.end(),
                             p.tail()) == 0);
            CHECK(std::count(ec.tail.fwd_attach.begin(), ec.tail.fwd_attach.end(),
                             p.head()) == 0);
        }
    }
}

TEST_CASE("junction join graph follows the attach rules") {
    Rng rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 8 + static_cast<int>(rng.below(5));
        auto g = random_complete(n, 3, rng.next());
        auto p = grow_path(g, 0, n - 1);
        if (p.size() < 6) continue;
        int k = 1 + static_cast<int>(rng.below(3));
        auto ec = classify_endpoints(g, p, k);
        auto f = endpoint_join_graph(ec, g, p);

        std::vector<int> pos(n, -1);
        for (int i = 0; i < p.size(); ++i) pos[p.verts[i]] = i;
        std::set<Vertex> dual(ec.head.dual_attach.begin(), ec.head.dual_attach.end());
        for (size_t i = 0; i < f.head_side.size(); ++i)
            for (size_t j = 0; j < f.tail_side.size(); ++j) {
                Vertex a = f.head_side[i], b = f.tail_side[j];
                if (!g.has_edge(a, b)) {
                    CHECK_FALSE(f.head_to_tail[i][j]);
                    CHECK_FALSE(f.tail_to_head[j][i]);
                } else if (dual.count(a)) {
                    CHECK(f.head_to_tail[i][j]);  // unconditional out-edges
                }
            }

        // every two-cycle normalizes to roles whose colour conditions hold
        for (auto [u, w] : f.two_cycles()) {
            ColourId e = g.colour(u, w);
            auto role_ok = [&](const EndpointClassification::End& end, Vertex v,
                               Vertex other) {
                if (v == end.end_vertex) {
                    int i = pos[v];
                    Vertex along = i == 0 ? p.verts[1] : p.verts[p.size() - 2];
                    return g.colour(v, other) != g.colour(v, along);
                }
                int i = pos[v];
                bool fwd_ok = g.colour(v, other) != g.colour(v, p.verts[i + 1]);
                bool bwd_ok = g.colour(v, other) != g.colour(v, p.verts[i - 1]);
                return fwd_ok || bwd_ok;
            };
            CHECK(role_ok(ec.head, u, w));
            CHECK(role_ok(ec.tail, w, u));
            CHECK(e == g.colour(w, u));
        }
    }
}

TEST_CASE("path splits produce verified cycle families") {
    // hand-built: path 0..5 on seven colours where both ends re-attach
    // u = 2 with pred 1 anchored to the head, w = 1 with succ 2 anchored to
    // the tail is hard to arrange by hand reliably, so instead fuzz the
    // driver path and check every split the join graph admits
    Rng rng(53);
    int splits = 0;
    for (int trial = 0; trial < 60 && splits < 25; ++trial) {
        int n = 9 + static_cast<int>(rng.below(4));
        auto g = random_complete(n, 3, rng.next());
        auto p = grow_path(g, 0, n);
        if (p.size() < 8) continue;
        int k = 1 + static_cast<int>(rng.below(4));
        auto ec = classify_endpoints(g, p, k);
        auto f = endpoint_join_graph(ec, g, p);
        std::vector<int> pos(n, -1);
        for (int i = 0; i < p.size(); ++i) pos[p.verts[i]] = i;
        std::set<Vertex> head_dual(ec.head.dual_attach.begin(), ec.head.dual_attach.end());
        std::set<Vertex> head_fwd(ec.head.fwd_attach.begin(), ec.head.fwd_attach.end());
        std::set<Vertex> tail_dual(ec.tail.dual_attach.begin(), ec.tail.dual_attach.end());
        std::set<Vertex> tail_fwd(ec.tail.fwd_attach.begin(), ec.tail.fwd_attach.end());
        auto role = [&](Vertex v, Vertex other, bool head) {
            const auto& end = head ? ec.head : ec.tail;
            if (v == end.end_vertex) return EndRole::PathEnd;
            const auto& dual = head ? head_dual : tail_dual;
            const auto& fwd = head ? head_fwd : tail_fwd;
            if (dual.count(v))
                return g.colour(v, other) != g.colour(v, p.verts[pos[v] + 1])
                           ? EndRole::FwdAttach
                           : EndRole::BwdAttach;
            return fwd.count(v) ? EndRole::FwdAttach : EndRole::BwdAttach;
        };
        for (auto [u, w] : f.two_cycles()) {
            auto res = split_path_to_cycles(g, p, k, u, w, role(u, w, true),
                                            role(w, u, false));
            if (auto* fam = std::get_if<CycleFamily>(&res)) {
                ++splits;
                CHECK_FALSE(family_issue(g, *fam).has_value());
                CHECK(fam->vertex_count() == p.size());
                for (const auto& c : fam->cycles) {
                    CHECK(2 * c.size() >= k);
                    for (Vertex v : c.verts) CHECK(pos[v] >= 0);
                }
            }
        }
    }
    CHECK(splits >= 25);
}

TEST_CASE("split rejects a junction pair that breaks a colour condition") {
    // path 0-1-2-3 all distinct colours, but 0-2 shares the colour of 2-3,
    // so re-closing through 2 clashes
    EdgeColouredGraph g(4);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 3, 2);
    g.add_edge(0, 2, 2);
    PCPath p{{0, 1, 2, 3}};
    auto res = split_path_to_cycles(g, p, 1, 3, 0, EndRole::FwdAttach, EndRole::BwdAttach);
    REQUIRE(std::holds_alternative<SplitError>(res));
    auto res0 =
        split_path_to_cycles(g, p, 1, 0, 3, EndRole::PathEnd, EndRole::PathEnd);
    REQUIRE(std::holds_alternative<SplitError>(res0));
}

TEST_CASE("minimum-length two-factor") {
    auto k9 = rainbow_complete(9);
    auto r = find_pc_two_factor_min_length(k9, 4);
    REQUIRE(r.ok());
    CHECK_FALSE(two_factor_issue(k9, *r.family).has_value());
    for (const auto& c : r.family->cycles) CHECK(2 * c.size() >= 4);

    auto r1 = find_pc_two_factor_min_length(k9, 1);
    REQUIRE(r1.ok());
    CHECK_FALSE(two_factor_issue(k9, *r1.family).has_value());

    auto sharp = gen_extremal(9, 5);
    auto rs = find_pc_two_factor_min_length(sharp, 2);
    CHECK_FALSE(rs.ok());
    CHECK_FALSE(one_path_cycle_issue(sharp, rs.stuck).has_value());

    EdgeColouredGraph mono(5);
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v) mono.add_edge(u, v, 0);
    CHECK_FALSE(find_pc_two_factor_min_length(mono, 1).ok());
}

TEST_CASE("path cover cuts each cycle once") {
    auto k9 = rainbow_complete(9);
    auto r = path_cover(k9, 4);
    REQUIRE(r.ok());
    CHECK(static_cast<int>(r.paths->size()) <= 2 * 9 / 4);
    std::set<Vertex> seen;
    for (const auto& p : *r.paths) {
        CHECK_FALSE(pc_path_issue(k9, p.verts).has_value());
        for (Vertex v : p.verts) CHECK(seen.insert(v).second);
    }
    CHECK(seen.size() == 9);

    // rainbow cycle graph: close it, cut it, one path
    int n = 7;
    EdgeColouredGraph ring(n);
    for (int i = 0; i < n; ++i) ring.add_edge(i, (i + 1) % n, i);
    auto rc = path_cover(ring, n);
    REQUIRE(rc.ok());
    CHECK(rc.paths->size() <= 2);
    int total = 0;
    for (const auto& p : *rc.paths) total += p.size();
    CHECK(total == n);
}

TEST_CASE("minimum-length finder on larger capped instances") {
    Rng rng(71);
    int tried = 0, succeeded = 0;
    for (int trial = 0; trial < 30; ++trial) {
        int n = 15 + static_cast<int>(rng.below(26));
        int k = 1 + static_cast<int>(rng.below(5));
        int need = (2 * n + 2) / 3 + k;
        int cap = n - 1 - need;
        if (cap < 1) continue;
        auto g = random_complete(n, cap, rng.next());
        if (delta1(g) < need) continue;
        ++tried;
        auto r = find_pc_two_factor_min_length(g, k);
        if (!r.ok()) continue;
        ++succeeded;
        CHECK_FALSE(two_factor_issue(g, *r.family).has_value());
        for (const auto& c : r.family->cycles) CHECK(2 * c.size() >= k);
        auto pc = path_cover(g, k);
        REQUIRE(pc.ok());
        CHECK(static_cast<int>(pc.paths->size()) <= 2 * n / k);
    }
    CHECK(tried >= 10);
    CHECK(succeeded == tried);
}
