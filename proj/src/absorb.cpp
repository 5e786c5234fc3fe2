#include "pcc/absorb.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pcc/rng.hpp"

namespace pcc {

namespace {

bool distinct4(const std::array<Vertex, 4>& p) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] == p[j]) return false;
    return true;
}

bool is_pc_four_path(const EdgeColouredGraph& g, const std::array<Vertex, 4>& p) {
    if (!distinct4(p)) return false;
    if (!g.has_edge(p[0], p[1]) || !g.has_edge(p[1], p[2]) || !g.has_edge(p[2], p[3]))
        return false;
    return g.colour(p[0], p[1]) != g.colour(p[1], p[2]) &&
           g.colour(p[1], p[2]) != g.colour(p[2], p[3]);
}

}  // namespace

bool is_absorbing_for_vertex(const EdgeColouredGraph& g, const std::array<Vertex, 4>& p,
                             Vertex x) {
    g.check_vertex(x);
    for (Vertex v : p) g.check_vertex(v);
    if (!is_pc_four_path(g, p)) return false;
    if (x == p[0] || x == p[1] || x == p[2] || x == p[3]) return false;
    if (!g.has_edge(p[1], x) || !g.has_edge(x, p[2])) return false;
    return g.colour(p[0], p[1]) != g.colour(p[1], x) &&
           g.colour(p[1], x) != g.colour(x, p[2]) &&
           g.colour(x, p[2]) != g.colour(p[2], p[3]);
}

bool is_absorbing_for_edges(const EdgeColouredGraph& g, const std::array<Vertex, 4>& p,
                            Vertex x1, Vertex x2, Vertex y1, Vertex y2) {
    for (Vertex v : {x1, x2, y1, y2}) g.check_vertex(v);
    for (Vertex v : p) g.check_vertex(v);
    if (!is_pc_four_path(g, p)) return false;
    for (Vertex v : p)
        if (v == x1 || v == x2 || v == y1 || v == y2) return false;
    if (!g.has_edge(x1, x2) || !g.has_edge(y1, y2)) return false;
    if (!g.has_edge(p[1], x1) || !g.has_edge(y2, p[2])) return false;
    return g.colour(p[0], p[1]) != g.colour(p[1], x1) &&
           g.colour(p[1], x1) != g.colour(x1, x2) &&
           g.colour(y1, y2) != g.colour(y2, p[2]) &&
           g.colour(y2, p[2]) != g.colour(p[2], p[3]);
}

namespace {

// The choice chain behind both enumerations: the inner pair (z2, z3) first,
// then the outer vertices. Exhaustive: every absorbing path appears once.
template <typename Cb>
void scan_vertex_absorbers(const EdgeColouredGraph& g, Vertex x, Cb&& cb) {
    for (Vertex z2 : g.neighbours(x)) {
        for (Vertex z3 : g.neighbours(x)) {
            if (z3 == z2 || !g.has_edge(z2, z3)) continue;
            if (g.colour(x, z2) == g.colour(x, z3)) continue;
            ColourId mid = g.colour(z2, z3);
            for (Vertex z1 : g.neighbours(z2)) {
                if (z1 == x || z1 == z3) continue;
                ColourId c12 = g.colour(z1, z2);
                if (c12 == mid || c12 == g.colour(z2, x)) continue;
                for (Vertex z4 : g.neighbours(z3)) {
                    if (z4 == x || z4 == z1 || z4 == z2) continue;
                    ColourId c34 = g.colour(z3, z4);
                    if (c34 == mid || c34 == g.colour(x, z3)) continue;
                    if (cb(std::array<Vertex, 4>{z1, z2, z3, z4})) return;
                }
            }
        }
    }
}

template <typename Cb>
void scan_edge_absorbers(const EdgeColouredGraph& g, Vertex x1, Vertex x2, Vertex y1,
                         Vertex y2, Cb&& cb) {
    auto hits_target = [&](Vertex v) { return v == x1 || v == x2 || v == y1 || v == y2; };
    for (Vertex z2 : g.neighbours(x1)) {
        if (hits_target(z2)) continue;
        if (g.colour(x1, z2) == g.colour(x1, x2)) continue;
        for (Vertex z3 : g.neighbours(y2)) {
            if (hits_target(z3) || z3 == z2 || !g.has_edge(z2, z3)) continue;
            if (g.colour(y2, z3) == g.colour(y1, y2)) continue;
            ColourId mid = g.colour(z2, z3);
            for (Vertex z1 : g.neighbours(z2)) {
                if (hits_target(z1) || z1 == z3) continue;
                ColourId c12 = g.colour(z1, z2);
                if (c12 == mid || c12 == g.colour(z2, x1)) continue;
                for (Vertex z4 : g.neighbours(z3)) {
                    if (hits_target(z4) || z4 == z1 || z4 == z2) continue;
                    ColourId c34 = g.colour(z3, z4);
                    if (c34 == mid || c34 == g.colour(y2, z3)) continue;
                    if (cb(std::array<Vertex, 4>{z1, z2, z3, z4})) return;
                }
            }
        }
    }
}

}  // namespace

std::vector<AbsorbingPath> enumerate_absorbers_vertex(const EdgeColouredGraph& g, Vertex x,
                                                      std::size_t limit) {
    if (limit < 1) throw std::invalid_argument("limit must be >= 1");
    g.check_vertex(x);
    std::vector<AbsorbingPath> out;
    scan_vertex_absorbers(g, x, [&](const std::array<Vertex, 4>& p) {
        out.push_back({p, AbsorbTarget::for_vertex(x)});
        return out.size() >= limit;
    });
    return out;
}

std::vector<AbsorbingPath> enumerate_absorbers_edges(const EdgeColouredGraph& g, Vertex x1,
                                                     Vertex x2, Vertex y1, Vertex y2,
                                                     std::size_t limit) {
    if (limit < 1) throw std::invalid_argument("limit must be >= 1");
    for (Vertex v : {x1, x2, y1, y2}) g.check_vertex(v);
    if (!g.has_edge(x1, x2) || !g.has_edge(y1, y2))
        throw std::invalid_argument("edge-pair target must consist of edges");
    std::set<Vertex> vs{x1, x2, y1, y2};
    if (vs.size() != 4) throw std::invalid_argument("edge-pair target vertices must be distinct");
    std::vector<AbsorbingPath> out;
    scan_edge_absorbers(g, x1, x2, y1, y2, [&](const std::array<Vertex, 4>& p) {
        out.push_back({p, AbsorbTarget::for_edges(x1, x2, y1, y2)});
        return out.size() >= limit;
    });
    return out;
}

bool AbsorberFamily::touches(Vertex v) const {
    for (const auto& p : paths)
        for (Vertex u : p)
            if (u == v) return true;
    return false;
}

std::vector<Vertex> AbsorberFamily::vertices() const {
    std::vector<Vertex> out;
    for (const auto& p : paths) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::string AbsorberFamily::to_text() const {
    std::ostringstream out;
    for (const auto& p : paths)
        out << "path " << p[0] << ' ' << p[1] << ' ' << p[2] << ' ' << p[3] << '\n';
    for (const auto& [v, c] : vertex_coverage) out << "cover vertex " << v << ' ' << c << '\n';
    for (const auto& [t, c] : pair_coverage)
        out << "cover pair " << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << t[3] << ' ' << c
            << '\n';
    return out.str();
}

namespace {

void recount_coverage(const EdgeColouredGraph& g, AbsorberFamily& fam) {
    fam.vertex_coverage.clear();
    fam.pair_coverage.clear();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int c = 0;
        for (const auto& p : fam.paths)
            if (is_absorbing_for_vertex(g, p, v)) ++c;
        fam.vertex_coverage[v] = c;
    }
    for (const auto& t : fam.params.pair_targets) {
        int c = 0;
        for (const auto& p : fam.paths)
            if (is_absorbing_for_edges(g, p, t[0], t[1], t[2], t[3])) ++c;
        fam.pair_coverage[t] = c;
    }
}

FamilyBuildOutcome greedy_family(const EdgeColouredGraph& g,
                                 const AbsorberFamilyParams& params) {
    int n = g.vertex_count();
    AbsorberFamily fam;
    fam.params = params;
    for (Vertex v = 0; v < n; ++v) fam.vertex_coverage[v] = 0;
    for (const auto& t : params.pair_targets) fam.pair_coverage[t] = 0;
    std::vector<char> used(n, 0);

    auto disjoint_from_used = [&](const std::array<Vertex, 4>& p) {
        return !used[p[0]] && !used[p[1]] && !used[p[2]] && !used[p[3]];
    };
    auto add_path = [&](const std::array<Vertex, 4>& p) {
        fam.paths.push_back(p);
        for (Vertex v : p) used[v] = 1;
        for (auto& [v, c] : fam.vertex_coverage)
            if (is_absorbing_for_vertex(g, p, v)) ++c;
        for (auto& [t, c] : fam.pair_coverage)
            if (is_absorbing_for_edges(g, p, t[0], t[1], t[2], t[3])) ++c;
    };

    for (;;) {
        // least-covered tracked target, vertices before pairs on ties
        int best_cov = -1;
        bool best_is_vertex = true;
        Vertex best_vertex = -1;
        std::array<Vertex, 4> best_pair{};
        for (const auto& [v, c] : fam.vertex_coverage)
            if (best_cov < 0 || c < best_cov) {
                best_cov = c;
                best_is_vertex = true;
                best_vertex = v;
            }
        for (const auto& [t, c] : fam.pair_coverage)
            if (best_cov < 0 || c < best_cov) {
                best_cov = c;
                best_is_vertex = false;
                best_pair = t;
            }
        if (params.exact_size > 0) {
            // size-driven build: serve the least-covered target until the
            // family has exactly the requested number of paths
            if (static_cast<int>(fam.paths.size()) == params.exact_size) {
                recount_coverage(g, fam);
                return {std::move(fam), {}, ""};
            }
        } else if (best_cov >= params.coverage_target) {
            recount_coverage(g, fam);
            return {std::move(fam), {}, ""};
        } else if (params.size_cap > 0 &&
                   static_cast<int>(fam.paths.size()) >= params.size_cap) {
            FamilyBuildOutcome out;
            out.reason = "size cap reached before coverage";
            for (const auto& [v, c] : fam.vertex_coverage)
                if (c < params.coverage_target)
                    out.uncovered.push_back("vertex " + std::to_string(v));
            return out;
        }
        std::optional<std::array<Vertex, 4>> chosen;
        if (best_is_vertex) {
            scan_vertex_absorbers(g, best_vertex, [&](const std::array<Vertex, 4>& p) {
                if (!disjoint_from_used(p)) return false;
                chosen = p;
                return true;
            });
        } else {
            scan_edge_absorbers(g, best_pair[0], best_pair[1], best_pair[2], best_pair[3],
                                [&](const std::array<Vertex, 4>& p) {
                                    if (!disjoint_from_used(p)) return false;
                                    chosen = p;
                                    return true;
                                });
        }
        if (!chosen) {
            FamilyBuildOutcome out;
            out.reason = std::string("no available absorber for the least-covered target");
            for (const auto& [v, c] : fam.vertex_coverage)
                if (c < params.coverage_target)
                    out.uncovered.push_back("vertex " + std::to_string(v));
            for (const auto& [t, c] : fam.pair_coverage)
                if (c < params.coverage_target)
                    out.uncovered.push_back("pair " + std::to_string(t[0]) + "," +
                                            std::to_string(t[1]) + ";" + std::to_string(t[2]) +
                                            "," + std::to_string(t[3]));
            return out;
        }
        add_path(*chosen);
    }
}

FamilyBuildOutcome randomized_family(const EdgeColouredGraph& g,
                                     const AbsorberFamilyParams& params) {
    int n = g.vertex_count();
    if (n < 5) return {std::nullopt, {}, "graph too small for sampling"};
    double p = params.gamma /
               (128.0 * (n - 1) * static_cast<double>(n - 2) * static_cast<double>(n - 3));
    Rng rng(params.seed);
    std::vector<std::array<Vertex, 4>> sample;
    std::array<Vertex, 4> t{};
    for (t[0] = 0; t[0] < n; ++t[0])
        for (t[1] = 0; t[1] < n; ++t[1])
            for (t[2] = 0; t[2] < n; ++t[2])
                for (t[3] = 0; t[3] < n; ++t[3]) {
                    if (!distinct4(t)) continue;
                    if (rng.unit() < p) sample.push_back(t);
                }
    std::vector<char> alive(sample.size(), 1);
    auto intersects = [](const std::array<Vertex, 4>& a, const std::array<Vertex, 4>& b) {
        for (Vertex u : a)
            for (Vertex v : b)
                if (u == v) return true;
        return false;
    };
    for (size_t i = 0; i < sample.size(); ++i)
        for (size_t j = i + 1; j < sample.size(); ++j)
            if (alive[i] && alive[j] && intersects(sample[i], sample[j])) alive[j] = 0;
    AbsorberFamily fam;
    fam.params = params;
    for (size_t i = 0; i < sample.size(); ++i)
        if (alive[i] && is_pc_four_path(g, sample[i])) fam.paths.push_back(sample[i]);
    recount_coverage(g, fam);
    FamilyBuildOutcome out;
    for (const auto& [v, c] : fam.vertex_coverage)
        if (c < params.coverage_target) out.uncovered.push_back("vertex " + std::to_string(v));
    for (const auto& [tt, c] : fam.pair_coverage)
        if (c < params.coverage_target)
            out.uncovered.push_back("pair " + std::to_string(tt[0]) + "," + std::to_string(tt[1]) +
                                    ";" + std::to_string(tt[2]) + "," + std::to_string(tt[3]));
    if (!out.uncovered.empty()) {
        out.reason = "sampled family misses the coverage target";
        return out;
    }
    out.family = std::move(fam);
    return out;
}

}  // namespace

FamilyBuildOutcome build_absorber_family(const EdgeColouredGraph& g,
                                         const AbsorberFamilyParams& params) {
    if (params.coverage_target < 1)
        throw std::invalid_argument("coverage target must be >= 1");
    if (params.mode == AbsorberFamilyParams::Mode::Greedy) return greedy_family(g, params);
    return randomized_family(g, params);
}

JoinOutcome join_edges(const EdgeColouredGraph& g, const std::vector<char>& forbidden,
                       Vertex x1, Vertex x2, Vertex y1, Vertex y2) {
    for (Vertex v : {x1, x2, y1, y2}) g.check_vertex(v);
    if (!g.has_edge(x1, x2) || !g.has_edge(y1, y2))
        throw std::invalid_argument("join targets must be edges");
    if (x2 == y2) throw std::invalid_argument("join requires x2 != y2");
    if (static_cast<int>(forbidden.size()) != g.vertex_count())
        throw std::invalid_argument("forbidden mask size mismatch");

    auto excluded = [&](Vertex v) {
        return forbidden[v] || v == x1 || v == x2 || v == y1 || v == y2;
    };
    std::vector<Vertex> left, right;
    for (Vertex v : g.neighbours(x2))
        if (!excluded(v) && g.colour(v, x2) != g.colour(x1, x2)) left.push_back(v);
    for (Vertex v : g.neighbours(y1))
        if (!excluded(v) && g.colour(v, y1) != g.colour(y1, y2)) right.push_back(v);

    JoinOutcome out;
    for (Vertex z1 : left)
        for (Vertex z2 : right) {
            if (z1 == z2 || !g.has_edge(z1, z2)) continue;
            ColourId e = g.colour(z1, z2);
            if (e == g.colour(z1, x2) || e == g.colour(z2, y1)) continue;
            ++out.two_cycle_count;
            if (!out.found) {
                out.found = true;
                out.z1 = z1;
                out.z2 = z2;
            }
        }
    if (!out.found) out.reason = "no connector pair joins the two edges";
    return out;
}

AbsorbingCycleOutcome build_absorbing_cycle(const EdgeColouredGraph& g,
                                            const AbsorberFamily& family) {
    AbsorbingCycleOutcome out;
    int m = static_cast<int>(family.paths.size());
    if (m == 0) {
        out.reason = "empty absorber family";
        return out;
    }
    int n = g.vertex_count();
    std::vector<char> base(n, 0);
    for (const auto& p : family.paths)
        for (Vertex v : p) base[v] = 1;

    std::vector<std::pair<Vertex, Vertex>> connectors;
    for (int j = 0; j < m; ++j) {
        const auto& cur = family.paths[j];
        const auto& next = family.paths[(j + 1) % m];
        std::vector<char> forbidden = base;
        for (const auto& [a, b] : connectors) {
            forbidden[a] = 1;
            forbidden[b] = 1;
        }
        forbidden[cur[2]] = 0;
        forbidden[cur[3]] = 0;
        forbidden[next[0]] = 0;
        forbidden[next[1]] = 0;
        JoinOutcome join = join_edges(g, forbidden, cur[2], cur[3], next[0], next[1]);
        if (!join.found) {
            out.stuck_index = j;
            out.reason = "join " + std::to_string(j) + ": " + join.reason;
            return out;
        }
        connectors.emplace_back(join.z1, join.z2);
    }

    std::vector<Vertex> verts;
    for (int j = 0; j < m; ++j) {
        verts.insert(verts.end(), family.paths[j].begin(), family.paths[j].end());
        verts.push_back(connectors[j].first);
        verts.push_back(connectors[j].second);
    }
    OrientedCycle cycle{verts};
    if (auto issue = cycle_issue(g, cycle)) {
        out.reason = "assembled cycle invalid: " + *issue;
        return out;
    }
    out.cycle = AbsorbingCycle{cycle, family, connectors};
    return out;
}

namespace {

struct Piece {
    std::vector<Vertex> verts;  // single vertex or a path on >= 4 vertices
    bool is_vertex() const { return verts.size() == 1; }
};

// orientation codes per (piece, absorber): 0 none, 1 as given, 2 reversed
int absorb_option(const EdgeColouredGraph& g, const std::array<Vertex, 4>& q,
                  const Piece& piece) {
    if (piece.is_vertex())
        return is_absorbing_for_vertex(g, q, piece.verts[0]) ? 1 : 0;
    const auto& v = piece.verts;
    size_t L = v.size();
    if (is_absorbing_for_edges(g, q, v[0], v[1], v[L - 2], v[L - 1])) return 1;
    if (is_absorbing_for_edges(g, q, v[L - 1], v[L - 2], v[1], v[0])) return 2;
    return 0;
}

bool kuhn_match(const std::vector<std::vector<int>>& option, int pieces, int absorbers,
                std::vector<int>& match_of_piece) {
    std::vector<int> match_of_absorber(absorbers, -1);
    match_of_piece.assign(pieces, -1);
    std::vector<char> visited;
    auto try_augment = [&](auto&& self, int i) -> bool {
        for (int j = 0; j < absorbers; ++j) {
            if (!option[i][j] || visited[j]) continue;
            visited[j] = 1;
            if (match_of_absorber[j] < 0 || self(self, match_of_absorber[j])) {
                match_of_absorber[j] = i;
                match_of_piece[i] = j;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < pieces; ++i) {
        visited.assign(absorbers, 0);
        if (!try_augment(try_augment, i)) return false;
    }
    return true;
}

}  // namespace

AbsorbOutcome absorb_paths(const EdgeColouredGraph& g, const AbsorbingCycle& ac,
                           const std::vector<PCPath>& paths) {
    AbsorbOutcome out;
    std::set<Vertex> taken(ac.cycle.verts.begin(), ac.cycle.verts.end());
    for (const auto& p : paths) {
        if (auto issue = pc_path_issue(g, p.verts)) {
            out.reason = "input path invalid: " + *issue;
            return out;
        }
        for (Vertex v : p.verts)
            if (!taken.insert(v).second) {
                out.reason = "vertex " + std::to_string(v) +
                             " is on the cycle or repeated across paths";
                return out;
            }
    }
    if (paths.empty()) {
        out.cycle = ac.cycle;
        return out;
    }

    std::vector<Piece> pieces;
    for (const auto& p : paths) {
        if (p.size() <= 3)
            for (Vertex v : p.verts) pieces.push_back({{v}});
        else
            pieces.push_back({p.verts});
    }
    int np = static_cast<int>(pieces.size());
    int na = static_cast<int>(ac.family.paths.size());
    if (np > na) {
        out.reason = "family has " + std::to_string(na) + " absorbers for " +
                     std::to_string(np) + " pieces";
        return out;
    }
    std::vector<std::vector<int>> option(np, std::vector<int>(na, 0));
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < na; ++j)
            option[i][j] = absorb_option(g, ac.family.paths[j], pieces[i]);
    std::vector<int> match_of_piece;
    if (!kuhn_match(option, np, na, match_of_piece)) {
        out.reason = "no assignment of pieces to absorbers";
        return out;
    }

    std::vector<int> piece_of_absorber(na, -1);
    for (int i = 0; i < np; ++i) piece_of_absorber[match_of_piece[i]] = i;

    // positions of each family path on the cycle (contiguous runs by build)
    const auto& cv = ac.cycle.verts;
    int L = static_cast<int>(cv.size());
    std::vector<int> start_of(na, -1);
    for (int j = 0; j < na; ++j) {
        const auto& q = ac.family.paths[j];
        for (int s = 0; s < L; ++s)
            if (cv[s] == q[0] && cv[(s + 1) % L] == q[1] && cv[(s + 2) % L] == q[2] &&
                cv[(s + 3) % L] == q[3]) {
                start_of[j] = s;
                break;
            }
        if (start_of[j] < 0) {
            out.reason = "family path " + std::to_string(j) + " not contiguous on the cycle";
            return out;
        }
    }
    std::vector<int> insert_after(L, -1);  // cycle position of q[1] -> absorber id
    for (int j = 0; j < na; ++j)
        if (piece_of_absorber[j] >= 0) insert_after[(start_of[j] + 1) % L] = j;

    std::vector<Vertex> result;
    for (int s = 0; s < L; ++s) {
        result.push_back(cv[s]);
        int j = insert_after[s];
        if (j < 0) continue;
        const Piece& piece = pieces[piece_of_absorber[j]];
        std::vector<Vertex> seq = piece.verts;
        if (option[piece_of_absorber[j]][j] == 2) std::reverse(seq.begin(), seq.end());
        result.insert(result.end(), seq.begin(), seq.end());
    }
    OrientedCycle final_cycle{result};
    if (auto issue = cycle_issue(g, final_cycle)) {
        out.reason = "spliced cycle invalid: " + *issue;
        return out;
    }
    out.cycle = final_cycle;
    return out;
}

}  // namespace pcc
