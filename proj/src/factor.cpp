#include "pcc/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "pcc/oracle.hpp"

namespace pcc {

namespace {

struct FamilyIndex {
    std::vector<int> cycle_of, pos_of;
    const CycleFamily* fam;

    FamilyIndex(const CycleFamily& f, int n) : cycle_of(n, -1), pos_of(n, -1), fam(&f) {
        for (size_t ci = 0; ci < f.cycles.size(); ++ci) {
            const auto& vs = f.cycles[ci].verts;
            for (size_t i = 0; i < vs.size(); ++i) {
                cycle_of[vs[i]] = static_cast<int>(ci);
                pos_of[vs[i]] = static_cast<int>(i);
            }
        }
    }
    bool covered(Vertex v) const { return cycle_of[v] >= 0; }
    const OrientedCycle& cycle(Vertex v) const { return fam->cycles[cycle_of[v]]; }
    Vertex succ(Vertex v) const {
        const auto& vs = cycle(v).verts;
        return vs[(pos_of[v] + 1) % vs.size()];
    }
    Vertex pred(Vertex v) const {
        const auto& vs = cycle(v).verts;
        return vs[(pos_of[v] + vs.size() - 1) % vs.size()];
    }
};

// Inclusive walk from `from` to `to`; `forward` means along the stored
// orientation.
std::vector<Vertex> arc(const OrientedCycle& c, Vertex from, Vertex to, bool forward) {
    std::vector<Vertex> out;
    int L = c.size();
    int i = c.index_of(from);
    int j = c.index_of(to);
    int step = forward ? 1 : L - 1;
    for (int p = i;; p = (p + step) % L) {
        out.push_back(c.verts[p]);
        if (p == j) break;
    }
    return out;
}

}  // namespace

ClassifiedNeighbourhood colour_neighbourhood(const EdgeColouredGraph& g,
                                             const CycleFamily& family, Vertex x) {
    g.check_vertex(x);
    if (family.covers(x))
        throw std::invalid_argument("centre vertex " + std::to_string(x) +
                                    " is covered by the family");
    FamilyIndex idx(family, g.vertex_count());

    ClassifiedNeighbourhood cn;
    cn.centre = x;
    cn.sentinel_colour = g.max_colour_id() + 1;

    auto rank = [&](Vertex y) -> RepPick {
        if (!idx.covered(y)) return RepPick::Free;
        Vertex ys = idx.succ(y);
        ColourId cxy = g.colour(x, y);
        if (cxy == g.colour(y, ys)) return RepPick::FwdMatch;
        if (cxy == g.colour(y, idx.pred(y))) return RepPick::BwdMatch;
        if (!g.has_edge(x, ys)) return RepPick::NextMissing;
        if (cxy != g.colour(x, ys)) return RepPick::NextDiffers;
        return RepPick::NextEqual;
    };

    std::map<ColourId, std::vector<Vertex>> by_colour;
    for (Vertex y : g.neighbours(x)) by_colour[g.colour(x, y)].push_back(y);

    std::set<Vertex> fwd_marks, bwd_marks;
    for (const auto& [c, cands] : by_colour) {
        Vertex best = -1;
        RepPick best_pick = RepPick::NextEqual;
        for (Vertex y : cands) {  // ascending: neighbour lists are sorted
            RepPick p = rank(y);
            if (best < 0 || static_cast<int>(p) < static_cast<int>(best_pick)) {
                best = y;
                best_pick = p;
            }
        }
        cn.reps.push_back(best);
        cn.pick[best] = best_pick;
        if (best_pick == RepPick::Free)
            cn.free_reps.push_back(best);
        else if (best_pick == RepPick::BwdMatch)
            bwd_marks.insert(idx.pred(best));
        else
            fwd_marks.insert(idx.succ(best));
    }
    std::sort(cn.reps.begin(), cn.reps.end());
    std::sort(cn.free_reps.begin(), cn.free_reps.end());

    for (Vertex v : fwd_marks)
        (bwd_marks.count(v) ? cn.dual_anchored : cn.fwd_anchored).push_back(v);
    for (Vertex v : bwd_marks)
        if (!fwd_marks.count(v)) cn.bwd_anchored.push_back(v);

    for (Vertex v : cn.free_reps) cn.vertex_colour[v] = g.colour(x, v);
    for (Vertex v : cn.fwd_anchored) cn.vertex_colour[v] = g.colour(v, idx.succ(v));
    for (Vertex v : cn.bwd_anchored) cn.vertex_colour[v] = g.colour(v, idx.pred(v));
    for (Vertex v : cn.dual_anchored) cn.vertex_colour[v] = cn.sentinel_colour;
    return cn;
}

namespace {

enum class AnchorKind { Fwd, Bwd, Dual };

struct AnchorInfo {
    Vertex v;
    AnchorKind kind;
};

// Orientation under which an anchored vertex acts as forward-attached for an
// exchange along an edge of colour `e`: true means the stored orientation is
// reversed.
bool flip_for(const FamilyIndex& idx, const EdgeColouredGraph& g, const AnchorInfo& a,
              ColourId e) {
    switch (a.kind) {
        case AnchorKind::Fwd: return false;
        case AnchorKind::Bwd: return true;
        case AnchorKind::Dual: return g.colour(a.v, idx.succ(a.v)) == e;
    }
    return false;
}

}  // namespace

std::optional<CycleFamily> augment_two_factor(const EdgeColouredGraph& g,
                                              const CycleFamily& family, Vertex x) {
    ClassifiedNeighbourhood cn = colour_neighbourhood(g, family, x);
    FamilyIndex idx(family, g.vertex_count());

    auto label = [&](Vertex v) { return cn.vertex_colour.at(v); };
    auto usable = [&](Vertex a, Vertex b) {
        if (!g.has_edge(a, b)) return false;
        ColourId e = g.colour(a, b);
        return e != label(a) && e != label(b);
    };

    std::vector<Vertex> expected = family.vertices();
    expected.push_back(x);
    std::sort(expected.begin(), expected.end());

    auto accept = [&](CycleFamily cand,
                      const std::vector<Vertex>& extra) -> std::optional<CycleFamily> {
        std::vector<Vertex> want = expected;
        want.insert(want.end(), extra.begin(), extra.end());
        std::sort(want.begin(), want.end());
        if (cand.vertices() != want) return std::nullopt;
        if (family_issue(g, cand)) return std::nullopt;
        return cand.canonical();
    };

    // triangle through x over two free representatives
    for (size_t i = 0; i < cn.free_reps.size(); ++i)
        for (size_t j = i + 1; j < cn.free_reps.size(); ++j) {
            Vertex y = cn.free_reps[i], z = cn.free_reps[j];
            if (!usable(y, z)) continue;
            CycleFamily cand = family;
            cand.cycles.push_back(OrientedCycle{{x, y, z}});
            if (auto r = accept(std::move(cand), {y, z})) return r;
        }

    std::vector<AnchorInfo> anchored;
    for (Vertex v : cn.fwd_anchored) anchored.push_back({v, AnchorKind::Fwd});
    for (Vertex v : cn.bwd_anchored) anchored.push_back({v, AnchorKind::Bwd});
    for (Vertex v : cn.dual_anchored) anchored.push_back({v, AnchorKind::Dual});
    std::sort(anchored.begin(), anchored.end(),
              [](const AnchorInfo& a, const AnchorInfo& b) { return a.v < b.v; });

    auto family_without = [&](int ci, int cj = -1) {
        CycleFamily out;
        for (int i = 0; i < family.cycle_count(); ++i)
            if (i != ci && i != cj) out.cycles.push_back(family.cycles[i]);
        return out;
    };

    // insert x and a free representative into an anchored vertex's cycle
    for (Vertex y : cn.free_reps)
        for (const AnchorInfo& a : anchored) {
            if (!usable(y, a.v)) continue;
            ColourId e = g.colour(y, a.v);
            bool flip = flip_for(idx, g, a, e);
            const OrientedCycle& c = idx.cycle(a.v);
            Vertex stop = flip ? idx.succ(a.v) : idx.pred(a.v);
            std::vector<Vertex> seq{x, y};
            auto walk = arc(c, a.v, stop, !flip);
            seq.insert(seq.end(), walk.begin(), walk.end());
            CycleFamily cand = family_without(idx.cycle_of[a.v]);
            cand.cycles.push_back(OrientedCycle{seq});
            if (auto r = accept(std::move(cand), {y})) return r;
        }

    // merge two cycles through x
    for (size_t i = 0; i < anchored.size(); ++i)
        for (size_t j = i + 1; j < anchored.size(); ++j) {
            const AnchorInfo& a = anchored[i];
            const AnchorInfo& b = anchored[j];
            if (idx.cycle_of[a.v] == idx.cycle_of[b.v]) continue;
            if (!usable(a.v, b.v)) continue;
            ColourId e = g.colour(a.v, b.v);
            bool fa = flip_for(idx, g, a, e);
            bool fb = flip_for(idx, g, b, e);
            const OrientedCycle& ca = idx.cycle(a.v);
            const OrientedCycle& cb = idx.cycle(b.v);
            std::vector<Vertex> seq{x};
            Vertex a_pred = fa ? idx.succ(a.v) : idx.pred(a.v);
            auto walk1 = arc(ca, a_pred, a.v, fa);
            seq.insert(seq.end(), walk1.begin(), walk1.end());
            Vertex b_pred = fb ? idx.succ(b.v) : idx.pred(b.v);
            auto walk2 = arc(cb, b.v, b_pred, !fb);
            seq.insert(seq.end(), walk2.begin(), walk2.end());
            CycleFamily cand = family_without(idx.cycle_of[a.v], idx.cycle_of[b.v]);
            cand.cycles.push_back(OrientedCycle{seq});
            if (auto r = accept(std::move(cand), {})) return r;
        }

    // reroute a single cycle through x
    for (size_t i = 0; i < anchored.size(); ++i)
        for (size_t j = i + 1; j < anchored.size(); ++j) {
            AnchorInfo a = anchored[i];
            AnchorInfo b = anchored[j];
            if (idx.cycle_of[a.v] != idx.cycle_of[b.v]) continue;
            if (!usable(a.v, b.v)) continue;
            ColourId e = g.colour(a.v, b.v);
            const OrientedCycle& c = idx.cycle(a.v);
            // roles relative to the stored orientation
            auto role_fwd = [&](const AnchorInfo& t) {
                if (t.kind == AnchorKind::Fwd) return true;
                if (t.kind == AnchorKind::Bwd) return false;
                return g.colour(t.v, idx.succ(t.v)) != e;
            };
            bool a_fwd = role_fwd(a);
            bool b_fwd = role_fwd(b);
            int ci = idx.cycle_of[a.v];
            if (a_fwd && b_fwd) {
                // one cycle, both orientations are equivalent cases
                std::vector<Vertex> seq{x};
                auto walk1 = arc(c, idx.pred(a.v), b.v, false);
                seq.insert(seq.end(), walk1.begin(), walk1.end());
                auto walk2 = arc(c, a.v, idx.pred(b.v), true);
                seq.insert(seq.end(), walk2.begin(), walk2.end());
                CycleFamily cand = family_without(ci);
                cand.cycles.push_back(OrientedCycle{seq});
                if (auto r = accept(std::move(cand), {})) return r;
            } else if (!a_fwd && !b_fwd) {
                // both act backward: same exchange against the reversed cycle
                std::vector<Vertex> seq{x};
                auto walk1 = arc(c, idx.succ(a.v), b.v, true);
                seq.insert(seq.end(), walk1.begin(), walk1.end());
                auto walk2 = arc(c, a.v, idx.succ(b.v), false);
                seq.insert(seq.end(), walk2.begin(), walk2.end());
                CycleFamily cand = family_without(ci);
                cand.cycles.push_back(OrientedCycle{seq});
                if (auto r = accept(std::move(cand), {})) return r;
            } else {
                if (!a_fwd) std::swap(a, b);  // a forward-attached, b backward-attached
                if (idx.pred(a.v) == b.v) {
                    // the whole cycle re-enters through x
                    CycleFamily cand = family_without(ci);
                    std::vector<Vertex> seq{x};
                    auto walk = arc(c, a.v, b.v, true);
                    seq.insert(seq.end(), walk.begin(), walk.end());
                    cand.cycles.push_back(OrientedCycle{seq});
                    if (auto r = accept(std::move(cand), {})) return r;
                } else {
                    CycleFamily cand = family_without(ci);
                    std::vector<Vertex> seq1{x};
                    auto walk1 = arc(c, idx.pred(a.v), idx.succ(b.v), false);
                    seq1.insert(seq1.end(), walk1.begin(), walk1.end());
                    cand.cycles.push_back(OrientedCycle{seq1});
                    cand.cycles.push_back(OrientedCycle{arc(c, a.v, b.v, true)});
                    if (auto r = accept(std::move(cand), {})) return r;
                }
            }
        }

    return std::nullopt;
}

namespace {

CycleFamily seed_triangles(const EdgeColouredGraph& g) {
    int n = g.vertex_count();
    std::vector<char> covered(n, 0);
    CycleFamily fam;
    for (Vertex x = 0; x < n; ++x) {
        if (covered[x]) continue;
        bool placed = false;
        for (Vertex y : g.neighbours(x)) {
            if (placed) break;
            if (y <= x || covered[y]) continue;
            for (Vertex z : g.neighbours(x)) {
                if (z <= y || covered[z] || !g.has_edge(y, z)) continue;
                ColourId xy = g.colour(x, y), yz = g.colour(y, z), xz = g.colour(x, z);
                if (xy != yz && yz != xz && xz != xy) {
                    fam.cycles.push_back(OrientedCycle{{x, y, z}});
                    covered[x] = covered[y] = covered[z] = 1;
                    placed = true;
                    break;
                }
            }
        }
    }
    return fam.canonical();
}

// Any properly coloured cycle through x over allowed vertices; first found in
// ascending scan order.
std::optional<OrientedCycle> cycle_through(const EdgeColouredGraph& g,
                                           const std::vector<char>& allowed, Vertex x,
                                           std::uint64_t budget) {
    std::vector<char> free = allowed;
    std::vector<Vertex> path{x};
    free[x] = 0;
    std::uint64_t nodes = 0;
    std::optional<OrientedCycle> found;
    auto rec = [&](auto&& self, Vertex cur) -> bool {
        for (Vertex v : g.neighbours(cur)) {
            if (v == x && path.size() >= 3) {
                ColourId closing = g.colour(cur, x);
                if (closing != g.colour(path[path.size() - 2], cur) &&
                    closing != g.colour(x, path[1])) {
                    found = OrientedCycle{path}.canonical();
                    return true;
                }
                continue;
            }
            if (!free[v]) continue;
            if (path.size() >= 2 && g.colour(path[path.size() - 2], cur) == g.colour(cur, v))
                continue;
            if (++nodes > budget) return false;
            path.push_back(v);
            free[v] = 0;
            bool done = self(self, v);
            free[v] = 1;
            path.pop_back();
            if (done) return true;
        }
        return false;
    };
    rec(rec, x);
    return found;
}

// Exhaustively re-solve x together with the chosen cycles; on success the
// replacement cycles are written back into the family.
bool resolve_subset(const EdgeColouredGraph& g, CycleFamily& fam, Vertex x, int ci, int cj,
                    std::uint64_t budget) {
    std::vector<Vertex> subset{x};
    const auto& a = fam.cycles[ci].verts;
    subset.insert(subset.end(), a.begin(), a.end());
    if (cj >= 0) {
        const auto& b = fam.cycles[cj].verts;
        subset.insert(subset.end(), b.begin(), b.end());
    }
    std::vector<Vertex> old_of_new;
    EdgeColouredGraph sub = induced_subgraph(g, subset, &old_of_new);
    auto res = oracle_pc_two_factor(sub, OracleLimits{budget});
    if (res.status != OracleStatus::Found) return false;
    CycleFamily next;
    for (int i = 0; i < fam.cycle_count(); ++i)
        if (i != ci && i != cj) next.cycles.push_back(fam.cycles[i]);
    for (const auto& c : res.family->cycles) {
        std::vector<Vertex> mapped;
        mapped.reserve(c.verts.size());
        for (Vertex v : c.verts) mapped.push_back(old_of_new[v]);
        next.cycles.push_back(OrientedCycle{mapped});
    }
    fam = next.canonical();
    return true;
}

}  // namespace

TwoFactorOutcome find_pc_two_factor(const EdgeColouredGraph& g_in, bool fallback,
                                    FactorBudgets budgets) {
    EdgeColouredGraph g = edge_minimal_reduction(g_in);
    int n = g.vertex_count();
    std::uint64_t move_budget =
        budgets.move_budget ? budgets.move_budget : 50ull * n * n + 100;

    TwoFactorOutcome out;
    CycleFamily fam = seed_triangles(g);
    std::uint64_t moves = 0;
    for (;;) {
        std::vector<char> covered = fam.cover_mask(n);
        Vertex x = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!covered[v]) {
                x = v;
                break;
            }
        if (x < 0) {
            out.family = fam.canonical();
            return out;
        }
        auto stuck = [&](const std::string& why) {
            out.partial = fam.canonical();
            for (Vertex v = 0; v < n; ++v)
                if (!covered[v]) out.uncovered.push_back(v);
            out.reason = why;
            return out;
        };
        if (++moves > move_budget) return stuck("move budget exhausted");

        if (auto next = augment_two_factor(g, fam, x)) {
            fam = *next;
            continue;
        }
        if (!fallback) return stuck("no catalogued exchange covers vertex " + std::to_string(x));

        std::vector<char> allowed(n, 0);
        for (Vertex v = 0; v < n; ++v) allowed[v] = !covered[v];
        if (auto c = cycle_through(g, allowed, x, budgets.fallback_nodes)) {
            fam.cycles.push_back(*c);
            fam = fam.canonical();
            continue;
        }
        bool fixed = false;
        for (int ci = 0; ci < fam.cycle_count() && !fixed; ++ci)
            fixed = resolve_subset(g, fam, x, ci, -1, budgets.fallback_nodes);
        for (int ci = 0; ci < fam.cycle_count() && !fixed; ++ci)
            for (int cj = ci + 1; cj < fam.cycle_count() && !fixed; ++cj)
                fixed = resolve_subset(g, fam, x, ci, cj, budgets.fallback_nodes);
        if (fixed) continue;
        return stuck("exhaustive rewrites cannot cover vertex " + std::to_string(x));
    }
}

EndpointClassification classify_endpoints(const EdgeColouredGraph& g, const PCPath& path,
                                          int k) {
    const auto& p = path.verts;
    int L = static_cast<int>(p.size());
    if (L < 2) throw std::invalid_argument("path needs at least 2 vertices");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (auto issue = pc_path_issue(g, p))
        throw std::invalid_argument("not a properly coloured path: " + *issue);

    std::vector<int> pos(g.vertex_count(), -1);
    for (int i = 0; i < L; ++i) pos[p[i]] = i;

    EndpointClassification ec;
    ec.guard = (k + 1) / 2;

    auto build = [&](bool at_head) {
        EndpointClassification::End end;
        Vertex zq = at_head ? p.front() : p.back();
        ColourId first_col = at_head ? g.colour(p[0], p[1]) : g.colour(p[L - 1], p[L - 2]);
        end.end_vertex = zq;
        for (Vertex v : g.neighbours(zq))
            if (g.colour(zq, v) != first_col) end.admissible.push_back(v);
        std::set<Vertex> anchor_set;
        for (Vertex v : end.admissible) {
            int i = pos[v];
            if (i >= ec.guard && i <= L - 1 - ec.guard) {
                end.anchors.push_back(v);
                anchor_set.insert(v);
            }
        }
        std::sort(end.anchors.begin(), end.anchors.end(),
                  [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
        for (int i = 0; i < L; ++i) {
            Vertex v = p[i];
            if (i > 0 && anchor_set.count(p[i - 1]) &&
                g.colour(p[i - 1], zq) == g.colour(p[i - 1], p[i]))
                end.fwd_attach.push_back(v);
            if (i < L - 1 && anchor_set.count(p[i + 1])) {
                ColourId attach = g.colour(p[i + 1], zq);
                ColourId back = g.colour(p[i], p[i + 1]);
                // anchors stay clear of the path ends, so p[i+2] exists
                ColourId fwd = g.colour(p[i + 1], p[i + 2]);
                if (attach == back)
                    end.bwd_attach_matched.push_back(v);
                else if (attach != fwd)
                    end.bwd_attach_clean.push_back(v);
            }
        }
        end.bwd_attach = end.bwd_attach_matched;
        end.bwd_attach.insert(end.bwd_attach.end(), end.bwd_attach_clean.begin(),
                              end.bwd_attach_clean.end());
        std::sort(end.bwd_attach.begin(), end.bwd_attach.end());
        std::set<Vertex> fwd_set(end.fwd_attach.begin(), end.fwd_attach.end());
        std::set<Vertex> junction_set;
        for (Vertex v : end.fwd_attach)
            if (v != p[0] && v != p[L - 1]) junction_set.insert(v);
        for (Vertex v : end.bwd_attach)
            if (v != p[0] && v != p[L - 1]) junction_set.insert(v);
        junction_set.insert(zq);
        for (Vertex v : end.bwd_attach)
            if (fwd_set.count(v)) end.dual_attach.push_back(v);
        std::set<Vertex> dual_set(end.dual_attach.begin(), end.dual_attach.end());
        end.junction.assign(junction_set.begin(), junction_set.end());
        std::sort(end.junction.begin(), end.junction.end(),
                  [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
        for (Vertex v : end.junction)
            if (!dual_set.count(v)) end.single_attach.push_back(v);
        return end;
    };
    ec.head = build(true);
    ec.tail = build(false);
    return ec;
}

std::vector<std::pair<Vertex, Vertex>> EndpointJoinGraph::two_cycles() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (size_t i = 0; i < head_side.size(); ++i)
        for (size_t j = 0; j < tail_side.size(); ++j)
            if (head_to_tail[i][j] && tail_to_head[j][i])
                out.emplace_back(head_side[i], tail_side[j]);
    return out;
}

EndpointJoinGraph endpoint_join_graph(const EndpointClassification& ec,
                                      const EdgeColouredGraph& g, const PCPath& path) {
    const auto& p = path.verts;
    int L = static_cast<int>(p.size());
    std::vector<int> pos(g.vertex_count(), -1);
    for (int i = 0; i < L; ++i) pos[p[i]] = i;

    EndpointJoinGraph f;
    f.head_side = ec.head.junction;
    f.tail_side = ec.tail.junction;

    auto allows = [&](const EndpointClassification::End& end, Vertex x, Vertex y) {
        if (!g.has_edge(x, y)) return false;
        ColourId e = g.colour(x, y);
        if (x == end.end_vertex) {
            int i = pos[x];
            Vertex along = i == 0 ? p[1] : p[L - 2];
            return e != g.colour(x, along);
        }
        bool is_dual = std::count(end.dual_attach.begin(), end.dual_attach.end(), x) > 0;
        if (is_dual) return true;
        bool is_fwd = std::count(end.fwd_attach.begin(), end.fwd_attach.end(), x) > 0;
        int i = pos[x];
        if (is_fwd) return e != g.colour(x, p[i + 1]);
        return e != g.colour(x, p[i - 1]);
    };

    f.head_to_tail.assign(f.head_side.size(), std::vector<char>(f.tail_side.size(), 0));
    f.tail_to_head.assign(f.tail_side.size(), std::vector<char>(f.head_side.size(), 0));
    for (size_t i = 0; i < f.head_side.size(); ++i)
        for (size_t j = 0; j < f.tail_side.size(); ++j) {
            f.head_to_tail[i][j] = allows(ec.head, f.head_side[i], f.tail_side[j]);
            f.tail_to_head[j][i] = allows(ec.tail, f.tail_side[j], f.head_side[i]);
        }
    return f;
}

namespace {

std::vector<Vertex> slice_asc(const std::vector<Vertex>& p, int from, int to) {
    std::vector<Vertex> out;
    for (int i = from; i <= to; ++i) out.push_back(p[i]);
    return out;
}

std::vector<Vertex> slice_desc(const std::vector<Vertex>& p, int from, int to) {
    std::vector<Vertex> out;
    for (int i = from; i >= to; --i) out.push_back(p[i]);
    return out;
}

void append(std::vector<Vertex>& base, const std::vector<Vertex>& extra) {
    base.insert(base.end(), extra.begin(), extra.end());
}

}  // namespace

std::variant<CycleFamily, SplitError> split_path_to_cycles(const EdgeColouredGraph& g,
                                                           const PCPath& path, int k, Vertex u,
                                                           Vertex w, EndRole head_role,
                                                           EndRole tail_role) {
    const auto& p = path.verts;
    int L = static_cast<int>(p.size());
    auto index_of = [&](Vertex v) {
        for (int i = 0; i < L; ++i)
            if (p[i] == v) return i;
        return -1;
    };
    int iu = index_of(u), iw = index_of(w);
    if (iu < 0 || iw < 0) return SplitError{"junction vertex is not on the path"};
    if (head_role == EndRole::PathEnd && tail_role == EndRole::PathEnd)
        return SplitError{"both junctions are path ends; close the path directly"};

    // remaining combinations reduce to the handled ones on the reversed path
    if (tail_role == EndRole::BwdAttach ||
        (head_role == EndRole::PathEnd && tail_role == EndRole::FwdAttach)) {
        if (!(head_role == EndRole::FwdAttach && tail_role == EndRole::BwdAttach)) {
            PCPath rev = path.reversed();
            auto flip = [](EndRole r) {
                if (r == EndRole::FwdAttach) return EndRole::BwdAttach;
                if (r == EndRole::BwdAttach) return EndRole::FwdAttach;
                return EndRole::PathEnd;
            };
            return split_path_to_cycles(g, rev, k, w, u, flip(tail_role), flip(head_role));
        }
    }

    std::vector<std::vector<Vertex>> built;
    if (head_role == EndRole::FwdAttach && tail_role == EndRole::BwdAttach) {
        if (iw == iu - 1) {
            built.push_back(slice_asc(p, 0, iu - 1));
            built.push_back(slice_asc(p, iu, L - 1));
        } else if (iw < iu - 1) {
            std::vector<Vertex> seq{p[0]};
            append(seq, slice_desc(p, iu - 1, iw + 1));
            append(seq, slice_desc(p, L - 1, iu));
            append(seq, slice_desc(p, iw, 1));
            built.push_back(seq);
        } else {
            built.push_back(slice_asc(p, 0, iu - 1));
            built.push_back(slice_asc(p, iu, iw));
            built.push_back(slice_asc(p, iw + 1, L - 1));
        }
    } else if (head_role == EndRole::FwdAttach && tail_role == EndRole::FwdAttach) {
        if (iu < iw) {
            built.push_back(slice_asc(p, 0, iu - 1));
            std::vector<Vertex> seq = slice_asc(p, iu, iw - 1);
            append(seq, slice_desc(p, L - 1, iw));
            built.push_back(seq);
        } else {
            std::vector<Vertex> seq = slice_asc(p, 0, iw - 1);
            append(seq, slice_desc(p, L - 1, iu));
            append(seq, slice_asc(p, iw, iu - 1));
            built.push_back(seq);
        }
    } else if (head_role == EndRole::FwdAttach && tail_role == EndRole::PathEnd) {
        built.push_back(slice_asc(p, 0, iu - 1));
        built.push_back(slice_asc(p, iu, L - 1));
    } else if (head_role == EndRole::BwdAttach && tail_role == EndRole::FwdAttach) {
        if (iu < iw - 1) {
            std::vector<Vertex> seq = slice_asc(p, 0, iu);
            append(seq, slice_asc(p, iw, L - 1));
            append(seq, slice_desc(p, iw - 1, iu + 1));
            built.push_back(seq);
        } else if (iu == iw - 1) {
            std::vector<Vertex> seq = slice_asc(p, 0, iw - 1);
            append(seq, slice_desc(p, L - 1, iw));
            built.push_back(seq);
        } else {
            built.push_back(slice_asc(p, iw, iu));
            std::vector<Vertex> seq = slice_asc(p, 0, iw - 1);
            append(seq, slice_desc(p, L - 1, iu + 1));
            built.push_back(seq);
        }
    } else if (head_role == EndRole::BwdAttach && tail_role == EndRole::PathEnd) {
        std::vector<Vertex> seq = slice_asc(p, 0, iu);
        append(seq, slice_desc(p, L - 1, iu + 1));
        built.push_back(seq);
    }

    CycleFamily fam;
    int total = 0;
    for (const auto& seq : built) {
        if (auto issue = pc_cycle_issue(g, seq)) return SplitError{*issue};
        if (2 * static_cast<int>(seq.size()) < k)
            return SplitError{"cycle of length " + std::to_string(seq.size()) +
                              " violates the minimum " + std::to_string(k) + "/2"};
        total += static_cast<int>(seq.size());
        fam.cycles.push_back(OrientedCycle{seq});
    }
    if (total != L) return SplitError{"cycles do not partition the path's vertex set"};
    if (auto issue = family_issue(g, fam)) return SplitError{*issue};
    return fam.canonical();
}

namespace {

EndRole classify_junction(const EdgeColouredGraph& g, const EndpointClassification::End& end,
                          const std::vector<Vertex>& p, const std::vector<int>& pos, Vertex v,
                          Vertex other) {
    if (v == end.end_vertex) return EndRole::PathEnd;
    bool dual = std::count(end.dual_attach.begin(), end.dual_attach.end(), v) > 0;
    int i = pos[v];
    if (dual) {
        // the path is properly coloured, so one side always differs
        if (g.colour(v, other) != g.colour(v, p[i + 1])) return EndRole::FwdAttach;
        return EndRole::BwdAttach;
    }
    bool fwd = std::count(end.fwd_attach.begin(), end.fwd_attach.end(), v) > 0;
    return fwd ? EndRole::FwdAttach : EndRole::BwdAttach;
}

}  // namespace

MinLengthOutcome find_pc_two_factor_min_length(const EdgeColouredGraph& g, int k,
                                               FactorBudgets budgets) {
    MinLengthOutcome out;
    int n = g.vertex_count();
    if (n == 0) {
        out.family = CycleFamily{};
        return out;
    }
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    k = std::min(k, n);
    std::uint64_t move_budget =
        budgets.move_budget ? budgets.move_budget : 50ull * n * n + 100;

    CycleFamily cycles;
    std::optional<PCPath> path;
    std::vector<char> covered(n, 0);
    std::vector<int> cycle_of(n, -1);

    auto rebuild_cycle_of = [&]() {
        std::fill(cycle_of.begin(), cycle_of.end(), -1);
        for (int ci = 0; ci < cycles.cycle_count(); ++ci)
            for (Vertex v : cycles.cycles[ci].verts) cycle_of[v] = ci;
    };
    auto stuck = [&](const std::string& why) {
        out.stuck = OnePathCycle{cycles.canonical(), path};
        out.reason = why;
        return out;
    };

    path = PCPath{{0}};
    covered[0] = 1;

    std::uint64_t moves = 0;
    for (;;) {
        if (++moves > move_budget) return stuck("move budget exhausted");
        if (!path) {
            Vertex x = -1;
            for (Vertex v = 0; v < n; ++v)
                if (!covered[v]) {
                    x = v;
                    break;
                }
            if (x < 0) {
                out.family = cycles.canonical();
                return out;
            }
            path = PCPath{{x}};
            covered[x] = 1;
            continue;
        }

        auto& p = path->verts;
        int L = static_cast<int>(p.size());
        Vertex tail = p.back(), head = p.front();
        ColourId tail_col = L >= 2 ? g.colour(tail, p[L - 2]) : kNoEdge;
        ColourId head_col = L >= 2 ? g.colour(head, p[1]) : kNoEdge;

        // grow coverage: extend an end with an uncovered vertex
        bool moved = false;
        for (Vertex v : g.neighbours(tail)) {
            if (covered[v] || g.colour(tail, v) == tail_col) continue;
            p.push_back(v);
            covered[v] = 1;
            moved = true;
            break;
        }
        if (moved) continue;
        for (Vertex v : g.neighbours(head)) {
            if (covered[v] || g.colour(head, v) == head_col) continue;
            p.insert(p.begin(), v);
            covered[v] = 1;
            moved = true;
            break;
        }
        if (moved) continue;

        // lengthen the path: rotate a whole cycle in at an end
        rebuild_cycle_of();
        for (Vertex y : g.neighbours(tail)) {
            ColourId e = g.colour(tail, y);
            if (e == tail_col || cycle_of[y] < 0) continue;
            const OrientedCycle c = cycles.cycles[cycle_of[y]];
            bool flip = g.colour(y, c.succ(y)) == e;
            Vertex stop = flip ? c.succ(y) : c.pred(y);
            append(p, arc(c, y, stop, !flip));
            cycles.cycles.erase(cycles.cycles.begin() + cycle_of[y]);
            moved = true;
            break;
        }
        if (moved) continue;
        for (Vertex y : g.neighbours(head)) {
            ColourId e = g.colour(head, y);
            if (e == head_col || cycle_of[y] < 0) continue;
            const OrientedCycle c = cycles.cycles[cycle_of[y]];
            bool flip = g.colour(y, c.succ(y)) == e;
            Vertex start = flip ? c.succ(y) : c.pred(y);
            std::vector<Vertex> seq = arc(c, start, y, flip);
            cycles.cycles.erase(cycles.cycles.begin() + cycle_of[y]);
            seq.insert(seq.end(), p.begin(), p.end());
            p = seq;
            moved = true;
            break;
        }
        if (moved) continue;

        // close the path into one cycle
        if (L >= 3 && 2 * L >= k && g.has_edge(tail, head)) {
            ColourId e = g.colour(tail, head);
            if (e != head_col && e != tail_col) {
                cycles.cycles.push_back(OrientedCycle{p});
                path.reset();
                continue;
            }
        }

        // split the path into cycles through a junction pair; far pairs give
        // the length floor directly, near pairs can still work through the
        // one-cycle shapes, so try them second
        if (L >= 2) {
            EndpointClassification ec = classify_endpoints(g, *path, k);
            EndpointJoinGraph f = endpoint_join_graph(ec, g, *path);
            std::vector<int> pos(n, -1);
            for (int i = 0; i < L; ++i) pos[p[i]] = i;
            bool split_done = false;
            auto pairs = f.two_cycles();
            for (int pass = 0; pass < 2 && !split_done; ++pass)
                for (auto [u, w] : pairs) {
                    bool far = 2 * std::abs(pos[u] - pos[w]) >= k;
                    if (far != (pass == 0)) continue;
                    EndRole ru = classify_junction(g, ec.head, p, pos, u, w);
                    EndRole rw = classify_junction(g, ec.tail, p, pos, w, u);
                    auto res = split_path_to_cycles(g, *path, k, u, w, ru, rw);
                    if (auto* fam = std::get_if<CycleFamily>(&res)) {
                        for (auto& c : fam->cycles) cycles.cycles.push_back(c);
                        path.reset();
                        split_done = true;
                        break;
                    }
                }
            if (split_done) continue;
        }
        return stuck("no applicable move for the current path");
    }
}

PathCoverOutcome path_cover(const EdgeColouredGraph& g, int k, FactorBudgets budgets) {
    PathCoverOutcome out;
    MinLengthOutcome mlo = find_pc_two_factor_min_length(g, k, budgets);
    if (!mlo.ok()) {
        out.stuck = mlo.stuck;
        out.reason = mlo.reason;
        return out;
    }
    std::vector<PCPath> paths;
    for (const auto& c : mlo.family->cycles) paths.push_back(PCPath{c.verts});
    out.paths = std::move(paths);
    return out;
}

}  // namespace pcc
