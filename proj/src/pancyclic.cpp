#include "pcc/pancyclic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pcc/factor.hpp"
#include "pcc/oracle.hpp"

namespace pcc {

TriangleOutcome find_pc_triangle(const EdgeColouredGraph& g, Vertex x) {
    g.check_vertex(x);
    TriangleOutcome out;
    const auto& nbrs = g.neighbours(x);
    int m = static_cast<int>(nbrs.size());
    std::vector<int> outdeg(m, 0), indeg(m, 0);
    // directed edge y -> z when the triangle x,y,z is properly coloured at x
    // and at y; a two-cycle closes it at z as well
    auto arc = [&](int yi, int zi) {
        Vertex y = nbrs[yi], z = nbrs[zi];
        if (!g.has_edge(y, z)) return false;
        ColourId e = g.colour(y, z);
        return e != g.colour(x, y) && g.colour(x, y) != g.colour(x, z);
    };
    for (int yi = 0; yi < m; ++yi)
        for (int zi = 0; zi < m; ++zi) {
            if (yi == zi) continue;
            if (arc(yi, zi)) {
                ++outdeg[yi];
                ++indeg[zi];
                if (zi < yi && arc(zi, yi)) {
                    out.triangle = OrientedCycle{{x, nbrs[zi], nbrs[yi]}}.canonical();
                    return out;
                }
            }
        }
    out.max_out_degree = m ? *std::max_element(outdeg.begin(), outdeg.end()) : 0;
    out.max_in_degree = m ? *std::max_element(indeg.begin(), indeg.end()) : 0;
    out.reason = "no directed two-cycle over the neighbourhood of " + std::to_string(x);
    return out;
}

namespace {

// DFS over properly coloured paths on exactly `want` vertices; `sink` gets
// each one and may stop the scan by returning true.
template <typename Sink>
void scan_pc_paths(const EdgeColouredGraph& g, int want, std::uint64_t budget, Sink&& sink) {
    int n = g.vertex_count();
    std::vector<char> used(n, 0);
    std::vector<Vertex> path;
    std::uint64_t nodes = 0;
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(path.size()) == want) return sink(path);
        Vertex cur = path.back();
        for (Vertex v : g.neighbours(cur)) {
            if (used[v]) continue;
            if (path.size() >= 2 &&
                g.colour(path[path.size() - 2], cur) == g.colour(cur, v))
                continue;
            if (++nodes > budget) return false;
            path.push_back(v);
            used[v] = 1;
            bool done = self(self);
            used[v] = 0;
            path.pop_back();
            if (done) return true;
        }
        return false;
    };
    for (Vertex s = 0; s < n; ++s) {
        path.assign(1, s);
        used[s] = 1;
        bool done = want == 1 ? sink(path) : rec(rec);
        used[s] = 0;
        if (done || nodes > budget) return;
    }
}

}  // namespace

CycleSearchOutcome find_pc_cycle_short(const EdgeColouredGraph& g, int l,
                                       const DriverConfig& cfg) {
    CycleSearchOutcome out;
    if (l < 4 || l > g.vertex_count()) {
        out.stage = "precondition";
        out.reason = "length " + std::to_string(l) + " outside [4,n]";
        return out;
    }
    if (l <= 5) {
        // the grow-and-join pattern degenerates here; search directly
        auto res = oracle_pc_cycle(g, l, OracleLimits{cfg.node_budget});
        if (res.status == OracleStatus::Found) {
            out.cycle = res.cycle;
            return out;
        }
        out.stage = "direct-search";
        out.reason = res.status == OracleStatus::BudgetExceeded ? "search budget exhausted"
                                                                : "no such cycle";
        return out;
    }
    int want = l - 2;
    int n = g.vertex_count();
    bool joined = false;
    std::string last_reason = "no properly coloured path on " + std::to_string(want) +
                              " vertices";
    scan_pc_paths(g, want, cfg.node_budget, [&](const std::vector<Vertex>& path) {
        std::vector<char> forbidden(n, 0);
        for (int i = 2; i <= want - 4; ++i) forbidden[path[i]] = 1;
        JoinOutcome join = join_edges(g, forbidden, path[want - 2], path[want - 1], path[0],
                                      path[1]);
        if (!join.found) {
            last_reason = join.reason;
            return false;
        }
        std::vector<Vertex> verts = path;
        verts.push_back(join.z1);
        verts.push_back(join.z2);
        if (pc_cycle_issue(g, verts)) return false;
        out.cycle = OrientedCycle{verts}.canonical();
        joined = true;
        return true;
    });
    if (!joined) {
        out.stage = "grow-and-join";
        out.reason = last_reason;
    }
    return out;
}

SharedAbsorberOutcome build_shared_absorber(const EdgeColouredGraph& g,
                                            const DriverConfig& cfg) {
    SharedAbsorberOutcome out;
    int n = g.vertex_count();
    AbsorberFamilyParams params;
    params.coverage_target = cfg.coverage_target;
    params.seed = cfg.seed;
    if (cfg.fidelity) {
        params.mode = AbsorberFamilyParams::Mode::Randomized;
        params.gamma = static_cast<double>(cfg.gamma_num()) / static_cast<double>(cfg.gamma_den());
    } else {
        params.mode = AbsorberFamilyParams::Mode::Greedy;
        params.size_cap = cfg.family_cap > 0
                              ? cfg.family_cap
                              : std::max<long long>(4, cfg.eps.ceil_times(n));
    }
    FamilyBuildOutcome fam = build_absorber_family(g, params);
    if (!fam.ok()) {
        out.reason = "absorber family: " + fam.reason;
        return out;
    }
    AbsorbingCycleOutcome ac = build_absorbing_cycle(g, *fam.family);
    if (!ac.ok()) {
        out.reason = "absorbing cycle: " + ac.reason;
        return out;
    }
    out.shared = SharedAbsorber{*fam.family, *ac.cycle};
    return out;
}

namespace {

// Keep the longest paths until they span at least `target`, then shave
// vertices off tails, longest path first, until the total is exact.
std::vector<PCPath> trim_paths(std::vector<PCPath> paths, int target) {
    std::stable_sort(paths.begin(), paths.end(),
                     [](const PCPath& a, const PCPath& b) { return a.size() > b.size(); });
    std::vector<PCPath> kept;
    int total = 0;
    for (const auto& p : paths) {
        if (total >= target) break;
        kept.push_back(p);
        total += p.size();
    }
    while (total > target) {
        size_t longest = 0;
        for (size_t i = 1; i < kept.size(); ++i)
            if (kept[i].size() > kept[longest].size()) longest = i;
        kept[longest].verts.pop_back();
        --total;
    }
    return kept;
}

CycleSearchOutcome absorb_for_length(const EdgeColouredGraph& g, int l,
                                     const SharedAbsorber& shared, const DriverConfig& cfg) {
    CycleSearchOutcome out;
    int cycle_len = shared.cycle.cycle.size();
    int span = l - cycle_len;
    if (span < 0) {
        out.stage = "precondition";
        out.reason = "absorbing cycle longer than requested length";
        return out;
    }
    if (span == 0) {
        out.cycle = shared.cycle.cycle;
        return out;
    }
    int n = g.vertex_count();
    std::vector<char> on_cycle(n, 0);
    for (Vertex v : shared.cycle.cycle.verts) on_cycle[v] = 1;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
        if (!on_cycle[v]) rest.push_back(v);
    std::vector<Vertex> old_of_new;
    EdgeColouredGraph sub = induced_subgraph(g, rest, &old_of_new);
    int nn = sub.vertex_count();
    int m = static_cast<int>(shared.family.paths.size());

    std::vector<int> ks;
    if (cfg.cover_k > 0) {
        ks.push_back(cfg.cover_k);
    } else {
        int base = std::max(1, (2 * nn + m - 1) / m);
        for (int k : {base, (3 * base) / 4, base / 2, base / 4, 1})
            if (k >= 1 && (ks.empty() || k < ks.back())) ks.push_back(k);
    }

    std::string last = "cover not attempted";
    for (int k : ks) {
        FactorBudgets budgets;
        budgets.move_budget = cfg.move_budget;
        PathCoverOutcome cover = path_cover(sub, std::min(k, std::max(1, nn)), budgets);
        if (!cover.ok()) {
            last = "path cover (k=" + std::to_string(k) + "): " + cover.reason;
            continue;
        }
        std::vector<PCPath> mapped;
        for (const auto& p : *cover.paths) {
            PCPath q;
            for (Vertex v : p.verts) q.verts.push_back(old_of_new[v]);
            mapped.push_back(q);
        }
        std::vector<PCPath> kept = trim_paths(mapped, span);
        AbsorbOutcome ab = absorb_paths(g, shared.cycle, kept);
        if (!ab.ok()) {
            last = "absorb (k=" + std::to_string(k) + "): " + ab.reason;
            continue;
        }
        if (ab.cycle->size() != l) {
            last = "absorbed cycle has wrong length";
            continue;
        }
        out.cycle = *ab.cycle;
        return out;
    }
    out.stage = "cover-and-absorb";
    out.reason = last;
    return out;
}

}  // namespace

CycleSearchOutcome find_pc_cycle_long(const EdgeColouredGraph& g, int l,
                                      const DriverConfig& cfg, const SharedAbsorber* shared) {
    CycleSearchOutcome out;
    int n = g.vertex_count();
    if (l < 6 || l > n) {
        out.stage = "precondition";
        out.reason = "length " + std::to_string(l) + " outside [6,n]";
        return out;
    }
    if (shared && shared->cycle.cycle.size() <= l) return absorb_for_length(g, l, *shared, cfg);

    // build a family sized for this length; try a few sizes
    std::vector<int> sizes;
    auto push_size = [&](int m) {
        if (m >= 1 && 6 * m <= l &&
            std::find(sizes.begin(), sizes.end(), m) == sizes.end())
            sizes.push_back(m);
    };
    push_size(std::min((l - 4) / 6, (n + 7) / 8));
    push_size((n + 11) / 12);
    push_size(2);
    push_size(1);

    std::string last = "no feasible family size";
    for (int m : sizes) {
        AbsorberFamilyParams params;
        params.coverage_target = cfg.coverage_target;
        params.exact_size = m;
        params.size_cap = m;
        params.seed = cfg.seed;
        FamilyBuildOutcome fam = build_absorber_family(g, params);
        if (!fam.ok()) {
            last = "family (m=" + std::to_string(m) + "): " + fam.reason;
            continue;
        }
        if (static_cast<int>(fam.family->paths.size()) != m) {
            last = "family (m=" + std::to_string(m) + "): size short";
            continue;
        }
        AbsorbingCycleOutcome ac = build_absorbing_cycle(g, *fam.family);
        if (!ac.ok()) {
            last = "cycle (m=" + std::to_string(m) + "): " + ac.reason;
            continue;
        }
        SharedAbsorber local{*fam.family, *ac.cycle};
        CycleSearchOutcome res = absorb_for_length(g, l, local, cfg);
        if (res.ok()) return res;
        last = "m=" + std::to_string(m) + ": " + res.reason;
    }
    out.stage = "local-absorber";
    out.reason = last;
    return out;
}

std::string PancyclicReport::summary_csv() const {
    std::ostringstream out;
    out << "# pcc pancyclic summary v1\n";
    out << "length,status,cycle_length,validated\n";
    for (const auto& [l, r] : by_length) {
        out << l << ',' << (r.ok ? "ok" : "fail") << ','
            << (r.ok ? std::to_string(r.cert.cycle.size()) : "") << ','
            << (r.ok ? "yes" : "") << '\n';
    }
    return out.str();
}

PancyclicReport pancyclic_all(const EdgeColouredGraph& g, const DriverConfig& cfg) {
    PancyclicReport report;
    int n = g.vertex_count();
    if (n < 3) return report;

    auto note = [&](const std::string& algo) {
        std::ostringstream s;
        s << algo << " eps=" << cfg.eps.num << "/" << cfg.eps.den << " seed=" << cfg.seed;
        return s.str();
    };
    auto record = [&](int l, Certificate cert, const std::string& stage) {
        LengthOutcome lo;
        Validation v = validate_certificate(g, cert);
        if (v.ok) {
            lo.ok = true;
            lo.cert = std::move(cert);
        } else {
            lo.stage = stage + "/validation";
            lo.reason = v.reason;
        }
        report.by_length[l] = std::move(lo);
    };
    auto record_fail = [&](int l, const std::string& stage, const std::string& reason) {
        LengthOutcome lo;
        lo.stage = stage;
        lo.reason = reason;
        report.by_length[l] = std::move(lo);
    };

    {
        TriangleOutcome best;
        for (Vertex x = 0; x < n; ++x) {
            best = find_pc_triangle(g, x);
            if (best.ok()) break;
        }
        if (best.ok())
            record(3, Certificate::triangle(*best.triangle, note("triangle")), "triangle");
        else
            record_fail(3, "triangle", best.reason);
    }

    SharedAbsorberOutcome shared = build_shared_absorber(g, cfg);

    for (int l = 4; l <= n; ++l) {
        std::string stages, reasons;
        auto accumulate = [&](const CycleSearchOutcome& r) {
            if (!stages.empty()) stages += "; ";
            stages += r.stage;
            if (!reasons.empty()) reasons += "; ";
            reasons += r.reason;
        };
        std::optional<OrientedCycle> found;
        if (l >= 6 && shared.ok() && shared.shared->cycle.cycle.size() <= l) {
            CycleSearchOutcome r = find_pc_cycle_long(g, l, cfg, &*shared.shared);
            if (r.ok())
                found = r.cycle;
            else
                accumulate(r);
        } else if (l >= 6 && !shared.ok()) {
            if (stages.empty()) {
                stages = "shared-absorber";
                reasons = shared.reason;
            }
        }
        if (!found) {
            CycleSearchOutcome r = find_pc_cycle_short(g, l, cfg);
            if (r.ok())
                found = r.cycle;
            else
                accumulate(r);
        }
        if (!found && l >= 6) {
            CycleSearchOutcome r = find_pc_cycle_long(g, l, cfg, nullptr);
            if (r.ok())
                found = r.cycle;
            else
                accumulate(r);
        }
        if (!found && l > 5 && l <= cfg.direct_search_max) {
            auto res = oracle_pc_cycle(g, l, OracleLimits{cfg.node_budget});
            if (res.status == OracleStatus::Found)
                found = res.cycle;
            else {
                if (!stages.empty()) stages += "; ";
                stages += "direct-search";
                if (!reasons.empty()) reasons += "; ";
                reasons += res.status == OracleStatus::BudgetExceeded ? "budget" : "none";
            }
        }
        if (found)
            record(l, Certificate::cycle_of_length(*found, l, note("pancyclic")), stages);
        else
            record_fail(l, stages, reasons);
    }

    report.requested = static_cast<int>(report.by_length.size());
    for (const auto& [l, r] : report.by_length)
        if (r.ok) ++report.successes;
    return report;
}

}  // namespace pcc
