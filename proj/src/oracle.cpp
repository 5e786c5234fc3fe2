#include "pcc/oracle.hpp"

#include <algorithm>

namespace pcc {

namespace {

struct Search {
    const EdgeColouredGraph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    explicit Search(const EdgeColouredGraph& g, const OracleLimits& limits)
        : g(g), budget(limits.node_budget) {}

    bool tick() {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        return true;
    }
};

// Enumerates properly coloured cycles whose smallest vertex is path[0],
// restricted to vertices with free[v] != 0, with size in [min_len, max_len].
// Invariant: every vertex on `path` has free[v] == 0. Calls sink(path) for
// each cycle found; the sink must leave `free` exactly as it received it, and
// enumeration stops once it returns true.
template <typename Sink>
bool enumerate_cycles_from(Search& s, std::vector<Vertex>& path, std::vector<char>& free,
                           int min_len, int max_len, Sink&& sink) {
    Vertex head = path.front();
    Vertex cur = path.back();
    int len = static_cast<int>(path.size());
    for (Vertex v : s.g.neighbours(cur)) {
        if (s.out_of_budget) return false;
        if (v == head && len >= std::max(min_len, 3)) {
            ColourId closing = s.g.colour(cur, head);
            if (closing != s.g.colour(path[path.size() - 2], cur) &&
                closing != s.g.colour(head, path[1])) {
                if (sink(path)) return true;
            }
            continue;
        }
        if (len >= max_len) continue;
        if (v <= head || !free[v]) continue;
        if (len >= 2 && s.g.colour(path[path.size() - 2], cur) == s.g.colour(cur, v)) continue;
        if (!s.tick()) return false;
        path.push_back(v);
        free[v] = 0;
        bool done = enumerate_cycles_from(s, path, free, min_len, max_len, sink);
        free[v] = 1;
        path.pop_back();
        if (done) return true;
    }
    return false;
}

}  // namespace

CycleOracleResult oracle_pc_cycle(const EdgeColouredGraph& g, int length, OracleLimits limits) {
    if (length < 3 || length > g.vertex_count())
        throw std::invalid_argument("cycle length " + std::to_string(length) +
                                    " out of range [3," + std::to_string(g.vertex_count()) + "]");
    Search s(g, limits);
    std::vector<char> free(g.vertex_count(), 1);
    CycleOracleResult result;
    for (Vertex start = 0; start + length <= g.vertex_count(); ++start) {
        std::vector<Vertex> path{start};
        free[start] = 0;
        bool found = enumerate_cycles_from(s, path, free, length, length,
                                           [&](const std::vector<Vertex>& cyc) {
                                               result.cycle = OrientedCycle{cyc}.canonical();
                                               return true;
                                           });
        free[start] = 1;
        if (found) {
            result.status = OracleStatus::Found;
            result.nodes = s.nodes;
            return result;
        }
        if (s.out_of_budget) break;
    }
    result.status = s.out_of_budget ? OracleStatus::BudgetExceeded : OracleStatus::None;
    result.nodes = s.nodes;
    return result;
}

namespace {

bool cover_with_cycles(Search& s, std::vector<char>& free, int uncovered, CycleFamily& acc) {
    if (uncovered == 0) return true;
    Vertex x = 0;
    while (!free[x]) ++x;
    std::vector<Vertex> path{x};
    free[x] = 0;
    bool found = enumerate_cycles_from(
        s, path, free, 3, s.g.vertex_count(), [&](const std::vector<Vertex>& cyc) {
            acc.cycles.push_back(OrientedCycle{cyc}.canonical());
            bool done = cover_with_cycles(s, free, uncovered - static_cast<int>(cyc.size()), acc);
            if (!done) acc.cycles.pop_back();
            return done;
        });
    free[x] = 1;
    return found;
}

}  // namespace

TwoFactorOracleResult oracle_pc_two_factor(const EdgeColouredGraph& g, OracleLimits limits) {
    TwoFactorOracleResult result;
    if (g.vertex_count() == 0) {
        result.status = OracleStatus::Found;
        result.family = CycleFamily{};
        return result;
    }
    Search s(g, limits);
    std::vector<char> free(g.vertex_count(), 1);
    CycleFamily acc;
    if (cover_with_cycles(s, free, g.vertex_count(), acc)) {
        result.status = OracleStatus::Found;
        result.family = acc.canonical();
    } else {
        result.status = s.out_of_budget ? OracleStatus::BudgetExceeded : OracleStatus::None;
    }
    result.nodes = s.nodes;
    return result;
}

namespace {

// Branch on the lowest undecided vertex: either leave it uncovered for good
// or put it on some cycle over still-undecided vertices.
void max_cover_rec(Search& s, std::vector<char>& free, int decided_uncovered, int covered,
                   int* best) {
    if (s.out_of_budget) return;
    int n = s.g.vertex_count();
    if (covered + (n - covered - decided_uncovered) <= *best) return;
    Vertex x = 0;
    while (x < n && !free[x]) ++x;
    if (x == n) {
        *best = std::max(*best, covered);
        return;
    }
    std::vector<Vertex> path{x};
    free[x] = 0;
    enumerate_cycles_from(s, path, free, 3, n, [&](const std::vector<Vertex>& cyc) {
        max_cover_rec(s, free, decided_uncovered, covered + static_cast<int>(cyc.size()), best);
        return s.out_of_budget;
    });
    if (s.out_of_budget) {
        free[x] = 1;
        return;
    }
    // x stays off every cycle
    max_cover_rec(s, free, decided_uncovered + 1, covered, best);
    free[x] = 1;
}

}  // namespace

CountOracleResult oracle_max_pc_cycle_cover(const EdgeColouredGraph& g, OracleLimits limits) {
    Search s(g, limits);
    std::vector<char> free(g.vertex_count(), 1);
    int best = 0;
    max_cover_rec(s, free, 0, 0, &best);
    return {best, !s.out_of_budget, s.nodes};
}

namespace {

void longest_path_rec(Search& s, std::vector<Vertex>& path, std::vector<char>& free, int* best) {
    if (s.out_of_budget) return;
    *best = std::max(*best, static_cast<int>(path.size()) - 1);
    Vertex cur = path.back();
    for (Vertex v : s.g.neighbours(cur)) {
        if (!free[v]) continue;
        if (path.size() >= 2 &&
            s.g.colour(path[path.size() - 2], cur) == s.g.colour(cur, v))
            continue;
        if (!s.tick()) return;
        path.push_back(v);
        free[v] = 0;
        longest_path_rec(s, path, free, best);
        free[v] = 1;
        path.pop_back();
    }
}

}  // namespace

CountOracleResult oracle_longest_pc_path(const EdgeColouredGraph& g, OracleLimits limits) {
    Search s(g, limits);
    std::vector<char> free(g.vertex_count(), 1);
    int best = 0;
    for (Vertex start = 0; start < g.vertex_count() && !s.out_of_budget; ++start) {
        std::vector<Vertex> path{start};
        free[start] = 0;
        longest_path_rec(s, path, free, &best);
        free[start] = 1;
    }
    return {best, !s.out_of_budget, s.nodes};
}

}  // namespace pcc
