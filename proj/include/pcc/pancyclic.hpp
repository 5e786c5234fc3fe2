#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "pcc/absorb.hpp"
#include "pcc/certificate.hpp"
#include "pcc/structures.hpp"

namespace pcc {

// Exact rational, used so every threshold derived from epsilon is computed
// without floating point.
struct Rational {
    long long num = 1;
    long long den = 20;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    long long floor_times(long long a, long long extra_den = 1) const {
        return (num * a) / (den * extra_den);
    }
    long long ceil_times(long long a) const { return (num * a + den - 1) / den; }
};

struct DriverConfig {
    Rational eps{1, 20};
    int coverage_target = 2;
    int family_cap = 0;   // absorber paths in the shared family; 0 = max(4, ceil(eps*n))
    int cover_k = 0;      // minimum-cycle parameter for the cover step; 0 = automatic ladder
    std::uint64_t node_budget = 4'000'000;  // per bounded search
    std::uint64_t move_budget = 0;          // 0 = per-call defaults
    std::uint64_t seed = 0;
    bool fidelity = false;  // randomized absorber family with the sampling constants
    int direct_search_max = 8;  // lengths up to this get a last-resort exhaustive search

    long long gamma_num() const { return 64 * eps.num; }  // gamma = 64*eps/9
    long long gamma_den() const { return 9 * eps.den; }
};

struct TriangleOutcome {
    std::optional<OrientedCycle> triangle;
    int max_out_degree = 0;  // of the auxiliary digraph, for diagnostics
    int max_in_degree = 0;
    std::string reason;
    bool ok() const { return triangle.has_value(); }
};

// Properly coloured triangle through x, via a directed auxiliary graph on
// N(x) whose directed two-cycles are exactly such triangles.
TriangleOutcome find_pc_triangle(const EdgeColouredGraph& g, Vertex x);

struct CycleSearchOutcome {
    std::optional<OrientedCycle> cycle;
    std::string stage;   // pipeline stage that failed
    std::string reason;
    bool ok() const { return cycle.has_value(); }
};

// Short lengths: greedily grown properly coloured path on l-2 vertices whose
// end edges are joined by a connector pair clear of the interior; the grower
// backtracks within the node budget. Lengths 4 and 5, where the join pattern
// degenerates, use a bounded exhaustive search instead.
CycleSearchOutcome find_pc_cycle_short(const EdgeColouredGraph& g, int l,
                                       const DriverConfig& cfg);

struct SharedAbsorber {
    AbsorberFamily family;
    AbsorbingCycle cycle;
};

// Absorber family plus joined absorbing cycle reused across long lengths.
struct SharedAbsorberOutcome {
    std::optional<SharedAbsorber> shared;
    std::string reason;
    bool ok() const { return shared.has_value(); }
};
SharedAbsorberOutcome build_shared_absorber(const EdgeColouredGraph& g,
                                            const DriverConfig& cfg);

// Long lengths: remove the absorbing cycle, cover the rest with few properly
// coloured paths via the minimum-cycle-length 2-factor, trim the paths to
// span exactly l - |C| vertices, and absorb them. With shared == nullptr a
// local family sized for l is built (a ladder of sizes is tried).
CycleSearchOutcome find_pc_cycle_long(const EdgeColouredGraph& g, int l,
                                      const DriverConfig& cfg, const SharedAbsorber* shared);

struct LengthOutcome {
    bool ok = false;
    Certificate cert;    // validated before being reported
    std::string stage;
    std::string reason;
};

struct PancyclicReport {
    std::map<int, LengthOutcome> by_length;
    int successes = 0;
    int requested = 0;
    std::string summary_csv() const;  // length,status,cycle_length,validated
};

// One certificate per length 3..n: triangles via the auxiliary digraph,
// short lengths via grow-and-join, long lengths via one shared absorbing
// cycle with per-length fallbacks.
PancyclicReport pancyclic_all(const EdgeColouredGraph& g, const DriverConfig& cfg);

}  // namespace pcc
