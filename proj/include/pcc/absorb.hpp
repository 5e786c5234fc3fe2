#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcc/structures.hpp"

namespace pcc {

// Target a 4-vertex path can swallow: a single vertex spliced into the
// middle, or a directed path attached by its first and last edges.
struct AbsorbTarget {
    bool is_vertex = true;
    Vertex vertex = -1;
    std::array<Vertex, 4> edge_pair{-1, -1, -1, -1};  // x1 x2 y1 y2

    static AbsorbTarget for_vertex(Vertex x) { return {true, x, {-1, -1, -1, -1}}; }
    static AbsorbTarget for_edges(Vertex x1, Vertex x2, Vertex y1, Vertex y2) {
        return {false, -1, {x1, x2, y1, y2}};
    }
};

struct AbsorbingPath {
    std::array<Vertex, 4> verts{-1, -1, -1, -1};
    AbsorbTarget target;
};

// A properly coloured 4-path z1 z2 z3 z4, with x off it, such that
// z1 z2 x z3 z4 is again properly coloured.
bool is_absorbing_for_vertex(const EdgeColouredGraph& g, const std::array<Vertex, 4>& p,
                             Vertex x);

// A properly coloured 4-path avoiding {x1,x2,y1,y2} such that z1 z2 x1 x2 and
// y1 y2 z3 z4 are properly coloured; the diverted cycle enters through x1 x2
// and leaves through y1 y2.
bool is_absorbing_for_edges(const EdgeColouredGraph& g, const std::array<Vertex, 4>& p,
                            Vertex x1, Vertex x2, Vertex y1, Vertex y2);

// All absorbing 4-paths for the target, in ascending (z2, z3, z1, z4) scan
// order, truncated at `limit`. The enumeration follows the constructive
// chain: pick z2 adjacent to the target, then z3 adjacent to z2 and the
// target with the colour disequalities, then the outer vertices.
std::vector<AbsorbingPath> enumerate_absorbers_vertex(const EdgeColouredGraph& g, Vertex x,
                                                      std::size_t limit);
std::vector<AbsorbingPath> enumerate_absorbers_edges(const EdgeColouredGraph& g, Vertex x1,
                                                     Vertex x2, Vertex y1, Vertex y2,
                                                     std::size_t limit);

struct AbsorberFamilyParams {
    enum class Mode { Greedy, Randomized };
    Mode mode = Mode::Greedy;
    int coverage_target = 1;
    int size_cap = 0;    // greedy: stop growing past this many paths; 0 = no cap
    int exact_size = 0;  // greedy: keep growing to this size even once covered
    double gamma = 0.0;  // randomized: sampling density parameter
    std::uint64_t seed = 0;
    // extra ordered edge-pair targets to track alongside all vertices
    std::vector<std::array<Vertex, 4>> pair_targets;
};

struct AbsorberFamily {
    std::vector<std::array<Vertex, 4>> paths;  // pairwise vertex-disjoint PC 4-paths
    std::map<Vertex, int> vertex_coverage;
    std::map<std::array<Vertex, 4>, int> pair_coverage;
    AbsorberFamilyParams params;

    bool touches(Vertex v) const;
    std::vector<Vertex> vertices() const;
    std::string to_text() const;  // one path per line plus the coverage table
};

struct FamilyBuildOutcome {
    std::optional<AbsorberFamily> family;
    std::vector<std::string> uncovered;  // description of targets still short
    std::string reason;
    bool ok() const { return family.has_value(); }
};

// Greedy mode repeatedly serves the least-covered target with its first
// available absorber disjoint from everything selected, until every tracked
// target has coverage >= t. Randomized mode samples every ordered 4-tuple
// independently with probability 2^-7 * gamma * (n-4)!/(n-1)!, drops one of
// each intersecting pair and all non-paths, then checks coverage.
FamilyBuildOutcome build_absorber_family(const EdgeColouredGraph& g,
                                         const AbsorberFamilyParams& params);

struct JoinOutcome {
    bool found = false;
    Vertex z1 = -1, z2 = -1;
    int two_cycle_count = 0;
    std::string reason;
};

// Connector edge z1 z2, clear of `forbidden` and of the four endpoints, with
// x1 x2 z1 z2 and z1 z2 y1 y2 both properly coloured. Deterministically the
// lexicographically smallest such pair. Requires edges x1 x2 and y1 y2 with
// x2 != y2.
JoinOutcome join_edges(const EdgeColouredGraph& g, const std::vector<char>& forbidden,
                       Vertex x1, Vertex x2, Vertex y1, Vertex y2);

struct AbsorbingCycle {
    OrientedCycle cycle;  // family paths in order, one connector pair between
    AbsorberFamily family;
    std::vector<std::pair<Vertex, Vertex>> connectors;
};

struct AbsorbingCycleOutcome {
    std::optional<AbsorbingCycle> cycle;
    int stuck_index = -1;  // join that failed
    std::string reason;
    bool ok() const { return cycle.has_value(); }
};

// Joins consecutive family paths (cyclically) with connector edges, keeping
// connectors off all family vertices and off each other. The result has
// length exactly 6 * |family|.
AbsorbingCycleOutcome build_absorbing_cycle(const EdgeColouredGraph& g,
                                            const AbsorberFamily& family);

struct AbsorbOutcome {
    std::optional<OrientedCycle> cycle;
    std::string reason;
    bool ok() const { return cycle.has_value(); }
};

// Swallows the given vertex-disjoint properly coloured paths into the
// absorbing cycle: paths on at most 3 vertices are broken into isolated
// vertices, every piece is assigned a distinct family path that absorbs it
// (maximum bipartite matching; directed pieces may be reversed), and each
// assignment is spliced in. The result is a properly coloured cycle on
// V(cycle) plus all path vertices.
AbsorbOutcome absorb_paths(const EdgeColouredGraph& g, const AbsorbingCycle& ac,
                           const std::vector<PCPath>& paths);

}  // namespace pcc
