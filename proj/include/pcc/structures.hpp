#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcc/graph.hpp"

namespace pcc {

// Directed cycle given as a vertex sequence with fixed orientation.
struct OrientedCycle {
    std::vector<Vertex> verts;

    int size() const { return static_cast<int>(verts.size()); }
    int index_of(Vertex v) const;
    bool contains(Vertex v) const { return index_of(v) >= 0; }
    Vertex succ(Vertex v) const;
    Vertex pred(Vertex v) const;

    // Smallest vertex first, and of the two directions the one whose second
    // vertex is smaller. Used for deterministic output.
    OrientedCycle canonical() const;
};

// Directed path; a single vertex is a valid trivial path.
struct PCPath {
    std::vector<Vertex> verts;

    int size() const { return static_cast<int>(verts.size()); }
    int length() const { return size() - 1; }  // edge count
    Vertex head() const { return verts.front(); }
    Vertex tail() const { return verts.back(); }
    PCPath reversed() const {
        return PCPath{std::vector<Vertex>(verts.rbegin(), verts.rend())};
    }
};

// Vertex-disjoint properly coloured cycles.
struct CycleFamily {
    std::vector<OrientedCycle> cycles;

    int cycle_count() const { return static_cast<int>(cycles.size()); }
    int vertex_count() const;
    bool covers(Vertex v) const;
    std::vector<char> cover_mask(int n) const;
    std::vector<Vertex> vertices() const;  // ascending

    // Canonicalize every cycle and order cycles by smallest member.
    CycleFamily canonical() const;
};

// At most one path plus vertex-disjoint cycles.
struct OnePathCycle {
    CycleFamily family;
    std::optional<PCPath> path;

    int vertex_count() const {
        return family.vertex_count() + (path ? path->size() : 0);
    }
    bool covers(Vertex v) const;
};

// Structure checks against a host graph; std::nullopt when valid.
std::optional<std::string> cycle_issue(const EdgeColouredGraph& g, const OrientedCycle& c);
std::optional<std::string> family_issue(const EdgeColouredGraph& g, const CycleFamily& f);
std::optional<std::string> one_path_cycle_issue(const EdgeColouredGraph& g,
                                                const OnePathCycle& h);

// Spanning check on top of family_issue.
std::optional<std::string> two_factor_issue(const EdgeColouredGraph& g, const CycleFamily& f);

}  // namespace pcc
