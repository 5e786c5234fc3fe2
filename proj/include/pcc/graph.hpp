#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcc {

using Vertex = int;
using ColourId = int;

inline constexpr ColourId kNoEdge = -1;

// Undirected simple graph with one colour per edge. Vertices are 0..n-1,
// colours are arbitrary non-negative integers (ids need not be contiguous).
// Algorithms treat a built graph as immutable and take it by const reference.
class EdgeColouredGraph {
public:
    explicit EdgeColouredGraph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    void add_edge(Vertex u, Vertex v, ColourId colour);

    bool has_edge(Vertex u, Vertex v) const {
        return colour_at(u, v) != kNoEdge;
    }
    // kNoEdge when u and v are not adjacent.
    ColourId colour(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return colour_at(u, v);
    }
    const std::vector<Vertex>& neighbours(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(Vertex v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    // Edges as (min endpoint, max endpoint), sorted; the canonical order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;
    ColourId max_colour_id() const { return max_colour_; }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " out of range [0," + std::to_string(n_) + ")");
    }

private:
    ColourId colour_at(Vertex u, Vertex v) const {
        return colour_[static_cast<size_t>(u) * n_ + v];
    }

    int n_ = 0;
    int m_ = 0;
    ColourId max_colour_ = kNoEdge;
    std::vector<ColourId> colour_;          // n*n matrix, kNoEdge = absent
    std::vector<std::vector<Vertex>> adj_;  // sorted neighbour lists
};

// Number of distinct colours on edges at v.
int colour_degree(const EdgeColouredGraph& g, Vertex v);

// Minimum colour degree over all vertices; 0 for an edgeless graph.
int min_colour_degree(const EdgeColouredGraph& g);

// Number of colour-c edges at v.
int mono_degree(const EdgeColouredGraph& g, Vertex v, ColourId c);

// Minimum, over vertices v and colours c, of deg(v) minus the number of
// colour-c edges at v. Equals the minimum over monochromatic subgraphs H of
// the minimum degree of G - H, since enlarging H to a full colour class only
// lowers degrees. 0 for an edgeless graph.
int delta1(const EdgeColouredGraph& g);

// Largest number of same-coloured edges meeting at a single vertex.
int max_mono_degree(const EdgeColouredGraph& g);

// True iff consecutive pairs are edges and adjacent edges have distinct
// colours. Distinct in-range vertices are a precondition (input error
// otherwise); missing edges just give false. A single vertex is a valid
// (trivial) path.
bool is_pc_path(const EdgeColouredGraph& g, const std::vector<Vertex>& verts);

// Cycle variant: wrap-around edge included in both adjacency checks.
bool is_pc_cycle(const EdgeColouredGraph& g, const std::vector<Vertex>& verts);

// Non-throwing checkers used by certificate validation. Return a reason when
// the sequence fails (including malformed input), std::nullopt when fine.
std::optional<std::string> pc_path_issue(const EdgeColouredGraph& g,
                                         const std::vector<Vertex>& verts);
std::optional<std::string> pc_cycle_issue(const EdgeColouredGraph& g,
                                          const std::vector<Vertex>& verts);

// Deletes edges uv whose colour class leaves both u and v with two or more
// edges of that colour, until none remain. Preserves every vertex's set of
// incident colours, so all colour degrees are unchanged; afterwards every
// monochromatic subgraph is a disjoint union of stars. Scan order: colours
// ascending, edges in lexicographic order, restart after each deletion.
EdgeColouredGraph edge_minimal_reduction(const EdgeColouredGraph& g);

// Subgraph induced by `keep` (need not be sorted; duplicates rejected).
// Vertices are renumbered 0..keep.size()-1 in ascending order of the
// originals; old_of_new[i] gives the original id when requested.
EdgeColouredGraph induced_subgraph(const EdgeColouredGraph& g,
                                   std::vector<Vertex> keep,
                                   std::vector<Vertex>* old_of_new = nullptr);

struct EcgParseError : std::runtime_error {
    EcgParseError(int line_no, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
          line(line_no) {}
    int line;
};

// Text format: first data line "n m", then m lines "u v c". Lines whose first
// non-blank character is '#' are comments. Serialization is canonical:
// edges sorted by (min endpoint, max endpoint).
std::string to_ecg(const EdgeColouredGraph& g);
EdgeColouredGraph parse_ecg(const std::string& text);

}  // namespace pcc
