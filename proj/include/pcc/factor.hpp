#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pcc/structures.hpp"

namespace pcc {

// How a representative neighbour of the centre vertex was selected when
// several neighbours share an edge colour. Covered candidates are ranked by
// how their cycle context can be exploited; lower rank wins, ties break to
// the smallest vertex.
enum class RepPick {
    Free,         // not on any cycle of the family
    FwdMatch,     // centre edge colour equals the candidate's forward cycle edge
    BwdMatch,     // centre edge colour equals the candidate's backward cycle edge
    NextMissing,  // candidate's successor is not adjacent to the centre
    NextDiffers,  // centre sees the successor in a different colour
    NextEqual,    // centre sees the successor in the same colour
};

// One representative neighbour per colour at the centre, plus the derived
// decomposition of cycle vertices the augmentation moves operate on.
struct ClassifiedNeighbourhood {
    Vertex centre = -1;
    std::vector<Vertex> reps;              // ascending; pairwise distinct centre colours
    std::map<Vertex, RepPick> pick;

    std::vector<Vertex> free_reps;         // reps off the family
    std::vector<Vertex> fwd_anchored;      // successors of covered reps, not also below
    std::vector<Vertex> bwd_anchored;      // predecessors of BwdMatch reps, not also above
    std::vector<Vertex> dual_anchored;     // reached both ways

    // Working colour per classified vertex; dual_anchored vertices carry the
    // sentinel, a colour absent from the graph.
    std::map<Vertex, ColourId> vertex_colour;
    ColourId sentinel_colour = -1;
};

// Requires x off the family. |fwd|+|bwd|+2|dual|+|free| always equals the
// colour degree of x.
ClassifiedNeighbourhood colour_neighbourhood(const EdgeColouredGraph& g,
                                             const CycleFamily& family, Vertex x);

// One augmentation step: returns a properly coloured family covering
// V(family) plus x (plus two currently free vertices when a triangle through
// x is used), or nullopt when no catalogued exchange applies. Move order:
// triangle over two free representatives; insertion of x plus a free
// representative into one cycle; merge of two cycles through x; single-cycle
// reroutes. Candidates scan in ascending vertex order.
std::optional<CycleFamily> augment_two_factor(const EdgeColouredGraph& g,
                                              const CycleFamily& family, Vertex x);

struct FactorBudgets {
    std::uint64_t fallback_nodes = 2'000'000;  // per bounded exhaustive rewrite
    std::uint64_t move_budget = 0;             // 0 = 50 * n^2
};

struct TwoFactorOutcome {
    std::optional<CycleFamily> family;
    CycleFamily partial;            // residual family when stuck
    std::vector<Vertex> uncovered;  // vertices left over when stuck
    std::string reason;
    bool ok() const { return family.has_value(); }
};

// Reduces the graph, seeds a family from greedy triangles, then augments one
// uncovered vertex at a time. With fallback enabled, a stuck vertex triggers
// bounded exhaustive rewrites: a cycle through x over free vertices, then a
// re-solve of x plus one or two existing cycles.
TwoFactorOutcome find_pc_two_factor(const EdgeColouredGraph& g, bool fallback,
                                    FactorBudgets budgets = {});

// Classification of path vertices around one end of a properly coloured
// path, used to re-close the path into cycles of prescribed minimum length.
struct EndpointClassification {
    struct End {
        Vertex end_vertex = -1;
        std::vector<Vertex> admissible;   // neighbours of the end avoiding its first edge colour
        std::vector<Vertex> anchors;      // admissible, on the path, clear of both guard zones
        std::vector<Vertex> fwd_attach;       // x: pred(x) anchored, attach colour = its forward edge
        std::vector<Vertex> bwd_attach_matched;  // x: succ(x) anchored, attach colour = its backward edge
        std::vector<Vertex> bwd_attach_clean;    // x: succ(x) anchored, attach colour = neither side
        std::vector<Vertex> bwd_attach;   // union of the two above
        std::vector<Vertex> junction;     // candidates for the auxiliary join graph
        std::vector<Vertex> dual_attach;  // in both attach sets
        std::vector<Vertex> single_attach;  // junction minus dual_attach
    };
    End head, tail;
    int guard = 0;  // ceil(k/2): positions stripped from each end
};

// Requires |P| >= 2. All sets are over V(P).
EndpointClassification classify_endpoints(const EdgeColouredGraph& g, const PCPath& path,
                                          int k);

// Auxiliary directed bipartite graph between the two junction sets; the two
// sides are kept disjoint even where they overlap on the path. A directed
// two-cycle yields a valid split of the path.
struct EndpointJoinGraph {
    std::vector<Vertex> head_side, tail_side;
    // adjacency by index into the side vectors
    std::vector<std::vector<char>> head_to_tail, tail_to_head;

    // (head vertex, tail vertex) pairs forming directed two-cycles, in
    // ascending (head position, tail position) order.
    std::vector<std::pair<Vertex, Vertex>> two_cycles() const;
};

EndpointJoinGraph endpoint_join_graph(const EndpointClassification& ec,
                                      const EdgeColouredGraph& g, const PCPath& path);

// Which rule certified each end of a chosen two-cycle.
enum class EndRole { FwdAttach, BwdAttach, PathEnd };

struct SplitError {
    std::string reason;
};

// Rebuilds the path's vertex set as properly coloured cycles, each of length
// at least k/2, according to the roles of the chosen junction pair. The
// remaining role combinations are handled by reversing the path and swapping
// the pair. Every produced cycle is verified; a violated colour or length
// condition comes back as a SplitError naming it.
std::variant<CycleFamily, SplitError> split_path_to_cycles(const EdgeColouredGraph& g,
                                                           const PCPath& path, int k, Vertex u,
                                                           Vertex w, EndRole head_role,
                                                           EndRole tail_role);

struct MinLengthOutcome {
    std::optional<CycleFamily> family;
    OnePathCycle stuck;  // state at the point of failure
    std::string reason;
    bool ok() const { return family.has_value(); }
};

// Spanning properly coloured 2-factor in which every cycle has length at
// least k/2 (length*2 >= k, exact integer comparison). Maintains a properly
// coloured 1-path-cycle and applies, in order: coverage-increasing path
// extensions, path-lengthening cycle rotations, direct path closure, and the
// junction split. k is clamped to [1, n].
MinLengthOutcome find_pc_two_factor_min_length(const EdgeColouredGraph& g, int k,
                                               FactorBudgets budgets = {});

struct PathCoverOutcome {
    std::optional<std::vector<PCPath>> paths;
    OnePathCycle stuck;
    std::string reason;
    bool ok() const { return paths.has_value(); }
};

// Cuts each cycle of the min-length 2-factor once: at most 2n/k vertex-
// disjoint properly coloured paths spanning the graph.
PathCoverOutcome path_cover(const EdgeColouredGraph& g, int k, FactorBudgets budgets = {});

}  // namespace pcc
