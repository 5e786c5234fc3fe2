#pragma once

#include <cstdint>
#include <optional>

#include "pcc/structures.hpp"

namespace pcc {

// Exhaustive searches, intended for small instances. Every oracle carries a
// soft node budget so an oversized input aborts with an explicit outcome
// instead of hanging; BudgetExceeded is distinct from None.
struct OracleLimits {
    std::uint64_t node_budget = 100'000'000;
};

enum class OracleStatus { Found, None, BudgetExceeded };

struct CycleOracleResult {
    OracleStatus status = OracleStatus::None;
    std::optional<OrientedCycle> cycle;
    std::uint64_t nodes = 0;
};

// Properly coloured cycle of length exactly `length` (vertex count), or proof
// by exhaustion that none exists. Witnesses are deterministic: extension from
// the lowest-index start vertex, neighbours ascending.
CycleOracleResult oracle_pc_cycle(const EdgeColouredGraph& g, int length,
                                  OracleLimits limits = {});

struct TwoFactorOracleResult {
    OracleStatus status = OracleStatus::None;
    std::optional<CycleFamily> family;
    std::uint64_t nodes = 0;
};

// Spanning family of vertex-disjoint properly coloured cycles, or none.
TwoFactorOracleResult oracle_pc_two_factor(const EdgeColouredGraph& g,
                                           OracleLimits limits = {});

struct CountOracleResult {
    int value = 0;      // exact when `exact`, otherwise a lower bound
    bool exact = true;
    std::uint64_t nodes = 0;
};

// Maximum number of vertices spanned by vertex-disjoint properly coloured
// cycles (0 when the graph has none).
CountOracleResult oracle_max_pc_cycle_cover(const EdgeColouredGraph& g,
                                            OracleLimits limits = {});

// Maximum edge count over all properly coloured paths.
CountOracleResult oracle_longest_pc_path(const EdgeColouredGraph& g,
                                         OracleLimits limits = {});

}  // namespace pcc
