#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcc/graph.hpp"

namespace pcc {

struct ThresholdScanConfig {
    int n_min = 5, n_max = 8;
    int samples_per_cell = 50;
    std::uint64_t seed = 1;
    std::uint64_t oracle_budget = 50'000'000;
};

// For each (n, delta) cell: the deterministic sharp instance (when one
// exists for the cell) plus rejection-sampled random instances with minimum
// colour degree exactly delta; each instance is run through the exhaustive
// two-factor oracle and the constructive finder. Returns CSV.
std::string scan_threshold(const ThresholdScanConfig& cfg);

struct ConjectureScanConfig {
    int n_min = 4, n_max = 8;
    int samples_per_n = 30;
    std::uint64_t seed = 1;
    std::uint64_t oracle_budget = 50'000'000;
    std::string dump_dir;  // violating instances written here as .ecg when set
};

struct ConjectureScanResult {
    std::string csv;
    int violations = 0;
    std::vector<std::string> dumped_files;
};

// Records, per connected instance, the minimum colour degree, the longest
// properly coloured path, and whether a properly coloured Hamiltonian cycle
// exists; flags instances with neither a Hamiltonian cycle nor a path of
// length 3*delta_c/2.
ConjectureScanResult scan_conjecture(const ConjectureScanConfig& cfg);

bool is_connected(const EdgeColouredGraph& g);

}  // namespace pcc
