#include "pcc/experiment.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "pcc/factor.hpp"
#include "pcc/generate.hpp"
#include "pcc/oracle.hpp"
#include "pcc/rng.hpp"

namespace pcc {

bool is_connected(const EdgeColouredGraph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbours(v))
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == n;
}

namespace {

// Random complete instance aimed at a given minimum colour degree; rejection
// happens in the caller.
EdgeColouredGraph sample_candidate(int n, int delta, Rng& rng) {
    GenSpec spec;
    spec.kind = GenSpec::Kind::RandomComplete;
    spec.n = n;
    // colour degree of a capped complete colouring is at least ceil((n-1)/cap)
    int cap = std::max(1, delta > 0 ? (n - 1) / delta : n - 1);
    spec.mono_cap = cap;
    spec.colours = n;
    spec.seed = rng.next();
    return gen_random(spec);
}

}  // namespace

std::string scan_threshold(const ThresholdScanConfig& cfg) {
    std::ostringstream out;
    out << "# pcc threshold scan v1\n";
    out << "n,delta,instances,oracle_exists,oracle_none,oracle_budget,"
           "construct_success,construct_fail,agreement\n";
    Rng master(cfg.seed);
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        for (int delta = 1; delta < n; ++delta) {
            Rng cell = master.fork(static_cast<std::uint64_t>(n) * 1000 + delta);
            std::vector<EdgeColouredGraph> instances;
            if (3 * delta < 2 * n) instances.push_back(gen_extremal(n, delta));
            int attempts = 0;
            while (static_cast<int>(instances.size()) < cfg.samples_per_cell &&
                   attempts < cfg.samples_per_cell * 40) {
                ++attempts;
                EdgeColouredGraph g = sample_candidate(n, delta, cell);
                if (min_colour_degree(g) == delta) instances.push_back(g);
            }
            if (instances.empty()) continue;
            int exists = 0, none = 0, budget = 0, made = 0, failed = 0, agree = 0;
            for (const auto& g : instances) {
                auto oracle = oracle_pc_two_factor(g, OracleLimits{cfg.oracle_budget});
                auto constructive = find_pc_two_factor(g, true);
                if (oracle.status == OracleStatus::Found) ++exists;
                else if (oracle.status == OracleStatus::None) ++none;
                else ++budget;
                if (constructive.ok()) ++made;
                else ++failed;
                if (oracle.status != OracleStatus::BudgetExceeded &&
                    (oracle.status == OracleStatus::Found) == constructive.ok())
                    ++agree;
            }
            out << n << ',' << delta << ',' << instances.size() << ',' << exists << ','
                << none << ',' << budget << ',' << made << ',' << failed << ',' << agree
                << '\n';
        }
    }
    return out.str();
}

ConjectureScanResult scan_conjecture(const ConjectureScanConfig& cfg) {
    ConjectureScanResult result;
    std::ostringstream out;
    out << "# pcc conjecture scan v1\n";
    out << "n,instance,delta_c,longest_pc_path,bound,pc_hamilton,violation\n";
    Rng master(cfg.seed);
    int dumped = 0;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        std::vector<EdgeColouredGraph> instances;
        for (int delta = 1; 3 * delta < 2 * n; ++delta)
            instances.push_back(gen_extremal(n, delta));
        Rng cell = master.fork(n);
        for (int s = 0; s < cfg.samples_per_n; ++s) {
            GenSpec spec;
            spec.kind = GenSpec::Kind::RandomGnp;
            spec.n = n;
            spec.p = 0.4 + 0.5 * cell.unit();
            spec.gnp_colours = 1 + static_cast<int>(cell.below(n));
            spec.seed = cell.next();
            instances.push_back(gen_random(spec));
        }
        int id = 0;
        for (const auto& g : instances) {
            ++id;
            if (!is_connected(g)) continue;
            int delta_c = min_colour_degree(g);
            auto longest = oracle_longest_pc_path(g, OracleLimits{cfg.oracle_budget});
            auto ham = n >= 3 ? oracle_pc_cycle(g, n, OracleLimits{cfg.oracle_budget})
                              : CycleOracleResult{OracleStatus::None, std::nullopt, 0};
            if (!longest.exact || ham.status == OracleStatus::BudgetExceeded) continue;
            int bound = 3 * delta_c / 2;
            bool has_ham = ham.status == OracleStatus::Found;
            bool violation = !has_ham && longest.value < bound;
            out << n << ',' << id << ',' << delta_c << ',' << longest.value << ',' << bound
                << ',' << (has_ham ? 1 : 0) << ',' << (violation ? 1 : 0) << '\n';
            if (violation) {
                ++result.violations;
                if (!cfg.dump_dir.empty()) {
                    std::string name = cfg.dump_dir + "/violation_n" + std::to_string(n) +
                                       "_" + std::to_string(dumped++) + ".ecg";
                    std::ofstream f(name);
                    f << to_ecg(g);
                    result.dumped_files.push_back(name);
                }
            }
        }
    }
    result.csv = out.str();
    return result;
}

}  // namespace pcc
