#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "pcc/certificate.hpp"
#include "pcc/experiment.hpp"
#include "pcc/factor.hpp"
#include "pcc/generate.hpp"
#include "pcc/graph.hpp"
#include "pcc/oracle.hpp"
#include "pcc/pancyclic.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitInputError = 2;

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

pcc::EdgeColouredGraph load_graph(const std::string& path) {
    if (path == "-" || path.empty()) return pcc::parse_ecg(slurp(std::cin));
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    return pcc::parse_ecg(slurp(f));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
    f << text;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PCC_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

pcc::Rational parse_eps(const std::string& text) {
    auto slash = text.find('/');
    pcc::Rational r;
    if (slash != std::string::npos) {
        r.num = std::stoll(text.substr(0, slash));
        r.den = std::stoll(text.substr(slash + 1));
    } else {
        double v = std::stod(text);
        r.den = 1'000'000;
        r.num = static_cast<long long>(v * r.den + 0.5);
    }
    if (r.num <= 0 || r.den <= 0) throw std::runtime_error("epsilon must be positive");
    long long g = std::gcd(r.num, r.den);
    r.num /= g;
    r.den /= g;
    return r;
}

void write_cert(const pcc::Certificate& cert, const std::string& out_path) {
    if (!out_path.empty()) emit(pcc::to_text(cert), out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"properly coloured cycle toolkit"};
    app.require_subcommand(1);

    std::string graph_path = "-";
    std::string out_path;
    std::string cert_out;
    std::uint64_t seed = default_seed();
    std::uint64_t budget = 100'000'000;
    std::string eps_text = "1/20";
    bool fallback = false;

    // analyze
    auto* analyze = app.add_subcommand("analyze", "colour degree statistics of a graph");
    analyze->add_option("graph", graph_path, "input .ecg file, '-' for stdin");

    // gen
    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    int gen_n = 9, gen_delta = 5, gen_colours = 0, gen_mono_cap = 1, gen_gnp_colours = 0;
    double gen_p = 0.5;
    auto* gen_ext = gen->add_subcommand("extremal", "sharp instance with delta below 2n/3");
    gen_ext->add_option("--n", gen_n)->required();
    gen_ext->add_option("--delta", gen_delta)->required();
    gen_ext->add_option("-o,--out", out_path);
    auto* gen_rand = gen->add_subcommand("random", "random complete colouring with a mono cap");
    gen_rand->add_option("--n", gen_n)->required();
    gen_rand->add_option("--colours", gen_colours, "colour pool size; 0 = n-1");
    gen_rand->add_option("--mono-cap", gen_mono_cap, "max same-coloured edges per vertex");
    gen_rand->add_option("--seed", seed);
    gen_rand->add_option("-o,--out", out_path);
    auto* gen_gnp = gen->add_subcommand("gnp", "binomial random graph");
    gen_gnp->add_option("--n", gen_n)->required();
    gen_gnp->add_option("--p", gen_p);
    gen_gnp->add_option("--gnp-colours", gen_gnp_colours, "0 = rainbow");
    gen_gnp->add_option("--seed", seed);
    gen_gnp->add_option("-o,--out", out_path);

    // find
    auto* find = app.add_subcommand("find", "constructive searches");
    find->require_subcommand(1);
    int find_k = 2, find_length = 0, find_vertex = -1;
    auto add_common = [&](CLI::App* sub, bool with_graph = true) {
        if (with_graph) sub->add_option("graph", graph_path, "input .ecg file, '-' for stdin");
        sub->add_flag("--fallback", fallback, "exhaustive rewrites when the catalogue is stuck");
        sub->add_option("--seed", seed);
        sub->add_option("--epsilon", eps_text);
        sub->add_option("--budget", budget);
        sub->add_option("--cert-out", cert_out, "write the certificate here");
    };
    auto* find_2f = find->add_subcommand("2factor", "properly coloured 2-factor");
    add_common(find_2f);
    auto* find_ml = find->add_subcommand("2factor-minlen", "2-factor with cycles >= k/2");
    find_ml->add_option("--k", find_k)->required();
    add_common(find_ml);
    auto* find_pc = find->add_subcommand("path-cover", "spanning cover by <= 2n/k paths");
    find_pc->add_option("--k", find_k)->required();
    add_common(find_pc);
    auto* find_cycle = find->add_subcommand("cycle", "properly coloured cycle of given length");
    find_cycle->add_option("--length", find_length)->required();
    add_common(find_cycle);
    auto* find_ham = find->add_subcommand("hamilton", "properly coloured Hamiltonian cycle");
    add_common(find_ham);
    auto* find_tri = find->add_subcommand("triangle", "properly coloured triangle");
    find_tri->add_option("--vertex", find_vertex, "required cycle member; -1 = any");
    add_common(find_tri);
    auto* find_pan = find->add_subcommand("pancyclic", "cycles of every length 3..n");
    add_common(find_pan);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive ground-truth searches");
    oracle->require_subcommand(1);
    auto* o_2f = oracle->add_subcommand("two-factor", "spanning cycle family or none");
    o_2f->add_option("graph", graph_path);
    o_2f->add_option("--budget", budget);
    int oracle_length = 3;
    auto* o_cycle = oracle->add_subcommand("cycle", "cycle of exact length or none");
    o_cycle->add_option("--length", oracle_length)->required();
    o_cycle->add_option("graph", graph_path);
    o_cycle->add_option("--budget", budget);
    auto* o_cover = oracle->add_subcommand("max-cover", "max vertices under disjoint cycles");
    o_cover->add_option("graph", graph_path);
    o_cover->add_option("--budget", budget);
    auto* o_path = oracle->add_subcommand("longest-path", "longest properly coloured path");
    o_path->add_option("graph", graph_path);
    o_path->add_option("--budget", budget);

    // verify
    auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
    std::string verify_graph, verify_cert;
    verify->add_option("graph", verify_graph)->required();
    verify->add_option("certificate", verify_cert)->required();

    // experiment
    auto* experiment = app.add_subcommand("experiment", "scans and reports");
    experiment->require_subcommand(1);
    int exp_nmin = 5, exp_nmax = 8, exp_samples = 20;
    std::string dump_dir;
    auto* exp_thr = experiment->add_subcommand("threshold", "two-factor existence by (n,delta)");
    exp_thr->add_option("--n-min", exp_nmin);
    exp_thr->add_option("--n-max", exp_nmax);
    exp_thr->add_option("--samples", exp_samples);
    exp_thr->add_option("--seed", seed);
    exp_thr->add_option("-o,--out", out_path);
    auto* exp_conj = experiment->add_subcommand("conjecture", "long path versus Hamiltonicity");
    exp_conj->add_option("--n-min", exp_nmin);
    exp_conj->add_option("--n-max", exp_nmax);
    exp_conj->add_option("--samples", exp_samples);
    exp_conj->add_option("--seed", seed);
    exp_conj->add_option("--dump-dir", dump_dir);
    exp_conj->add_option("-o,--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            pcc::EdgeColouredGraph g = load_graph(graph_path);
            std::cout << "n " << g.vertex_count() << "\nm " << g.edge_count() << "\ndelta_c "
                      << pcc::min_colour_degree(g) << "\ndelta_c1 " << pcc::delta1(g)
                      << "\nmax_mono " << pcc::max_mono_degree(g) << "\n";
            return kExitFound;
        }
        if (*gen) {
            pcc::GenSpec spec;
            spec.n = gen_n;
            spec.seed = seed;
            if (*gen_ext) {
                spec.kind = pcc::GenSpec::Kind::Extremal;
                spec.delta = gen_delta;
            } else if (*gen_rand) {
                spec.kind = pcc::GenSpec::Kind::RandomComplete;
                spec.colours = gen_colours;
                spec.mono_cap = gen_mono_cap;
            } else {
                spec.kind = pcc::GenSpec::Kind::RandomGnp;
                spec.p = gen_p;
                spec.gnp_colours = gen_gnp_colours;
            }
            emit(pcc::to_ecg(pcc::gen_random(spec)), out_path);
            return kExitFound;
        }
        if (*find) {
            pcc::EdgeColouredGraph g = load_graph(graph_path);
            pcc::DriverConfig cfg;
            cfg.eps = parse_eps(eps_text);
            cfg.seed = seed;
            cfg.node_budget = budget;
            if (*find_2f) {
                auto r = pcc::find_pc_two_factor(g, fallback);
                if (!r.ok()) {
                    std::cout << "not-found: " << r.reason << " (uncovered "
                              << r.uncovered.size() << ")\n";
                    return kExitNotFound;
                }
                auto cert = pcc::Certificate::two_factor(*r.family, "find_pc_two_factor");
                std::cout << pcc::to_text(cert);
                write_cert(cert, cert_out);
                return kExitFound;
            }
            if (*find_ml || *find_pc) {
                if (*find_ml) {
                    auto r = pcc::find_pc_two_factor_min_length(g, find_k);
                    if (!r.ok()) {
                        std::cout << "not-found: " << r.reason << "\n";
                        return kExitNotFound;
                    }
                    auto cert = pcc::Certificate::two_factor(
                        *r.family, "find_pc_two_factor_min_length k=" + std::to_string(find_k));
                    std::cout << pcc::to_text(cert);
                    write_cert(cert, cert_out);
                    return kExitFound;
                }
                auto r = pcc::path_cover(g, find_k);
                if (!r.ok()) {
                    std::cout << "not-found: " << r.reason << "\n";
                    return kExitNotFound;
                }
                auto cert = pcc::Certificate::path_cover(
                    *r.paths, "path_cover k=" + std::to_string(find_k));
                std::cout << pcc::to_text(cert);
                write_cert(cert, cert_out);
                return kExitFound;
            }
            if (*find_cycle || *find_ham) {
                int l = *find_ham ? g.vertex_count() : find_length;
                std::optional<pcc::OrientedCycle> cycle;
                std::string why;
                if (l == 3) {
                    for (pcc::Vertex x = 0; x < g.vertex_count() && !cycle; ++x) {
                        auto t = pcc::find_pc_triangle(g, x);
                        if (t.ok()) cycle = t.triangle;
                        else why = t.reason;
                    }
                } else if (l >= 4 && l <= g.vertex_count()) {
                    auto shared = pcc::build_shared_absorber(g, cfg);
                    if (l >= 6 && shared.ok() &&
                        shared.shared->cycle.cycle.size() <= l) {
                        auto r = pcc::find_pc_cycle_long(g, l, cfg, &*shared.shared);
                        if (r.ok()) cycle = r.cycle;
                        else why = r.reason;
                    }
                    if (!cycle) {
                        auto r = pcc::find_pc_cycle_short(g, l, cfg);
                        if (r.ok()) cycle = r.cycle;
                        else why += (why.empty() ? "" : "; ") + r.reason;
                    }
                    if (!cycle && l >= 6) {
                        auto r = pcc::find_pc_cycle_long(g, l, cfg, nullptr);
                        if (r.ok()) cycle = r.cycle;
                        else why += (why.empty() ? "" : "; ") + r.reason;
                    }
                } else {
                    std::cerr << "length out of range\n";
                    return kExitInputError;
                }
                if (!cycle) {
                    std::cout << "not-found: " << why << "\n";
                    return kExitNotFound;
                }
                auto cert = pcc::Certificate::cycle_of_length(*cycle, l, "find_pc_cycle");
                std::cout << pcc::to_text(cert);
                write_cert(cert, cert_out);
                return kExitFound;
            }
            if (*find_tri) {
                pcc::TriangleOutcome best;
                if (find_vertex >= 0) {
                    best = pcc::find_pc_triangle(g, find_vertex);
                } else {
                    for (pcc::Vertex x = 0; x < g.vertex_count(); ++x) {
                        best = pcc::find_pc_triangle(g, x);
                        if (best.ok()) break;
                    }
                }
                if (!best.ok()) {
                    std::cout << "not-found: " << best.reason << "\n";
                    return kExitNotFound;
                }
                auto cert = pcc::Certificate::triangle(*best.triangle, "find_pc_triangle");
                std::cout << pcc::to_text(cert);
                write_cert(cert, cert_out);
                return kExitFound;
            }
            if (*find_pan) {
                auto report = pcc::pancyclic_all(g, cfg);
                std::cout << report.summary_csv();
                if (!cert_out.empty()) {
                    for (const auto& [l, r] : report.by_length)
                        if (r.ok) {
                            std::ofstream f(cert_out + std::to_string(l) + ".cert");
                            f << pcc::to_text(r.cert);
                        }
                }
                return report.successes == report.requested ? kExitFound : kExitNotFound;
            }
        }
        if (*oracle) {
            pcc::EdgeColouredGraph g = load_graph(graph_path);
            pcc::OracleLimits limits{budget};
            if (*o_2f) {
                auto r = pcc::oracle_pc_two_factor(g, limits);
                if (r.status == pcc::OracleStatus::Found) {
                    std::cout << pcc::to_text(
                        pcc::Certificate::two_factor(*r.family, "oracle_pc_two_factor"));
                    return kExitFound;
                }
                std::cout << (r.status == pcc::OracleStatus::None ? "none\n"
                                                                  : "budget-exceeded\n");
                return kExitNotFound;
            }
            if (*o_cycle) {
                auto r = pcc::oracle_pc_cycle(g, oracle_length, limits);
                if (r.status == pcc::OracleStatus::Found) {
                    std::cout << pcc::to_text(pcc::Certificate::cycle_of_length(
                        *r.cycle, oracle_length, "oracle_pc_cycle"));
                    return kExitFound;
                }
                std::cout << (r.status == pcc::OracleStatus::None ? "none\n"
                                                                  : "budget-exceeded\n");
                return kExitNotFound;
            }
            if (*o_cover) {
                auto r = pcc::oracle_max_pc_cycle_cover(g, limits);
                std::cout << "max-cover " << r.value << (r.exact ? "" : " (lower bound)")
                          << "\n";
                return r.exact ? kExitFound : kExitNotFound;
            }
            auto r = pcc::oracle_longest_pc_path(g, limits);
            std::cout << "longest-path " << r.value << (r.exact ? "" : " (lower bound)")
                      << "\n";
            return r.exact ? kExitFound : kExitNotFound;
        }
        if (*verify) {
            pcc::EdgeColouredGraph g = load_graph(verify_graph);
            std::ifstream f(verify_cert);
            if (!f) throw std::runtime_error("cannot open '" + verify_cert + "'");
            pcc::Certificate cert = pcc::parse_certificate(slurp(f));
            auto v = pcc::validate_certificate(g, cert);
            if (v.ok) {
                std::cout << "valid\n";
                return kExitFound;
            }
            std::cout << "invalid: " << v.reason << "\n";
            return kExitNotFound;
        }
        if (*experiment) {
            if (*exp_thr) {
                pcc::ThresholdScanConfig tc;
                tc.n_min = exp_nmin;
                tc.n_max = exp_nmax;
                tc.samples_per_cell = exp_samples;
                tc.seed = seed;
                emit(pcc::scan_threshold(tc), out_path);
                return kExitFound;
            }
            pcc::ConjectureScanConfig cc;
            cc.n_min = exp_nmin;
            cc.n_max = exp_nmax;
            cc.samples_per_n = exp_samples;
            cc.seed = seed;
            cc.dump_dir = dump_dir;
            auto r = pcc::scan_conjecture(cc);
            emit(r.csv, out_path);
            std::cerr << "violations: " << r.violations << "\n";
            return kExitFound;
        }
    } catch (const pcc::EcgParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const pcc::CertParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
