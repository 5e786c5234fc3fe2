#include "pcc/generate.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "pcc/rng.hpp"

namespace pcc {

EdgeColouredGraph gen_extremal(int n, int delta) {
    if (delta < 1) throw std::invalid_argument("extremal construction needs delta >= 1");
    if (3 * delta >= 2 * n)
        throw std::invalid_argument("extremal construction needs 3*delta < 2*n");
    EdgeColouredGraph g(n);
    ColourId next = 0;
    for (Vertex i = 0; i < delta; ++i)
        for (Vertex j = i + 1; j < delta; ++j) g.add_edge(i, j, next++);
    for (Vertex i = 0; i < delta; ++i) {
        ColourId star = next + i;
        for (Vertex y = delta; y < n; ++y) g.add_edge(i, y, star);
    }
    return g;
}

namespace {

// One proper-colouring round decomposition of K_n (a near-1-factorization);
// round r holds the matching of colour r.
std::vector<std::vector<std::pair<Vertex, Vertex>>> rounds_of_complete(int n) {
    int m = n % 2 == 0 ? n : n + 1;  // phantom vertex for odd n
    std::vector<std::vector<std::pair<Vertex, Vertex>>> rounds(m - 1);
    for (int r = 0; r < m - 1; ++r) {
        auto push = [&](int a, int b) {
            if (a < n && b < n) rounds[r].push_back({std::min(a, b), std::max(a, b)});
        };
        push(m - 1, r);
        for (int i = 1; i <= (m - 2) / 2; ++i)
            push((r + i) % (m - 1), (r - i + (m - 1)) % (m - 1));
    }
    return rounds;
}

EdgeColouredGraph complete_by_rounds(int n, int pool, int cap, Rng& rng) {
    auto rounds = rounds_of_complete(n);
    int needed = (static_cast<int>(rounds.size()) + cap - 1) / cap;
    if (needed > pool)
        throw std::invalid_argument("mono cap " + std::to_string(cap) + " with " +
                                    std::to_string(pool) + " colours cannot colour K_" +
                                    std::to_string(n));
    std::vector<int> round_order(rounds.size());
    std::iota(round_order.begin(), round_order.end(), 0);
    std::vector<int> colour_order(pool);
    std::iota(colour_order.begin(), colour_order.end(), 0);
    for (size_t i = round_order.size(); i > 1; --i)
        std::swap(round_order[i - 1], round_order[rng.below(i)]);
    for (size_t i = colour_order.size(); i > 1; --i)
        std::swap(colour_order[i - 1], colour_order[rng.below(i)]);
    EdgeColouredGraph g(n);
    for (size_t i = 0; i < round_order.size(); ++i) {
        ColourId c = colour_order[i / cap];
        for (auto [u, v] : rounds[round_order[i]]) g.add_edge(u, v, c);
    }
    return g;
}

EdgeColouredGraph complete_greedy(int n, int pool, int cap, Rng& rng, bool* ok) {
    EdgeColouredGraph g(n);
    std::vector<std::vector<int>> used(n, std::vector<int>(pool, 0));
    std::vector<ColourId> options;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            options.clear();
            for (ColourId c = 0; c < pool; ++c)
                if (used[u][c] < cap && used[v][c] < cap) options.push_back(c);
            if (options.empty()) {
                *ok = false;
                return g;
            }
            ColourId c = options[rng.below(options.size())];
            ++used[u][c];
            ++used[v][c];
            g.add_edge(u, v, c);
        }
    *ok = true;
    return g;
}

}  // namespace

EdgeColouredGraph gen_random(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("need at least one vertex");
    Rng rng(spec.seed);
    switch (spec.kind) {
        case GenSpec::Kind::Extremal:
            return gen_extremal(spec.n, spec.delta);
        case GenSpec::Kind::RandomComplete: {
            int n = spec.n;
            int pool = spec.colours > 0 ? spec.colours : std::max(1, n - 1);
            int cap = spec.mono_cap;
            if (cap < 1) throw std::invalid_argument("mono cap must be >= 1");
            if (static_cast<long long>(pool) * cap < n - 1)
                throw std::invalid_argument("mono cap " + std::to_string(cap) + " with " +
                                            std::to_string(pool) +
                                            " colours cannot colour K_" + std::to_string(n));
            for (int attempt = 0; attempt < 10; ++attempt) {
                Rng sub = rng.fork(attempt);
                bool ok = false;
                EdgeColouredGraph g = complete_greedy(n, pool, cap, sub, &ok);
                if (ok) return g;
            }
            Rng sub = rng.fork(10);
            return complete_by_rounds(n, pool, cap, sub);
        }
        case GenSpec::Kind::RandomGnp: {
            if (spec.p < 0.0 || spec.p > 1.0) throw std::invalid_argument("p outside [0,1]");
            EdgeColouredGraph g(spec.n);
            ColourId next = 0;
            for (Vertex u = 0; u < spec.n; ++u)
                for (Vertex v = u + 1; v < spec.n; ++v) {
                    if (rng.unit() >= spec.p) continue;
                    ColourId c = spec.gnp_colours > 0
                                     ? static_cast<ColourId>(rng.below(spec.gnp_colours))
                                     : next;
                    g.add_edge(u, v, c);
                    ++next;
                }
            return g;
        }
    }
    throw std::invalid_argument("unknown generator kind");
}

}  // namespace pcc
