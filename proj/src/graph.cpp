#include "pcc/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pcc {

EdgeColouredGraph::EdgeColouredGraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    colour_.assign(static_cast<size_t>(n) * n, kNoEdge);
    adj_.resize(n);
}

void EdgeColouredGraph::add_edge(Vertex u, Vertex v, ColourId colour) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    if (colour < 0) throw std::invalid_argument("negative colour id");
    if (has_edge(u, v))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" +
                                    std::to_string(v));
    colour_[static_cast<size_t>(u) * n_ + v] = colour;
    colour_[static_cast<size_t>(v) * n_ + u] = colour;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    max_colour_ = std::max(max_colour_, colour);
    ++m_;
}

std::vector<std::pair<Vertex, Vertex>> EdgeColouredGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int colour_degree(const EdgeColouredGraph& g, Vertex v) {
    g.check_vertex(v);
    std::set<ColourId> cols;
    for (Vertex u : g.neighbours(v)) cols.insert(g.colour(v, u));
    return static_cast<int>(cols.size());
}

int min_colour_degree(const EdgeColouredGraph& g) {
    if (g.vertex_count() == 0) return 0;
    int best = colour_degree(g, 0);
    for (Vertex v = 1; v < g.vertex_count(); ++v)
        best = std::min(best, colour_degree(g, v));
    return best;
}

int mono_degree(const EdgeColouredGraph& g, Vertex v, ColourId c) {
    g.check_vertex(v);
    int count = 0;
    for (Vertex u : g.neighbours(v))
        if (g.colour(v, u) == c) ++count;
    return count;
}

int delta1(const EdgeColouredGraph& g) {
    if (g.edge_count() == 0) return 0;
    int best = -1;
    std::set<ColourId> cols;
    for (const auto& [u, v] : g.edges()) cols.insert(g.colour(u, v));
    for (ColourId c : cols) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            int d = g.degree(v) - mono_degree(g, v, c);
            if (best < 0 || d < best) best = d;
        }
    }
    return best;
}

int max_mono_degree(const EdgeColouredGraph& g) {
    int best = 0;
    std::map<ColourId, int> counts;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        counts.clear();
        for (Vertex u : g.neighbours(v)) ++counts[g.colour(v, u)];
        for (const auto& [c, k] : counts) best = std::max(best, k);
    }
    return best;
}

namespace {

std::optional<std::string> sequence_issue(const EdgeColouredGraph& g,
                                          const std::vector<Vertex>& verts) {
    std::set<Vertex> seen;
    for (Vertex v : verts) {
        if (v < 0 || v >= g.vertex_count())
            return "vertex " + std::to_string(v) + " out of range";
        if (!seen.insert(v).second) return "repeated vertex " + std::to_string(v);
    }
    return std::nullopt;
}

std::string edge_name(Vertex u, Vertex v) {
    return std::to_string(u) + "-" + std::to_string(v);
}

}  // namespace

std::optional<std::string> pc_path_issue(const EdgeColouredGraph& g,
                                         const std::vector<Vertex>& verts) {
    if (verts.empty()) return "empty vertex sequence";
    if (auto issue = sequence_issue(g, verts)) return issue;
    for (size_t i = 0; i + 1 < verts.size(); ++i) {
        if (!g.has_edge(verts[i], verts[i + 1]))
            return "missing edge " + edge_name(verts[i], verts[i + 1]);
        if (i > 0 && g.colour(verts[i - 1], verts[i]) == g.colour(verts[i], verts[i + 1]))
            return "colour clash at vertex " + std::to_string(verts[i]) + " between edges " +
                   edge_name(verts[i - 1], verts[i]) + " and " + edge_name(verts[i], verts[i + 1]);
    }
    return std::nullopt;
}

std::optional<std::string> pc_cycle_issue(const EdgeColouredGraph& g,
                                          const std::vector<Vertex>& verts) {
    if (verts.size() < 3) return "cycle needs at least 3 vertices";
    if (auto issue = sequence_issue(g, verts)) return issue;
    size_t n = verts.size();
    for (size_t i = 0; i < n; ++i) {
        Vertex a = verts[i];
        Vertex b = verts[(i + 1) % n];
        if (!g.has_edge(a, b)) return "missing edge " + edge_name(a, b);
    }
    for (size_t i = 0; i < n; ++i) {
        Vertex prev = verts[(i + n - 1) % n];
        Vertex cur = verts[i];
        Vertex next = verts[(i + 1) % n];
        if (g.colour(prev, cur) == g.colour(cur, next))
            return "colour clash at vertex " + std::to_string(cur) + " between edges " +
                   edge_name(prev, cur) + " and " + edge_name(cur, next);
    }
    return std::nullopt;
}

bool is_pc_path(const EdgeColouredGraph& g, const std::vector<Vertex>& verts) {
    if (verts.empty()) throw std::invalid_argument("empty vertex sequence");
    if (auto issue = sequence_issue(g, verts)) throw std::invalid_argument(*issue);
    return !pc_path_issue(g, verts).has_value();
}

bool is_pc_cycle(const EdgeColouredGraph& g, const std::vector<Vertex>& verts) {
    if (verts.size() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    if (auto issue = sequence_issue(g, verts)) throw std::invalid_argument(*issue);
    return !pc_cycle_issue(g, verts).has_value();
}

EdgeColouredGraph edge_minimal_reduction(const EdgeColouredGraph& g) {
    struct Edge {
        Vertex u, v;
        ColourId c;
        bool alive;
    };
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v, g.colour(u, v), true});
    // scan in (colour, u, v) order; mono[] tracks per-vertex counts of the
    // colour class currently under inspection
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.c, a.u, a.v) < std::tie(b.c, b.u, b.v);
    });
    std::vector<int> mono(g.vertex_count(), 0);
    bool deleted = true;
    while (deleted) {
        deleted = false;
        size_t i = 0;
        while (i < edges.size() && !deleted) {
            ColourId c = edges[i].c;
            size_t j = i;
            while (j < edges.size() && edges[j].c == c) ++j;
            for (size_t e = i; e < j; ++e)
                if (edges[e].alive) {
                    ++mono[edges[e].u];
                    ++mono[edges[e].v];
                }
            for (size_t e = i; e < j && !deleted; ++e) {
                if (!edges[e].alive) continue;
                if (mono[edges[e].u] >= 2 && mono[edges[e].v] >= 2) {
                    edges[e].alive = false;
                    deleted = true;
                }
            }
            for (size_t e = i; e < j; ++e) {
                mono[edges[e].u] = 0;
                mono[edges[e].v] = 0;
            }
            i = j;
        }
    }
    EdgeColouredGraph out(g.vertex_count());
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    for (const Edge& e : edges)
        if (e.alive) out.add_edge(e.u, e.v, e.c);
    return out;
}

EdgeColouredGraph induced_subgraph(const EdgeColouredGraph& g, std::vector<Vertex> keep,
                                   std::vector<Vertex>* old_of_new) {
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
        throw std::invalid_argument("duplicate vertex in induced_subgraph");
    for (Vertex v : keep) g.check_vertex(v);
    std::vector<int> new_of_old(g.vertex_count(), -1);
    for (size_t i = 0; i < keep.size(); ++i) new_of_old[keep[i]] = static_cast<int>(i);
    EdgeColouredGraph out(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (Vertex u : g.neighbours(keep[i])) {
            int j = new_of_old[u];
            if (j > static_cast<int>(i)) out.add_edge(static_cast<int>(i), j, g.colour(keep[i], u));
        }
    if (old_of_new) *old_of_new = keep;
    return out;
}

std::string to_ecg(const EdgeColouredGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << ' ' << g.colour(u, v) << '\n';
    return out.str();
}

EdgeColouredGraph parse_ecg(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    std::optional<EdgeColouredGraph> g;
    int edges_read = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n >> m)) throw EcgParseError(line_no, "expected header 'n m'");
            if (n < 0 || m < 0) throw EcgParseError(line_no, "negative count in header");
            std::string extra;
            if (fields >> extra) throw EcgParseError(line_no, "trailing tokens after header");
            g.emplace(n);
            continue;
        }
        Vertex u, v;
        long long c;
        if (!(fields >> u >> v >> c)) throw EcgParseError(line_no, "expected 'u v c'");
        std::string extra;
        if (fields >> extra) throw EcgParseError(line_no, "trailing tokens after edge");
        if (edges_read >= m) throw EcgParseError(line_no, "more edges than declared");
        try {
            g->add_edge(u, v, static_cast<ColourId>(c));
        } catch (const std::invalid_argument& e) {
            throw EcgParseError(line_no, e.what());
        }
        ++edges_read;
    }
    if (!g) throw EcgParseError(line_no, "missing header");
    if (edges_read != m)
        throw EcgParseError(line_no, "declared " + std::to_string(m) + " edges, found " +
                                         std::to_string(edges_read));
    return *g;
}

}  // namespace pcc
