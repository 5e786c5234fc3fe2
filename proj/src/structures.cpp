#include "pcc/structures.hpp"

#include <algorithm>
#include <set>

namespace pcc {

int OrientedCycle::index_of(Vertex v) const {
    for (size_t i = 0; i < verts.size(); ++i)
        if (verts[i] == v) return static_cast<int>(i);
    return -1;
}

Vertex OrientedCycle::succ(Vertex v) const {
    int i = index_of(v);
    if (i < 0) throw std::invalid_argument("vertex not on cycle");
    return verts[(i + 1) % verts.size()];
}

Vertex OrientedCycle::pred(Vertex v) const {
    int i = index_of(v);
    if (i < 0) throw std::invalid_argument("vertex not on cycle");
    return verts[(i + verts.size() - 1) % verts.size()];
}

OrientedCycle OrientedCycle::canonical() const {
    if (verts.empty()) return *this;
    size_t n = verts.size();
    size_t at = std::min_element(verts.begin(), verts.end()) - verts.begin();
    std::vector<Vertex> fwd(n), bwd(n);
    for (size_t i = 0; i < n; ++i) {
        fwd[i] = verts[(at + i) % n];
        bwd[i] = verts[(at + n - i) % n];
    }
    return OrientedCycle{fwd <= bwd ? fwd : bwd};
}

int CycleFamily::vertex_count() const {
    int total = 0;
    for (const auto& c : cycles) total += c.size();
    return total;
}

bool CycleFamily::covers(Vertex v) const {
    for (const auto& c : cycles)
        if (c.contains(v)) return true;
    return false;
}

std::vector<char> CycleFamily::cover_mask(int n) const {
    std::vector<char> mask(n, 0);
    for (const auto& c : cycles)
        for (Vertex v : c.verts)
            if (v >= 0 && v < n) mask[v] = 1;
    return mask;
}

std::vector<Vertex> CycleFamily::vertices() const {
    std::vector<Vertex> out;
    for (const auto& c : cycles) out.insert(out.end(), c.verts.begin(), c.verts.end());
    std::sort(out.begin(), out.end());
    return out;
}

CycleFamily CycleFamily::canonical() const {
    CycleFamily out;
    for (const auto& c : cycles) out.cycles.push_back(c.canonical());
    std::sort(out.cycles.begin(), out.cycles.end(),
              [](const OrientedCycle& a, const OrientedCycle& b) {
                  return a.verts < b.verts;
              });
    return out;
}

bool OnePathCycle::covers(Vertex v) const {
    if (family.covers(v)) return true;
    if (path)
        for (Vertex u : path->verts)
            if (u == v) return true;
    return false;
}

std::optional<std::string> cycle_issue(const EdgeColouredGraph& g, const OrientedCycle& c) {
    return pc_cycle_issue(g, c.verts);
}

std::optional<std::string> family_issue(const EdgeColouredGraph& g, const CycleFamily& f) {
    std::set<Vertex> seen;
    for (size_t i = 0; i < f.cycles.size(); ++i) {
        if (auto issue = cycle_issue(g, f.cycles[i]))
            return "cycle " + std::to_string(i) + ": " + *issue;
        for (Vertex v : f.cycles[i].verts)
            if (!seen.insert(v).second)
                return "vertex " + std::to_string(v) + " on two cycles";
    }
    return std::nullopt;
}

std::optional<std::string> one_path_cycle_issue(const EdgeColouredGraph& g,
                                                const OnePathCycle& h) {
    if (auto issue = family_issue(g, h.family)) return issue;
    if (h.path) {
        if (auto issue = pc_path_issue(g, h.path->verts)) return "path: " + *issue;
        for (Vertex v : h.path->verts)
            if (h.family.covers(v))
                return "vertex " + std::to_string(v) + " on both path and a cycle";
    }
    return std::nullopt;
}

std::optional<std::string> two_factor_issue(const EdgeColouredGraph& g, const CycleFamily& f) {
    if (auto issue = family_issue(g, f)) return issue;
    if (f.vertex_count() != g.vertex_count())
        return "covers " + std::to_string(f.vertex_count()) + " of " +
               std::to_string(g.vertex_count()) + " vertices";
    return std::nullopt;
}

}  // namespace pcc
