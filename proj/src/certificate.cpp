#include "pcc/certificate.hpp"

#include <set>
#include <sstream>

namespace pcc {

Certificate Certificate::two_factor(CycleFamily f, std::string note) {
    Certificate c;
    c.kind = CertKind::TwoFactor;
    c.family = std::move(f);
    c.note = std::move(note);
    return c;
}

Certificate Certificate::cycle_of_length(OrientedCycle cyc, int length, std::string note) {
    Certificate c;
    c.kind = CertKind::CycleOfLength;
    c.cycle = std::move(cyc);
    c.length = length;
    c.note = std::move(note);
    return c;
}

Certificate Certificate::path_cover(std::vector<PCPath> p, std::string note) {
    Certificate c;
    c.kind = CertKind::PathCover;
    c.paths = std::move(p);
    c.note = std::move(note);
    return c;
}

Certificate Certificate::triangle(OrientedCycle cyc, std::string note) {
    Certificate c;
    c.kind = CertKind::Triangle;
    c.cycle = std::move(cyc);
    c.note = std::move(note);
    return c;
}

Validation validate_certificate(const EdgeColouredGraph& g, const Certificate& cert) {
    switch (cert.kind) {
        case CertKind::TwoFactor: {
            if (auto issue = two_factor_issue(g, cert.family)) return {false, *issue};
            return {true, ""};
        }
        case CertKind::CycleOfLength: {
            if (auto issue = cycle_issue(g, cert.cycle)) return {false, *issue};
            if (cert.cycle.size() != cert.length)
                return {false, "cycle has " + std::to_string(cert.cycle.size()) +
                                   " vertices, declared " + std::to_string(cert.length)};
            return {true, ""};
        }
        case CertKind::PathCover: {
            std::set<Vertex> seen;
            for (size_t i = 0; i < cert.paths.size(); ++i) {
                if (auto issue = pc_path_issue(g, cert.paths[i].verts))
                    return {false, "path " + std::to_string(i) + ": " + *issue};
                for (Vertex v : cert.paths[i].verts)
                    if (!seen.insert(v).second)
                        return {false, "vertex " + std::to_string(v) + " on two paths"};
            }
            if (static_cast<int>(seen.size()) != g.vertex_count())
                return {false, "covers " + std::to_string(seen.size()) + " of " +
                                   std::to_string(g.vertex_count()) + " vertices"};
            return {true, ""};
        }
        case CertKind::Triangle: {
            if (auto issue = cycle_issue(g, cert.cycle)) return {false, *issue};
            if (cert.cycle.size() != 3)
                return {false, "triangle has " + std::to_string(cert.cycle.size()) + " vertices"};
            return {true, ""};
        }
    }
    return {false, "unknown certificate kind"};
}

namespace {

const char* kind_name(CertKind k) {
    switch (k) {
        case CertKind::TwoFactor: return "two-factor";
        case CertKind::CycleOfLength: return "cycle";
        case CertKind::PathCover: return "path-cover";
        case CertKind::Triangle: return "triangle";
    }
    return "?";
}

void write_verts(std::ostringstream& out, const char* tag, const std::vector<Vertex>& vs) {
    out << tag;
    for (Vertex v : vs) out << ' ' << v;
    out << '\n';
}

}  // namespace

std::string to_text(const Certificate& cert) {
    std::ostringstream out;
    out << "certificate " << kind_name(cert.kind) << '\n';
    if (!cert.note.empty()) out << "note " << cert.note << '\n';
    if (cert.kind == CertKind::CycleOfLength) out << "length " << cert.length << '\n';
    switch (cert.kind) {
        case CertKind::TwoFactor:
            for (const auto& c : cert.family.cycles) write_verts(out, "cycle", c.verts);
            break;
        case CertKind::CycleOfLength:
        case CertKind::Triangle:
            write_verts(out, "cycle", cert.cycle.verts);
            break;
        case CertKind::PathCover:
            for (const auto& p : cert.paths) write_verts(out, "path", p.verts);
            break;
    }
    out << "end\n";
    return out.str();
}

Certificate parse_certificate(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Certificate cert;
    bool have_kind = false, have_end = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "certificate") {
            std::string name;
            fields >> name;
            if (name == "two-factor") cert.kind = CertKind::TwoFactor;
            else if (name == "cycle") cert.kind = CertKind::CycleOfLength;
            else if (name == "path-cover") cert.kind = CertKind::PathCover;
            else if (name == "triangle") cert.kind = CertKind::Triangle;
            else throw CertParseError("unknown certificate kind '" + name + "'");
            have_kind = true;
        } else if (tag == "note") {
            size_t at = line.find("note ");
            cert.note = line.substr(at + 5);
        } else if (tag == "length") {
            if (!(fields >> cert.length)) throw CertParseError("bad length line");
        } else if (tag == "cycle" || tag == "path") {
            std::vector<Vertex> vs;
            Vertex v;
            while (fields >> v) vs.push_back(v);
            if (tag == "cycle") {
                if (cert.kind == CertKind::TwoFactor)
                    cert.family.cycles.push_back(OrientedCycle{vs});
                else
                    cert.cycle = OrientedCycle{vs};
            } else {
                cert.paths.push_back(PCPath{vs});
            }
        } else if (tag == "end") {
            have_end = true;
            break;
        } else {
            throw CertParseError("unknown line tag '" + tag + "'");
        }
    }
    if (!have_kind) throw CertParseError("missing 'certificate' line");
    if (!have_end) throw CertParseError("missing 'end' line");
    return cert;
}

}  // namespace pcc
