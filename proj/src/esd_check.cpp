#include "esdom/esd_check.hpp"

#include <cassert>

namespace esdom {

bool is_dominating(const Graph& g, const VertexSet& s) {
    VertexSet bar = g.vertices() - s;
    for (int u = bar.first(); u >= 0; u = bar.next(u))
        if ((g.neighbors(u) & s).empty()) return false;
    return true;
}

namespace {

// Smallest v in s adjacent to u with no other neighbor outside s, or -1.
int find_witness(const Graph& g, const VertexSet& s, const VertexSet& bar, int u) {
    VertexSet candidates = g.neighbors(u) & s;
    for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
        VertexSet outside = g.neighbors(v) & bar;
        outside.remove(u);
        if (outside.empty()) return v;
    }
    return -1;
}

}  // namespace

bool is_super_dominating(const Graph& g, const VertexSet& s) {
    if (!is_dominating(g, s)) return false;
    VertexSet bar = g.vertices() - s;
    for (int u = bar.first(); u >= 0; u = bar.next(u))
        if (find_witness(g, s, bar, u) < 0) return false;
    return true;
}

EsdCheckDetail check_esd_detailed(const Graph& g, const VertexSet& s) {
    VertexSet bar = g.vertices() - s;
    for (int u = bar.first(); u >= 0; u = bar.next(u))
        if (g.degree(u) < 2) return {false, "degree<2 in complement", u, {}};
    for (int u = bar.first(); u >= 0; u = bar.next(u))
        if ((g.neighbors(u) & s).empty()) return {false, "undominated vertex", u, {}};
    EsdCertificate cert;
    for (int u = bar.first(); u >= 0; u = bar.next(u)) {
        int v = find_witness(g, s, bar, u);
        if (v < 0) return {false, "no end super dominator", u, {}};
        cert.witness[u] = v;
        cert.degrees[u] = g.degree(u);
    }
    // A witness's only complement neighbor is its charge, so the map cannot repeat
    // a witness; that also means |S̄| <= |S| for every certified set.
    assert(static_cast<int>(cert.witness.size()) == bar.count());
    assert(bar.count() <= s.count());
    return {true, "", -1, cert};
}

std::optional<EsdCertificate> check_esd(const Graph& g, const VertexSet& s) {
    EsdCheckDetail d = check_esd_detailed(g, s);
    if (!d.ok) return std::nullopt;
    return d.certificate;
}

std::string to_string(Role r) {
    switch (r) {
        case Role::MAIN: return "MAIN";
        case Role::TEMPORARY: return "TEMPORARY";
        case Role::STANDALONE: return "STANDALONE";
        case Role::BACKUP: return "BACKUP";
    }
    return "?";
}

std::map<int, Role> classify_roles(const Graph& g, const VertexSet& s) {
    EsdCheckDetail d = check_esd_detailed(g, s);
    if (!d.ok) throw NotEsdError(d.reason);
    VertexSet bar = g.vertices() - s;
    std::map<int, Role> roles;
    for (int v = 0; v < g.order(); ++v) {
        if (!s.contains(v)) {
            roles[v] = Role::BACKUP;
            continue;
        }
        int outside = (g.neighbors(v) & bar).count();
        roles[v] = outside == 0 ? Role::STANDALONE
                 : outside == 1 ? Role::MAIN
                                : Role::TEMPORARY;
    }
    return roles;
}

}  // namespace esdom
