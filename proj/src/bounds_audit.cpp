#include "esdom/bounds_audit.hpp"

#include <algorithm>

#include "esdom/matrix_rank.hpp"
#include "esdom/tree_family.hpp"

namespace esdom {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::PASS: return "PASS";
        case CheckStatus::FAIL: return "FAIL";
        default: return "SKIP";
    }
}

std::string CheckRecord::to_line() const {
    std::string line = "CHECK " + id + " " + to_string(status) +
                       " lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs) +
                       " sharp=" + (sharp ? "1" : "0");
    if (!reason.empty()) line += " " + reason;
    return line;
}

bool AuditReport::all_passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckRecord& c) { return c.status == CheckStatus::FAIL; });
}

std::string AuditReport::to_text() const {
    std::string out;
    for (const auto& c : checks) out += c.to_line() + "\n";
    return out;
}

namespace {

void le(AuditReport& rep, const std::string& id, long long lhs, long long rhs) {
    CheckRecord c;
    c.id = id;
    c.status = lhs <= rhs ? CheckStatus::PASS : CheckStatus::FAIL;
    c.lhs = lhs;
    c.rhs = rhs;
    c.sharp = lhs == rhs;
    rep.checks.push_back(std::move(c));
}

void iff(AuditReport& rep, const std::string& id, bool lhs, bool rhs) {
    CheckRecord c;
    c.id = id;
    c.status = lhs == rhs ? CheckStatus::PASS : CheckStatus::FAIL;
    c.lhs = lhs ? 1 : 0;
    c.rhs = rhs ? 1 : 0;
    rep.checks.push_back(std::move(c));
}

void skip(AuditReport& rep, const std::string& id, const std::string& reason) {
    CheckRecord c;
    c.id = id;
    c.reason = reason;
    rep.checks.push_back(std::move(c));
}

// Does the complement of g consist of a balanced complete bipartite graph
// with one perfect matching deleted (2t vertices of complement-degree t-1),
// plus isolated vertices? This is the extremal shape of the size upper
// bound; t <= 1 degenerates to an edgeless complement.
bool complement_has_extremal_shape(const Graph& g, int t) {
    Graph h = complement(g);
    std::vector<int> carried;
    for (int v = 0; v < h.order(); ++v)
        if (h.degree(v) > 0) carried.push_back(v);
    if (t <= 1) return carried.empty();
    if (static_cast<int>(carried.size()) != 2 * t) return false;
    for (int v : carried)
        if (h.degree(v) != t - 1) return false;
    auto color = bipartition(h);
    if (!color) return false;
    // The 2-coloring of each component is forced only up to a flip; the shape
    // is present when some choice of flips balances the sides at t and t.
    std::vector<char> reachable(t + 1, 0);
    reachable[0] = 1;
    for (const VertexSet& comp : components(h)) {
        if (comp.count() < 2) continue;
        int a = 0, b = 0;
        for (int v = comp.first(); v >= 0; v = comp.next(v))
            ((*color)[v] == 0 ? a : b) += 1;
        std::vector<char> next(t + 1, 0);
        for (int s = 0; s <= t; ++s) {
            if (!reachable[s]) continue;
            if (s + a <= t) next[s + a] = 1;
            if (s + b <= t) next[s + b] = 1;
        }
        reachable = std::move(next);
    }
    return reachable[t];
}

bool is_family_tree(const Graph& g) {
    if (g.size() != g.order() - 1 || !is_connected(g)) return false;
    return recognize(g).has_value();
}

}  // namespace

AuditReport audit_static(const Graph& g, const SolveOptions& opts) {
    AuditReport rep;
    const long long n = g.order();
    const long long m = g.size();
    const long long dom = solve(g, Mode::DOM, opts).value;
    const long long sup = solve(g, Mode::SUPER, opts).value;
    const long long esd = solve(g, Mode::ESD, opts).value;
    const auto [min_deg, max_deg] = degree_profile(g);
    const bool connected = is_connected(g);

    bool small_component = false;
    for (const VertexSet& comp : components(g))
        if (comp.count() < 3) small_component = true;

    le(rep, "chain.dom_le_super", dom, sup);
    le(rep, "chain.super_le_esd", sup, esd);

    if (min_deg >= 2) {
        le(rep, "esd_le_n_minus_dom", esd, n - dom);
        le(rep, "esd_maxdeg_frac", esd * (max_deg + 1), max_deg * n);
    } else {
        skip(rep, "esd_le_n_minus_dom", "minimum degree below 2");
        skip(rep, "esd_maxdeg_frac", "minimum degree below 2");
    }

    if (!connected || n < 3) {
        skip(rep, "esd_nminus1_implies_universal", "needs a connected graph of order at least 3");
    } else if (esd != n - 1) {
        skip(rep, "esd_nminus1_implies_universal", "premise not met: value is below order-1");
    } else {
        iff(rep, "esd_nminus1_implies_universal", has_universal_vertex(g).has_value(), true);
    }

    if (small_component) {
        skip(rep, "range.dom_ge_1", "a component has order below 3");
        skip(rep, "range.dom_le_half", "a component has order below 3");
        skip(rep, "range.esd_le_nminus1", "a component has order below 3");
        skip(rep, "range.super_ge_half", "a component has order below 3");
    } else {
        le(rep, "range.dom_ge_1", 1, dom);
        le(rep, "range.dom_le_half", 2 * dom, n);
        le(rep, "range.esd_le_nminus1", esd, n - 1);
        le(rep, "range.super_ge_half", n, 2 * sup);
    }

    if (connected) {
        RankBoundResult rb = rank_bound_check(g, static_cast<int>(esd));
        le(rep, "rank.lower", rb.n_minus_gamma, rb.rank);
        if (n == 1)
            skip(rep, "rank.lower.eq", "single vertex equality is vacuous");
        else
            iff(rep, "rank.lower.eq", rb.equality, rb.complete_bipartite_min2);
        le(rep, "size.lower", 2 * (n - esd) - 1, m);
        iff(rep, "size.lower.eq", m == 2 * (n - esd) - 1, is_family_tree(g));
    } else {
        skip(rep, "rank.lower", "needs a connected graph");
        skip(rep, "rank.lower.eq", "needs a connected graph");
        skip(rep, "size.lower", "needs a connected graph");
        skip(rep, "size.lower.eq", "needs a connected graph");
    }

    const long long t = n - esd;
    const long long upper = n * (n - 1) / 2 - t * (t - 1);
    le(rep, "size.upper", m, upper);
    iff(rep, "size.upper.eq", m == upper, complement_has_extremal_shape(g, static_cast<int>(t)));

    return rep;
}

AuditReport audit_modifications(const Graph& g, const SolveOptions& opts) {
    AuditReport rep;
    const long long base = solve(g, Mode::ESD, opts).value;

    struct EdgeValues {
        int u, v;
        long long contracted, removed;
    };
    std::vector<EdgeValues> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v)) {
            EdgeValues ev;
            ev.u = u;
            ev.v = v;
            ev.contracted = solve(contract_edge(g, u, v), Mode::ESD, opts).value;
            ev.removed = solve(remove_edge(g, u, v), Mode::ESD, opts).value;
            edges.push_back(ev);
        }

    auto tag = [](const EdgeValues& ev) {
        return ".e" + std::to_string(ev.u) + "-" + std::to_string(ev.v);
    };

    for (const auto& ev : edges) le(rep, "contraction.lower" + tag(ev), base - 1, ev.contracted);
    for (const auto& ev : edges) le(rep, "contraction.upper" + tag(ev), ev.contracted, base);
    for (const auto& ev : edges) le(rep, "edge_removal.lower" + tag(ev), base - 1, ev.removed);
    for (const auto& ev : edges) le(rep, "edge_removal.upper" + tag(ev), ev.removed, base + 2);
    for (const auto& ev : edges) {
        if (g.degree(ev.u) >= 3 || g.degree(ev.v) >= 3)
            le(rep, "edge_removal.upper_deg3" + tag(ev), ev.removed, base + 1);
        else
            skip(rep, "edge_removal.upper_deg3" + tag(ev), "both endpoints have degree below 3");
    }

    std::vector<long long> shrunk(g.order());
    if (g.order() > 1)
        for (int v = 0; v < g.order(); ++v)
            shrunk[v] = solve(remove_vertex(g, v), Mode::ESD, opts).value;
    for (int v = 0; v < g.order(); ++v) {
        if (g.order() == 1)
            skip(rep, "vertex_removal.lower.v" + std::to_string(v), "removal would empty the graph");
        else
            le(rep, "vertex_removal.lower.v" + std::to_string(v), base - 1, shrunk[v]);
    }
    for (int v = 0; v < g.order(); ++v) {
        if (g.order() == 1)
            skip(rep, "vertex_removal.upper.v" + std::to_string(v), "removal would empty the graph");
        else
            le(rep, "vertex_removal.upper.v" + std::to_string(v), shrunk[v], base + g.degree(v) - 1);
    }
    return rep;
}

AuditReport audit_nordhaus_gaddum(const Graph& g, const SolveOptions& opts) {
    AuditReport rep;
    const long long n = g.order();
    if (n < 3) {
        skip(rep, "complement_prod.lower", "needs order at least 3");
        skip(rep, "complement_prod.upper", "needs order at least 3");
        skip(rep, "complement_sum.lower", "needs order at least 3");
        skip(rep, "complement_sum.upper", "needs order at least 3");
        return rep;
    }
    const long long here = solve(g, Mode::ESD, opts).value;
    const long long there = solve(complement(g), Mode::ESD, opts).value;
    // the n^2/4 side is kept exact by comparing n^2 against 4 * product
    le(rep, "complement_prod.lower", n * n, 4 * here * there);
    le(rep, "complement_prod.upper", here * there, n * (n - 1));
    le(rep, "complement_sum.lower", n, here + there);
    le(rep, "complement_sum.upper", here + there, 2 * n - 1);
    return rep;
}

AuditReport audit_all(const Graph& g, const SolveOptions& opts) {
    AuditReport rep = audit_static(g, opts);
    AuditReport mods = audit_modifications(g, opts);
    AuditReport ng = audit_nordhaus_gaddum(g, opts);
    rep.checks.insert(rep.checks.end(), mods.checks.begin(), mods.checks.end());
    rep.checks.insert(rep.checks.end(), ng.checks.begin(), ng.checks.end());
    return rep;
}

}  // namespace esdom
