#include "esdom/solver.hpp"

#include <algorithm>
#include <cassert>

namespace esdom {

namespace {

struct LocalComponent {
    Graph graph;
    std::vector<int> verts;  // local index -> original vertex, ascending
};

LocalComponent extract(const Graph& g, const VertexSet& comp) {
    LocalComponent lc;
    for (int v = comp.first(); v >= 0; v = comp.next(v)) lc.verts.push_back(v);
    std::vector<int> local(g.order(), -1);
    for (std::size_t i = 0; i < lc.verts.size(); ++i) local[lc.verts[i]] = static_cast<int>(i);
    lc.graph = Graph(static_cast<int>(lc.verts.size()));
    for (int u : lc.verts)
        for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v))
            if (local[v] >= 0) lc.graph.add_edge(local[u], local[v]);
    return lc;
}

bool leaf_ok(const Graph& g, const VertexSet& s, Mode mode) {
    switch (mode) {
        case Mode::DOM: return is_dominating(g, s);
        case Mode::SUPER: return is_super_dominating(g, s);
        case Mode::ESD: return check_esd(g, s).has_value();
    }
    return false;
}

// Branch-and-bound over one connected component. Vertices are decided in index
// order, include-first, so the first feasible set of the target size is the
// lexicographically smallest one.
struct Search {
    const Graph& g;
    Mode mode;
    int k = 0;
    VertexSet forced;  // vertices of degree <= 1 (ESD mode): in every feasible set

    bool collect = false;
    std::uint64_t count = 0;
    std::vector<VertexSet>* sink = nullptr;
    VertexSet found_set;

    explicit Search(const Graph& graph, Mode m) : g(graph), mode(m) {
        if (m == Mode::ESD)
            for (int v = 0; v < g.order(); ++v)
                if (g.degree(v) <= 1) forced.add(v);
    }

    bool viable(const VertexSet& in_bar) const {
        VertexSet not_bar = g.vertices() - in_bar;
        for (int u = in_bar.first(); u >= 0; u = in_bar.next(u)) {
            VertexSet open = g.neighbors(u) & not_bar;
            if (open.empty()) return false;  // nobody left to dominate u
            if (mode == Mode::DOM) continue;
            // u still needs some neighbor whose other neighbors all avoid the
            // complement; the complement only grows, so this test is safe.
            bool witness_possible = false;
            for (int v = open.first(); v >= 0; v = open.next(v)) {
                VertexSet others = g.neighbors(v) & in_bar;
                others.remove(u);
                if (others.empty()) {
                    witness_possible = true;
                    break;
                }
            }
            if (!witness_possible) return false;
        }
        return true;
    }

    bool dfs(int pos, VertexSet in_s, VertexSet in_bar, int cnt) {
        const int n = g.order();
        if (cnt > k || cnt + (n - pos) < k) return false;
        if (!viable(in_bar)) return false;
        if (pos == n) {
            if (!leaf_ok(g, in_s, mode)) return false;
            if (collect) {
                ++count;
                if (sink) sink->push_back(in_s);
                return false;  // keep scanning
            }
            found_set = in_s;
            return true;
        }
        VertexSet with = in_s;
        with.add(pos);
        if (dfs(pos + 1, with, in_bar, cnt + 1) && !collect) return true;
        if (mode == Mode::ESD && forced.contains(pos)) return false;  // may not be excluded
        VertexSet bar = in_bar;
        bar.add(pos);
        return dfs(pos + 1, in_s, bar, cnt);
    }
};

int lower_bound(const Graph& g, Mode mode) {
    const int n = g.order();
    switch (mode) {
        case Mode::DOM: {
            int max_deg = degree_profile(g).second;
            return std::max(1, (n + max_deg) / (max_deg + 1));
        }
        case Mode::SUPER:
            // The witness map is injective, so |S̄| <= |S|.
            return std::max(1, (n + 1) / 2);
        case Mode::ESD: {
            if (n <= 2) return n;  // complement vertices need degree 2
            int forced = 0;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) <= 1) ++forced;
            return std::max((n + 1) / 2, forced);
        }
    }
    return 1;
}

struct ComponentOutcome {
    int value = 0;
    VertexSet best;            // local labels
    std::uint64_t count = 0;   // minimum sets (when enumerated)
    std::vector<VertexSet> all;  // local labels (when materialized)
};

ComponentOutcome solve_component(const Graph& g, Mode mode) {
    ComponentOutcome out;
    for (int k = lower_bound(g, mode); k <= g.order(); ++k) {
        Search s(g, mode);
        s.k = k;
        if (s.dfs(0, {}, {}, 0)) {
            out.value = k;
            out.best = s.found_set;
            return out;
        }
    }
    // A full vertex set satisfies every mode vacuously.
    assert(false && "search space exhausted without the trivial solution");
    return out;
}

void enumerate_component(const Graph& g, int k, bool materialize, ComponentOutcome& out) {
    Search s(g, Mode::ESD);
    s.k = k;
    s.collect = true;
    if (materialize) s.sink = &out.all;
    s.dfs(0, {}, {}, 0);
    out.count = s.count;
}

void require_solvable(const Graph& g, const std::vector<VertexSet>& comps, const SolveOptions& opts) {
    if (g.order() == 0) throw std::invalid_argument("cannot solve the empty graph");
    for (const VertexSet& c : comps) {
        if (c.count() > opts.cap)
            throw CapExceededError(
                "component of order " + std::to_string(c.count()) + " exceeds the solver cap " +
                std::to_string(opts.cap) +
                "; use the closed forms for structured families or raise the cap");
    }
}

VertexSet lift(const VertexSet& local, const std::vector<int>& verts) {
    VertexSet out;
    for (int v = local.first(); v >= 0; v = local.next(v)) out.add(verts[v]);
    return out;
}

}  // namespace

SolveResult solve(const Graph& g, Mode mode, const SolveOptions& opts) {
    std::vector<VertexSet> comps = components(g);
    require_solvable(g, comps, opts);
    SolveResult res;
    for (const VertexSet& c : comps) {
        LocalComponent lc = extract(g, c);
        ComponentOutcome oc = solve_component(lc.graph, mode);
        res.value += oc.value;
        res.witness_set = res.witness_set | lift(oc.best, lc.verts);
    }
    if (mode == Mode::ESD) {
        res.certificate = check_esd(g, res.witness_set);
        assert(res.certificate.has_value());
    }
    return res;
}

EnumerationResult enumerate_minimum_esd(const Graph& g, bool materialize,
                                        const SolveOptions& opts) {
    std::vector<VertexSet> comps = components(g);
    require_solvable(g, comps, opts);
    EnumerationResult res;
    res.count = 1;
    std::vector<std::vector<VertexSet>> lifted_lists;
    for (const VertexSet& c : comps) {
        LocalComponent lc = extract(g, c);
        ComponentOutcome oc = solve_component(lc.graph, Mode::ESD);
        enumerate_component(lc.graph, oc.value, materialize, oc);
        res.value += oc.value;
        res.count *= oc.count;
        if (materialize) {
            std::vector<VertexSet> lifted;
            lifted.reserve(oc.all.size());
            for (const VertexSet& s : oc.all) lifted.push_back(lift(s, lc.verts));
            lifted_lists.push_back(std::move(lifted));
        }
    }
    if (materialize) {
        std::vector<VertexSet> acc{VertexSet{}};
        for (const std::vector<VertexSet>& part : lifted_lists) {
            std::vector<VertexSet> next;
            next.reserve(acc.size() * part.size());
            for (const VertexSet& base : acc)
                for (const VertexSet& piece : part) next.push_back(base | piece);
            acc = std::move(next);
        }
        std::sort(acc.begin(), acc.end(), lex_less);
        res.sets = std::move(acc);
    }
    return res;
}

SolveResult brute_force_oracle(const Graph& g, Mode mode) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("cannot solve the empty graph");
    if (n > 16) throw std::invalid_argument("brute force oracle is limited to n <= 16");
    for (int k = 0; k <= n; ++k) {
        std::vector<int> c(k);
        for (int i = 0; i < k; ++i) c[i] = i;
        while (true) {
            VertexSet s;
            for (int v : c) s.add(v);
            if (leaf_ok(g, s, mode)) {
                SolveResult res;
                res.value = k;
                res.witness_set = s;
                if (mode == Mode::ESD) res.certificate = check_esd(g, s);
                return res;
            }
            // next k-combination in lexicographic order
            int i = k - 1;
            while (i >= 0 && c[i] == n - k + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        }
    }
    // S = V always satisfies every mode, so the loop cannot fall through.
    throw std::logic_error("exhaustive scan found no solution");
}

EnumerationResult brute_force_enumerate(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("cannot solve the empty graph");
    if (n > 16) throw std::invalid_argument("brute force oracle is limited to n <= 16");
    for (int k = 0; k <= n; ++k) {
        std::vector<VertexSet> hits;
        std::vector<int> c(k);
        for (int i = 0; i < k; ++i) c[i] = i;
        while (true) {
            VertexSet s;
            for (int v : c) s.add(v);
            if (leaf_ok(g, s, Mode::ESD)) hits.push_back(s);
            int i = k - 1;
            while (i >= 0 && c[i] == n - k + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        }
        if (!hits.empty()) {
            // combinations were generated in lexicographic order already
            EnumerationResult res;
            res.value = k;
            res.count = hits.size();
            res.sets = std::move(hits);
            return res;
        }
    }
    throw std::logic_error("exhaustive scan found no solution");
}

}  // namespace esdom
