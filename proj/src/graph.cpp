#include "esdom/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace esdom {

VertexSet VertexSet::full(int n) {
    VertexSet s;
    if (n >= 64) {
        s.w[0] = ~std::uint64_t{0};
        s.w[1] = (n == 128) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n - 64)) - 1);
    } else if (n > 0) {
        s.w[0] = (std::uint64_t{1} << n) - 1;
    }
    return s;
}

int VertexSet::count() const {
    return std::popcount(w[0]) + std::popcount(w[1]);
}

int VertexSet::first() const {
    if (w[0]) return std::countr_zero(w[0]);
    if (w[1]) return 64 + std::countr_zero(w[1]);
    return -1;
}

int VertexSet::next(int v) const {
    ++v;
    if (v >= kMaxVertices) return -1;
    if (v < 64) {
        std::uint64_t rest = w[0] >> v;
        if (rest) return v + std::countr_zero(rest);
        v = 64;
    }
    std::uint64_t rest = w[1] >> (v - 64);
    if (rest) return v + std::countr_zero(rest);
    return -1;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    VertexSet diff{{a.w[0] ^ b.w[0], a.w[1] ^ b.w[1]}};
    int i = diff.first();
    if (i < 0) return false;
    return a.contains(i);
}

std::string to_string(const VertexSet& s) {
    std::string out;
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

VertexSet parse_vertex_set(const std::string& text) {
    VertexSet s;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad vertex set element: '" + tok + "'");
        }
        if (used != tok.size() || v < 0 || v >= kMaxVertices)
            throw std::invalid_argument("bad vertex set element: '" + tok + "'");
        s.add(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == text.size()) throw std::invalid_argument("trailing comma in vertex set");
    }
    return s;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range 0..128");
    adj_.resize(n);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (adj_[u].contains(v)) return;
    adj_[u].add(v);
    adj_[v].add(u);
    ++m_;
}

std::pair<int, int> degree_profile(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("degree profile of empty graph");
    int lo = kMaxVertices + 1, hi = -1;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {lo, hi};
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (int s = 0; s < g.order(); ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp;
        comp.add(s);
        std::vector<int> stack{s};
        seen.add(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u)) {
                if (!seen.contains(u)) {
                    seen.add(u);
                    comp.add(u);
                    stack.push_back(u);
                }
            }
        }
        out.push_back(comp);
    }
    return out;
}

bool is_connected(const Graph& g) {
    return components(g).size() <= 1;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (int y = g.neighbors(x).first(); y >= 0; y = g.neighbors(x).next(y)) {
                if (color[y] < 0) {
                    color[y] = 1 - color[x];
                    queue.push_back(y);
                } else if (color[y] == color[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::optional<int> has_universal_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) return v;
    return std::nullopt;
}

std::optional<InducedSubgraph> find_induced_p4_or_c4(const Graph& g) {
    const int n = g.order();
    // Scan middle edges b-c (both orientations), then a in N(b)\N[c], d in N(c)\N[b].
    for (int b = 0; b < n; ++b) {
        for (int c = g.neighbors(b).first(); c >= 0; c = g.neighbors(b).next(c)) {
            VertexSet as = g.neighbors(b) - g.neighbors(c);
            as.remove(c);
            VertexSet ds = g.neighbors(c) - g.neighbors(b);
            ds.remove(b);
            for (int a = as.first(); a >= 0; a = as.next(a)) {
                for (int d = ds.first(); d >= 0; d = ds.next(d)) {
                    if (a == d) continue;
                    InducedPattern kind =
                        g.has_edge(a, d) ? InducedPattern::C4 : InducedPattern::P4;
                    return InducedSubgraph{kind, {a, b, c, d}};
                }
            }
        }
    }
    return std::nullopt;
}

Graph remove_edge(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v))
        throw std::invalid_argument("no such edge");
    Graph out(g.order());
    for (int x = 0; x < g.order(); ++x)
        for (int y = g.neighbors(x).next(x); y >= 0; y = g.neighbors(x).next(y))
            if (!((x == u && y == v) || (x == v && y == u))) out.add_edge(x, y);
    return out;
}

namespace {

// Rebuilds a graph after dropping vertex `gone`, with `extra` unioned into the
// neighborhood of `into` first (used by contraction; extra is empty for plain removal).
Graph drop_vertex(const Graph& g, int gone, int into, const VertexSet& extra) {
    Graph out(g.order() - 1);
    auto relabel = [gone](int x) { return x > gone ? x - 1 : x; };
    for (int x = 0; x < g.order(); ++x) {
        if (x == gone) continue;
        VertexSet nb = g.neighbors(x);
        if (x == into) nb = nb | extra;
        nb.remove(gone);
        nb.remove(x);
        // add_edge is idempotent, so both endpoints may report the same edge.
        for (int y = nb.first(); y >= 0; y = nb.next(y)) out.add_edge(relabel(x), relabel(y));
    }
    return out;
}

}  // namespace

Graph contract_edge(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v))
        throw std::invalid_argument("no such edge");
    int keep = std::min(u, v), gone = std::max(u, v);
    return drop_vertex(g, gone, keep, g.neighbors(gone));
}

Graph remove_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
    return drop_vertex(g, v, v, VertexSet{});
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

namespace {

long long parse_ll(const std::string& tok, const std::string& what) {
    std::size_t used = 0;
    long long v;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad " + what + ": '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad " + what + ": '" + tok + "'");
    return v;
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family spec must look like 'path:7' or 'kbip:3,4'");
    std::string name = text.substr(0, colon);
    std::string args = text.substr(colon + 1);
    FamilySpec spec{};
    bool two_args = false;
    if (name == "path") spec.family = Family::Path;
    else if (name == "cycle") spec.family = Family::Cycle;
    else if (name == "complete") spec.family = Family::Complete;
    else if (name == "kbip") { spec.family = Family::CompleteBipartite; two_args = true; }
    else if (name == "star") spec.family = Family::Star;
    else if (name == "extremal") { spec.family = Family::SizeExtremal; two_args = true; }
    else if (name == "substar") spec.family = Family::SubdividedStar;
    else throw std::invalid_argument("unknown family '" + name + "'");
    std::size_t comma = args.find(',');
    if (two_args != (comma != std::string::npos))
        throw std::invalid_argument("family '" + name + "' takes " + (two_args ? "two arguments" : "one argument"));
    if (two_args) {
        spec.a = parse_ll(args.substr(0, comma), "family argument");
        spec.b = parse_ll(args.substr(comma + 1), "family argument");
    } else {
        spec.a = parse_ll(args, "family argument");
    }
    return spec;
}

std::string to_string(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Path: return "path:" + std::to_string(spec.a);
        case Family::Cycle: return "cycle:" + std::to_string(spec.a);
        case Family::Complete: return "complete:" + std::to_string(spec.a);
        case Family::CompleteBipartite:
            return "kbip:" + std::to_string(spec.a) + "," + std::to_string(spec.b);
        case Family::Star: return "star:" + std::to_string(spec.a);
        case Family::SizeExtremal:
            return "extremal:" + std::to_string(spec.a) + "," + std::to_string(spec.b);
        case Family::SubdividedStar: return "substar:" + std::to_string(spec.a);
    }
    return "?";
}

Graph generate(const FamilySpec& spec) {
    const long long a = spec.a, b = spec.b;
    switch (spec.family) {
        case Family::Path: {
            if (a < 1 || a > kMaxVertices) throw std::invalid_argument("path:n needs 1 <= n <= 128");
            Graph g(static_cast<int>(a));
            for (int i = 0; i + 1 < a; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case Family::Cycle: {
            if (a < 3 || a > kMaxVertices) throw std::invalid_argument("cycle:n needs 3 <= n <= 128");
            Graph g(static_cast<int>(a));
            for (int i = 0; i + 1 < a; ++i) g.add_edge(i, i + 1);
            g.add_edge(static_cast<int>(a) - 1, 0);
            return g;
        }
        case Family::Complete: {
            if (a < 1 || a > kMaxVertices) throw std::invalid_argument("complete:n needs 1 <= n <= 128");
            Graph g(static_cast<int>(a));
            for (int i = 0; i < a; ++i)
                for (int j = i + 1; j < a; ++j) g.add_edge(i, j);
            return g;
        }
        case Family::CompleteBipartite: {
            if (a < 1 || b < 1 || a + b > kMaxVertices)
                throw std::invalid_argument("kbip:a,b needs a,b >= 1 and a+b <= 128");
            Graph g(static_cast<int>(a + b));
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j) g.add_edge(i, static_cast<int>(a) + j);
            return g;
        }
        case Family::Star: {
            if (a < 2 || a > kMaxVertices) throw std::invalid_argument("star:n needs 2 <= n <= 128");
            Graph g(static_cast<int>(a));
            for (int i = 1; i < a; ++i) g.add_edge(0, i);
            return g;
        }
        case Family::SizeExtremal: {
            const long long n = a, gamma = b;
            if (n < 1 || n > kMaxVertices) throw std::invalid_argument("extremal:n,gamma needs 1 <= n <= 128");
            if (2 * gamma < n || gamma > n - 1 || 2 * (n - gamma) > n)
                throw std::invalid_argument("extremal:n,gamma needs ceil(n/2) <= gamma <= n-1");
            const long long t = n - gamma;
            Graph g(static_cast<int>(n));
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    bool iu = i < t, jw = j >= t && j < 2 * t;
                    if (iu && jw) {
                        if (j == i + t) g.add_edge(i, j);  // matching pair u_i w_i
                    } else {
                        g.add_edge(i, j);
                    }
                }
            }
            return g;
        }
        case Family::SubdividedStar: {
            if (a < 2 || 2 * a + 1 > kMaxVertices)
                throw std::invalid_argument("substar:k needs 2 <= k <= 63");
            Graph g(static_cast<int>(2 * a + 1));
            for (int i = 1; i <= a; ++i) {
                g.add_edge(0, 2 * i - 1);
                g.add_edge(2 * i - 1, 2 * i);
            }
            return g;
        }
    }
    throw std::invalid_argument("unknown family");
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<long long, long long>> rows;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long x, y;
        if (ls >> x) {
            if (!(ls >> y)) throw std::invalid_argument("edge list line needs two integers: '" + line + "'");
            std::string rest;
            if (ls >> rest) throw std::invalid_argument("trailing junk on edge list line: '" + line + "'");
            rows.emplace_back(x, y);
        }
    }
    if (rows.empty()) throw std::invalid_argument("edge list is missing the 'n m' header line");
    auto [n, m] = rows.front();
    if (n < 0 || n > kMaxVertices || m < 0)
        throw std::invalid_argument("bad edge list header");
    if (static_cast<long long>(rows.size()) != m + 1)
        throw std::invalid_argument("edge list declares " + std::to_string(m) + " edges but has " +
                                    std::to_string(rows.size() - 1));
    Graph g(static_cast<int>(n));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto [u, v] = rows[i];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw std::invalid_argument("loops are not allowed");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw std::invalid_argument("duplicate edge: " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (int u = 0; u < g.order(); ++u)
        for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v))
            out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace esdom
