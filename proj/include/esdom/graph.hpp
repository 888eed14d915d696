#ifndef ESDOM_GRAPH_HPP
#define ESDOM_GRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace esdom {

inline constexpr int kMaxVertices = 128;

/// Subset of the vertices 0..n-1 of some graph, stored as a 128-bit mask.
/// Serialized form everywhere is the sorted comma-separated index list, e.g. "0,3".
struct VertexSet {
    std::array<std::uint64_t, 2> w{0, 0};

    static VertexSet full(int n);

    bool contains(int v) const { return (w[v >> 6] >> (v & 63)) & 1u; }
    void add(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void remove(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    int count() const;
    bool empty() const { return w[0] == 0 && w[1] == 0; }

    /// Smallest member, or -1 when empty.
    int first() const;
    /// Smallest member greater than v, or -1 when none.
    int next(int v) const;

    bool is_subset_of(const VertexSet& o) const {
        return (w[0] & ~o.w[0]) == 0 && (w[1] & ~o.w[1]) == 0;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.w == b.w; }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return a.w != b.w; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) {
        a.w[0] &= b.w[0]; a.w[1] &= b.w[1]; return a;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) {
        a.w[0] |= b.w[0]; a.w[1] |= b.w[1]; return a;
    }
    /// Set difference a \ b.
    friend VertexSet operator-(VertexSet a, const VertexSet& b) {
        a.w[0] &= ~b.w[0]; a.w[1] &= ~b.w[1]; return a;
    }
};

/// Order on equal-cardinality sets: compare sorted index sequences elementwise
/// (the set owning the smallest index where membership differs is the smaller one).
bool lex_less(const VertexSet& a, const VertexSet& b);

std::string to_string(const VertexSet& s);
/// Parses "0,3,4" (empty string -> empty set). Throws std::invalid_argument on junk.
VertexSet parse_vertex_set(const std::string& text);

/// Simple undirected graph on vertices 0..n-1; no loops, no multi-edges.
/// Modification operators are free functions returning new graphs; a Graph value
/// never changes behind the caller's back once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    int size() const { return m_; }

    bool has_edge(int u, int v) const { return adj_[u].contains(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    VertexSet vertices() const { return VertexSet::full(n_); }

    /// Inserts the undirected edge uv (idempotent). Used while building a graph.
    void add_edge(int u, int v);

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

// ---- structural queries ----

/// (min degree, max degree); requires a non-empty graph.
std::pair<int, int> degree_profile(const Graph& g);

/// Connected components, ordered by their smallest vertex.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);

/// Proper 2-coloring with colors 0/1, assigning 0 to the smallest vertex of
/// every component; nullopt when some component has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// Smallest vertex v with N[v] = V, if one exists.
std::optional<int> has_universal_vertex(const Graph& g);

enum class InducedPattern { P4, C4 };

struct InducedSubgraph {
    InducedPattern kind;
    std::array<int, 4> v;  // path order a-b-c-d, resp. cycle order a-b-c-d-a
};

/// First induced 4-vertex path or 4-cycle in a fixed scan order (by middle edge,
/// then endpoints ascending), or nullopt when the graph is (P4,C4)-free.
std::optional<InducedSubgraph> find_induced_p4_or_c4(const Graph& g);

// ---- modification operators (pure) ----

/// Removes edge uv. Throws std::invalid_argument("no such edge") when absent.
Graph remove_edge(const Graph& g, int u, int v);

/// Contracts edge uv: the merged vertex takes min(u,v)'s slot, max(u,v) is dropped and
/// higher labels shift down by one; parallel edges/loops are simplified away.
Graph contract_edge(const Graph& g, int u, int v);

/// Deletes v; labels above v shift down by one.
Graph remove_vertex(const Graph& g, int v);

Graph complement(const Graph& g);

// ---- generators ----

enum class Family { Path, Cycle, Complete, CompleteBipartite, Star, SizeExtremal, SubdividedStar };

struct FamilySpec {
    Family family;
    long long a = 0;  // n, or first part size
    long long b = 0;  // second part size / target gamma_esp / unused
};

/// Parses the generator grammar: "path:7", "cycle:12", "complete:5", "kbip:3,4",
/// "star:6", "extremal:10,7", "substar:4".
FamilySpec parse_family_spec(const std::string& text);
std::string to_string(const FamilySpec& spec);

/// Builds the requested family member with its canonical labeling:
/// paths/cycles in order; kbip parts {0..a-1} and {a..a+b-1}; star center 0;
/// extremal(n,gamma): U = {0..t-1}, W = {t..2t-1} with t = n-gamma, the only U-W edges
/// are the matching pairs (i, t+i), every other vertex pair is adjacent;
/// substar:k = star K_{1,k} with every edge subdivided (center 0, arm i = 2i-1, 2i).
Graph generate(const FamilySpec& spec);

// ---- text edge-list format ----

/// Format: first line "n m", then m lines "u v" (0-based); '#' starts a comment.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

}  // namespace esdom

#endif  // ESDOM_GRAPH_HPP
