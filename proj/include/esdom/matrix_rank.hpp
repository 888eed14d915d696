#ifndef ESDOM_MATRIX_RANK_HPP
#define ESDOM_MATRIX_RANK_HPP

#include <vector>

#include "esdom/graph.hpp"

namespace esdom {

/// Dense square integer matrix, row major.
struct IntMatrix {
    int n = 0;
    std::vector<long long> a;

    explicit IntMatrix(int order = 0) : n(order), a(static_cast<std::size_t>(order) * order, 0) {}
    long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

/// Symmetric 0/1 adjacency matrix with zero diagonal.
IntMatrix adjacency_matrix(const Graph& g);

/// Rank over the rationals by fraction-free integer elimination (exact
/// big-integer arithmetic internally, no floating point). Pivots are chosen
/// as the first nonzero entry in column order.
int rank(const IntMatrix& m);

/// Is g complete bipartite with both sides of size >= 2?
bool is_complete_bipartite_min2(const Graph& g);

struct RankBoundResult {
    int rank = 0;
    int n_minus_gamma = 0;           // order minus the supplied domination value
    bool holds = false;              // rank >= n_minus_gamma
    bool equality = false;           // rank == n_minus_gamma
    bool complete_bipartite_min2 = false;
    bool consistent = false;         // equality observed exactly when the structure is present
};

/// Compares rank(A) against order - gamma_esp and cross-checks the equality
/// case structurally. The caller supplies gamma_esp (typically from the exact
/// solver or a closed form). Throws std::invalid_argument on disconnected
/// input; the bound is stated for connected graphs.
RankBoundResult rank_bound_check(const Graph& g, int gamma_esp);

}  // namespace esdom

#endif  // ESDOM_MATRIX_RANK_HPP
