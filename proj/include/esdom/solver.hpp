#ifndef ESDOM_SOLVER_HPP
#define ESDOM_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "esdom/esd_check.hpp"
#include "esdom/graph.hpp"

namespace esdom {

enum class Mode { DOM, SUPER, ESD };

struct SolveOptions {
    /// Largest connected component the search will accept. Each component is an
    /// independent search, so the limit guards the actual exponential unit.
    int cap = 24;
};

/// Raised when a component exceeds the cap; the CLI maps it to exit code 3.
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SolveResult {
    int value = 0;
    VertexSet witness_set;  // lexicographically smallest optimal set
    std::optional<EsdCertificate> certificate;  // ESD mode only
};

struct EnumerationResult {
    int value = 0;
    std::uint64_t count = 0;
    std::optional<std::vector<VertexSet>> sets;  // lexicographic order when materialized
};

/// Exact minimum dominating / super dominating / end super dominating set.
/// Branch-and-bound over each connected component (include-first DFS in vertex order,
/// so the reported optimum is the lexicographically smallest one).
SolveResult solve(const Graph& g, Mode mode, const SolveOptions& opts = {});

/// Value, count and (optionally) the full lexicographically sorted list of all
/// minimum end super dominating sets.
EnumerationResult enumerate_minimum_esd(const Graph& g, bool materialize,
                                        const SolveOptions& opts = {});

/// Independent reference: plain subset scan by increasing cardinality with no pruning
/// beyond the mode predicate itself. Hard n <= 16 limit.
SolveResult brute_force_oracle(const Graph& g, Mode mode);

/// Reference enumeration by the same unpruned scan: value, count and the full
/// list of minimum end super dominating sets in lexicographic order. n <= 16.
EnumerationResult brute_force_enumerate(const Graph& g);

}  // namespace esdom

#endif  // ESDOM_SOLVER_HPP
