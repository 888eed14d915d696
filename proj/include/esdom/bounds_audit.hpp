#ifndef ESDOM_BOUNDS_AUDIT_HPP
#define ESDOM_BOUNDS_AUDIT_HPP

#include <string>
#include <vector>

#include "esdom/graph.hpp"
#include "esdom/solver.hpp"

namespace esdom {

enum class CheckStatus { PASS, FAIL, SKIP };

std::string to_string(CheckStatus s);

/// One audited inequality or structural cross-check. Inequality checks carry
/// their exact integer sides; `sharp` marks an inequality attained with
/// equality. Skipped checks keep lhs = rhs = 0 and explain themselves in
/// `reason`.
struct CheckRecord {
    std::string id;
    CheckStatus status = CheckStatus::SKIP;
    long long lhs = 0;
    long long rhs = 0;
    bool sharp = false;
    std::string reason;

    /// "CHECK <id> <PASS|FAIL|SKIP> lhs=<..> rhs=<..> sharp=<0|1> [reason]"
    std::string to_line() const;
};

struct AuditReport {
    std::vector<CheckRecord> checks;

    /// No FAIL records; SKIPs are fine.
    bool all_passed() const;
    /// One line per record, stable order, trailing newline.
    std::string to_text() const;
};

/// Value-chain, order-range, size and adjacency-rank checks on g itself.
/// Checks whose preconditions g does not meet are recorded as SKIP, never
/// dropped.
AuditReport audit_static(const Graph& g, const SolveOptions& opts = {});

/// Edge-removal, edge-contraction and vertex-removal bounds, one record per
/// check per edge or vertex, grouped by check and ordered by index.
AuditReport audit_modifications(const Graph& g, const SolveOptions& opts = {});

/// Sum and product bounds on the values of g and its complement.
AuditReport audit_nordhaus_gaddum(const Graph& g, const SolveOptions& opts = {});

/// All three audits, concatenated in the order above.
AuditReport audit_all(const Graph& g, const SolveOptions& opts = {});

}  // namespace esdom

#endif  // ESDOM_BOUNDS_AUDIT_HPP
