#ifndef ESDOM_ESD_CHECK_HPP
#define ESDOM_ESD_CHECK_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "esdom/graph.hpp"

namespace esdom {

/// Proof object for "s is an end super dominating set": for every complement vertex u,
/// witness[u] is a member v of s whose only complement neighbor is u (so N(v) ∩ S̄ = {u}),
/// and degrees[u] = deg(u) >= 2. The witness map is injective by construction.
struct EsdCertificate {
    std::map<int, int> witness;
    std::map<int, int> degrees;
};

/// Every vertex outside s has a neighbor in s.
bool is_dominating(const Graph& g, const VertexSet& s);

/// Dominating, and every vertex outside s has a private witness in s.
bool is_super_dominating(const Graph& g, const VertexSet& s);

/// Full end-super-domination check. On success returns a certificate whose witnesses are
/// the smallest-index candidates. The conditions are evaluated in a fixed order, so the
/// detailed variant reports a deterministic first failure.
std::optional<EsdCertificate> check_esd(const Graph& g, const VertexSet& s);

struct EsdCheckDetail {
    bool ok;
    std::string reason;  // empty when ok; otherwise the first violated condition
    int vertex;          // offending vertex, -1 when ok
    EsdCertificate certificate;  // populated only when ok
};

/// Failure reasons, in evaluation order:
///   "degree<2 in complement"  — some vertex outside s has fewer than two neighbors
///   "undominated vertex"      — some vertex outside s has no neighbor in s
///   "no end super dominator"  — some vertex outside s has no private witness in s
EsdCheckDetail check_esd_detailed(const Graph& g, const VertexSet& s);

enum class Role { MAIN, TEMPORARY, STANDALONE, BACKUP };

std::string to_string(Role r);

/// Thrown by classify_roles when the set is not an ESD-set; carries the first
/// violated condition as its message.
struct NotEsdError : std::invalid_argument {
    explicit NotEsdError(const std::string& reason) : std::invalid_argument(reason) {}
};

/// Role of each vertex relative to an ESD-set s: members of s are MAIN (exactly one
/// complement neighbor), TEMPORARY (several) or STANDALONE (none); everything outside
/// s is BACKUP. Requires check_esd(g, s) to succeed.
std::map<int, Role> classify_roles(const Graph& g, const VertexSet& s);

}  // namespace esdom

#endif  // ESDOM_ESD_CHECK_HPP
