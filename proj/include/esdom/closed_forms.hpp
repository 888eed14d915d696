#ifndef ESDOM_CLOSED_FORMS_HPP
#define ESDOM_CLOSED_FORMS_HPP

#include "esdom/graph.hpp"

namespace esdom {

/// Exact minimum end-super-domination number for the structured families.
/// Domains: path n>=2, cycle n>=3, complete n>=1, kbip with min(a,b)>=2, star n>=2.
/// (complete:1 and complete:2 are the one- and two-vertex graphs, value n;
/// star:2 is the two-vertex graph as well.) Throws std::invalid_argument outside.
long long gamma_esp_formula(const FamilySpec& spec);

/// True when n_esp_formula is defined for the given family parameters.
bool n_esp_formula_defined(const FamilySpec& spec);

/// Number of minimum end super dominating sets for the structured families.
/// Domains: path n>=2, cycle n>=3, complete n>=3, kbip with min(a,b)>=2, star n>=2.
long long n_esp_formula(const FamilySpec& spec);

/// True when construct_optimal_set is defined for the given family parameters.
bool construction_defined(const FamilySpec& spec);

/// A concrete minimum end super dominating set of generate(spec), built directly
/// from the per-residue patterns (no search). Defined for path/cycle/complete/
/// kbip/star on the gamma_esp_formula domains.
VertexSet construct_optimal_set(const FamilySpec& spec);

}  // namespace esdom

#endif  // ESDOM_CLOSED_FORMS_HPP
