#ifndef ESDOM_TREE_FAMILY_HPP
#define ESDOM_TREE_FAMILY_HPP

#include <optional>
#include <string>
#include <vector>

#include "esdom/graph.hpp"

namespace esdom {

enum class Color { AMBER, BLUE };

/// Even-order tree with the two-coloring that witnesses minimum-possible end super
/// domination: amber/blue classes of equal size, every leaf blue, and the amber-blue
/// edges forming a perfect matching. The blue class is then a minimum ESD-set.
struct TwoColoredTree {
    Graph tree;
    std::vector<Color> color;

    /// Throws std::invalid_argument when any structural invariant fails.
    void validate() const;
};

/// Growth script: a colored four-vertex path (blue, amber, amber, blue), then steps.
/// Each step attaches either a colored two-vertex path by an edge at an amber vertex
/// (kind 1) or a colored four-vertex path by an edge at a blue vertex (kind 2).
/// New vertices are appended at the end, attachment point first.
struct TreeBuildScript {
    struct Step {
        int kind;    // 1 or 2
        int attach;  // vertex label at the time the step runs
    };
    std::vector<Step> steps;
};

/// Text form: a "base" line, then one "O1@v" or "O2@v" line per step.
TreeBuildScript parse_build_script(const std::string& text);
std::string to_string(const TreeBuildScript& script);

/// Executes the script. Errors name the offending step (wrong attach color,
/// label out of range, size overflow).
TwoColoredTree build(const TreeBuildScript& script);

/// Decides membership in the buildable family and returns the witnessing coloring.
/// Walks a deepest path from its lexicographically smallest end and peels the end
/// back one growth step at a time (a pendant two-vertex tail below a branching
/// vertex, or a terminal four-vertex run). Returns nullopt for non-members; throws
/// std::invalid_argument when the input is not a tree.
std::optional<std::vector<Color>> recognize(const Graph& g);

/// The blue class (a minimum end super dominating set of the tree).
VertexSet esd_set_from_coloring(const TwoColoredTree& t);

}  // namespace esdom

#endif  // ESDOM_TREE_FAMILY_HPP
