#pragma once

#include <optional>
#include <string>

#include "rankone/increasing_tree.hpp"

namespace rankone::cli {

/// Graphviz digraph of `tree`: one node statement per vertex, one edge per
/// parent link, both in ascending label order. A marked vertex is drawn as a
/// filled red box.
std::string to_dot(const IncreasingTree& tree,
                   std::optional<Label> mark = std::nullopt);

}  // namespace rankone::cli
