#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rankone/increasing_tree.hpp"
#include "rankone/marked_tree.hpp"
#include "rankone/permutation.hpp"

namespace rankone {

// Text forms:
//   prefix labels   size=<n>;parents=<p1,...,p_{n-1}>
//   general labels  labels=<l1,...>;edges=<child:parent,...>
//   marked trees    either form followed by ;mark=<k>
// Lists are ascending by label, comma separated, no spaces.

std::string to_string(const IncreasingTree& tree);
std::string to_string(const MarkedTree& tree);

/// Accepts both tree forms. Throws FormatError (syntax) or DomainError
/// (invalid tree).
IncreasingTree parse_tree(std::string_view text);

/// Requires a trailing mark field naming a rank-1 vertex.
MarkedTree parse_marked_tree(std::string_view text);

/// Parses a string that may or may not carry a mark field.
struct ParsedTree {
  IncreasingTree tree;
  std::optional<Label> mark;
};
ParsedTree parse_tree_or_marked(std::string_view text);

/// Letters separated by whitespace, or a run of single digits ("4752613").
PermWord parse_perm_word(std::string_view text);

}  // namespace rankone
