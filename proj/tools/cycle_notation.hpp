#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "rankone/permutation.hpp"

namespace rankone::cli {

struct CycleParseOptions {
  /// When set, the labels must be exactly {0, ..., size-1}.
  std::optional<std::size_t> size;
  bool require_derangement = false;
};

/// Parses disjoint cycle notation such as "(0 5 3)(1 4 2)".
///
/// Inside a cycle, labels are separated by whitespace. A cycle written with
/// no whitespace at all is read one digit per label, so "(053)" is (0 5 3);
/// this compact form therefore only works for single-digit labels.
///
/// Syntax errors throw FormatError carrying the 1-based column. Semantic
/// errors (repeated, out-of-range or missing labels, fixed points) throw
/// DomainError naming the label.
CycleDecomposition parse_cycles(std::string_view text,
                                const CycleParseOptions& options = {});

}  // namespace rankone::cli
