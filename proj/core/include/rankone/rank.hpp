#pragma once

#include <vector>

#include "rankone/increasing_tree.hpp"

namespace rankone {

/// Ranks of every vertex of one tree, computed in a single bottom-up pass.
/// Snapshot semantics: edits to the tree afterwards are not reflected.
class RankTable {
 public:
  explicit RankTable(const IncreasingTree& tree);

  /// Throws DomainError for labels not in the tree.
  Rank operator[](Label v) const;

 private:
  std::vector<Rank> by_label_;
  std::vector<bool> present_;
};

/// 0 for a leaf, otherwise one more than the smallest rank among v's
/// children. Throws DomainError for unknown v.
Rank rank(const IncreasingTree& tree, Label v);

}  // namespace rankone
