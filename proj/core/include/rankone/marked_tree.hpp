#pragma once

#include "rankone/increasing_tree.hpp"

namespace rankone {

/// An increasing tree with one distinguished vertex of rank exactly 1.
class MarkedTree {
 public:
  /// Throws DomainError if `mark` is not a vertex of rank 1.
  MarkedTree(IncreasingTree tree, Label mark);

  const IncreasingTree& tree() const noexcept { return tree_; }
  Label mark() const noexcept { return mark_; }
  std::size_t size() const noexcept { return tree_.size(); }

  friend bool operator==(const MarkedTree&, const MarkedTree&) = default;

 private:
  IncreasingTree tree_;
  Label mark_;
};

}  // namespace rankone
