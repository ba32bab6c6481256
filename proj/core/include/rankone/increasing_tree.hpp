#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rankone/types.hpp"

namespace rankone {

struct Edge {
  Label child;
  Label parent;
};

/// Rooted nonplanar tree on a finite set of nonnegative labels in which every
/// parent is smaller than its children. The minimum label is the root.
///
/// Stored as a parent table keyed by label. Child lists are derived and kept
/// in ascending order; that order carries no meaning beyond being canonical.
/// The structural edits below keep the increasing property and throw
/// ContractViolation if they would break it.
class IncreasingTree {
 public:
  /// Tree with the single vertex `root`.
  static IncreasingTree singleton(Label root = 0);

  /// Tree on {0, ..., n-1} where `parents[v-1]` is the parent of v.
  static IncreasingTree from_parents(std::span<const Label> parents);

  /// Tree on an arbitrary label set. Every label except the minimum needs
  /// exactly one edge.
  static IncreasingTree from_edges(std::vector<Label> labels,
                                   std::span<const Edge> edges);

  std::size_t size() const noexcept { return labels_.size(); }
  std::span<const Label> labels() const noexcept { return labels_; }
  Label root() const noexcept { return labels_.front(); }
  Label max_label() const noexcept { return labels_.back(); }

  bool contains(Label v) const noexcept;

  /// True when the label set is exactly {0, ..., size()-1}.
  bool has_prefix_labels() const noexcept;

  /// Parent of v, empty for the root. Throws DomainError for unknown v.
  std::optional<Label> parent(Label v) const;

  /// Children of v in ascending order.
  std::span<const Label> children(Label v) const;

  bool is_leaf(Label v) const { return children(v).empty(); }

  /// True when `v` lies in the subtree rooted at `top` (v == top included).
  bool in_subtree(Label v, Label top) const;

  /// Parents of all non-root vertices, in ascending order of the child.
  std::vector<Edge> edges() const;

  // Structural edits.

  /// Adds the new vertex v as a leaf below `parent`.
  void add_leaf(Label v, Label parent);

  /// Removes the leaf v. The root cannot be removed.
  void remove_leaf(Label v);

  /// Re-hangs the subtree rooted at v below `new_parent`.
  void move_subtree(Label v, Label new_parent);

  /// Inserts the new vertex v into the edge above `below`: v takes the place
  /// of `below`, which becomes v's only child. v may become the new root.
  void insert_above(Label v, Label below);

  /// Removes v, which must have exactly one child; that child takes v's place.
  void splice_out(Label v);

  friend bool operator==(const IncreasingTree& a, const IncreasingTree& b);

 private:
  IncreasingTree() = default;

  static constexpr Label kAbsent = -2;
  static constexpr Label kNoParent = -1;

  void require(Label v) const;
  void grow_to(Label v);
  void link(Label child, Label parent);
  void unlink(Label child);
  void insert_label(Label v);
  void erase_label(Label v);

  std::vector<Label> labels_;                 // ascending
  std::vector<Label> parent_;                 // indexed by label
  std::vector<std::vector<Label>> children_;  // indexed by label, ascending
};

/// Vertices of the subtree rooted at `start` in depth-search-walk order: from
/// each vertex descend into its greatest unvisited child first.
std::vector<Label> depth_search_walk(const IncreasingTree& tree, Label start);

/// Vertices with no children, ascending.
std::vector<Label> leaves(const IncreasingTree& tree);

}  // namespace rankone
