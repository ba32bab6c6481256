#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rankone/increasing_tree.hpp"

namespace rankone {

/// One-line word of a permutation: each letter appears once.
class PermWord {
 public:
  PermWord() = default;

  /// Throws FormatError on a repeated letter.
  explicit PermWord(std::vector<Label> letters);

  std::span<const Label> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  /// Positions i with w[i] > w[i+1].
  std::size_t descents() const noexcept;

  /// Letters separated by single spaces, e.g. "4 7 5 2 6 1 3".
  std::string to_string() const;

  friend bool operator==(const PermWord&, const PermWord&) = default;

 private:
  std::vector<Label> letters_;
};

/// Depth search walk from the root with the root dropped. The tree must have
/// labels {0, ..., n-1}.
PermWord tree_to_perm(const IncreasingTree& tree);

/// The unique increasing tree whose walk word is `word`. Throws FormatError
/// unless `word` is a permutation of {1, ..., n-1}.
IncreasingTree perm_to_tree(const PermWord& word);

/// Permutation of a finite label set as disjoint cycles, always held in
/// canonical form: each cycle starts at its smallest label and cycles are
/// sorted by that label. A cycle (a b c) sends a to b, b to c and c to a.
class CycleDecomposition {
 public:
  CycleDecomposition() = default;

  /// Throws FormatError for empty cycles, negative or repeated labels.
  static CycleDecomposition from_cycles(std::vector<std::vector<Label>> cycles);

  /// Permutation of {0, ..., n-1} sending i to images[i].
  static CycleDecomposition from_images(std::span<const Label> images);

  std::span<const Label> ground_set() const noexcept { return ground_set_; }
  const std::vector<std::vector<Label>>& cycles() const noexcept {
    return cycles_;
  }
  std::size_t size() const noexcept { return ground_set_.size(); }

  bool contains(Label x) const noexcept;
  bool has_prefix_ground_set() const noexcept;

  bool is_derangement() const noexcept { return !first_fixed_point(); }
  std::optional<Label> first_fixed_point() const noexcept;

  /// The cycle holding x. Throws DomainError if x is absent.
  const std::vector<Label>& cycle_of(Label x) const;

  Label image(Label x) const;
  Label preimage(Label x) const;

  /// x deleted from its cycle; a 1-cycle disappears entirely.
  CycleDecomposition without(Label x) const;

  /// The whole cycle holding x removed.
  CycleDecomposition without_cycle_of(Label x) const;

  /// New label x spliced in as the successor of `anchor`.
  CycleDecomposition with_inserted_after(Label anchor, Label x) const;

  /// A new disjoint cycle added.
  CycleDecomposition with_cycle(std::vector<Label> cycle) const;

  /// "(a b c)(d e)"; the empty permutation prints as "".
  std::string to_string() const;

  friend bool operator==(const CycleDecomposition&,
                         const CycleDecomposition&) = default;

 private:
  explicit CycleDecomposition(std::vector<std::vector<Label>> cycles);
  std::size_t index_of_cycle(Label x) const;

  std::vector<Label> ground_set_;
  std::vector<std::vector<Label>> cycles_;
};

}  // namespace rankone
