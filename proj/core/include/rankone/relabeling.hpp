#pragma once

#include <span>
#include <vector>

#include "rankone/increasing_tree.hpp"
#include "rankone/marked_tree.hpp"
#include "rankone/permutation.hpp"

namespace rankone {

/// Order-preserving bijection between two label sets of equal size.
class Relabeling {
 public:
  /// The unique order isomorphism from `ground_set` onto {0, ..., m-1}.
  static Relabeling compress(std::span<const Label> ground_set);

  /// Order isomorphism from `from` onto `to`; both are sorted internally.
  static Relabeling between(std::vector<Label> from, std::vector<Label> to);

  /// Maps back the other way.
  Relabeling inverse() const { return Relabeling(to_, from_); }

  /// Throws DomainError for labels outside the domain.
  Label operator()(Label x) const;

  std::span<const Label> domain() const noexcept { return from_; }
  std::span<const Label> codomain() const noexcept { return to_; }

 private:
  Relabeling(std::vector<Label> from, std::vector<Label> to)
      : from_(std::move(from)), to_(std::move(to)) {}

  std::vector<Label> from_;
  std::vector<Label> to_;
};

CycleDecomposition relabel(const CycleDecomposition& p, const Relabeling& r);
IncreasingTree relabel(const IncreasingTree& t, const Relabeling& r);
MarkedTree relabel(const MarkedTree& t, const Relabeling& r);

}  // namespace rankone
