#include "rankone/marked_tree.hpp"

#include <string>

#include "rankone/errors.hpp"
#include "rankone/rank.hpp"

namespace rankone {

MarkedTree::MarkedTree(IncreasingTree tree, Label mark)
    : tree_(std::move(tree)), mark_(mark) {
  const Rank r = rank(tree_, mark_);
  if (r != Rank{1}) {
    throw DomainError("mark not rank 1: vertex " + std::to_string(mark_) +
                      " has rank " + std::to_string(r.value));
  }
}

}  // namespace rankone
