#include "rankone/rank.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "rankone/errors.hpp"

namespace rankone {

RankTable::RankTable(const IncreasingTree& tree) {
  const auto slots = static_cast<std::size_t>(tree.max_label()) + 1;
  by_label_.resize(slots);
  present_.resize(slots, false);
  // Children carry larger labels than their parent, so descending label order
  // visits every child before its parent.
  const auto labels = tree.labels();
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
    const Label v = *it;
    present_[v] = true;
    const auto kids = tree.children(v);
    if (kids.empty()) {
      by_label_[v] = Rank{0};
      continue;
    }
    auto best = std::numeric_limits<std::uint32_t>::max();
    for (Label c : kids) best = std::min(best, by_label_[c].value);
    by_label_[v] = Rank{best + 1};
  }
}

Rank RankTable::operator[](Label v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= present_.size() ||
      !present_[v]) {
    throw DomainError("unknown vertex: " + std::to_string(v));
  }
  return by_label_[v];
}

Rank rank(const IncreasingTree& tree, Label v) {
  if (!tree.contains(v)) {
    throw DomainError("unknown vertex: " + std::to_string(v));
  }
  return RankTable(tree)[v];
}

}  // namespace rankone
