#include <algorithm>
#include <string>

#include "rankone/errors.hpp"
#include "rankone/permutation.hpp"

namespace rankone {

PermWord::PermWord(std::vector<Label> letters) : letters_(std::move(letters)) {
  std::vector<Label> sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      dup != sorted.end()) {
    throw FormatError("repeated letter: " + std::to_string(*dup));
  }
}

std::size_t PermWord::descents() const noexcept {
  std::size_t count = 0;
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i - 1] > letters_[i]) ++count;
  }
  return count;
}

std::string PermWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

PermWord tree_to_perm(const IncreasingTree& tree) {
  if (!tree.has_prefix_labels()) {
    throw DomainError("tree_to_perm needs labels 0..n-1");
  }
  auto walk = depth_search_walk(tree, tree.root());
  walk.erase(walk.begin());
  return PermWord(std::move(walk));
}

IncreasingTree perm_to_tree(const PermWord& word) {
  const auto letters = word.letters();
  const auto n = static_cast<Label>(letters.size()) + 1;
  for (Label x : letters) {
    if (x < 1 || x >= n) {
      throw FormatError("word is not a permutation of 1.." +
                        std::to_string(n - 1) + ": letter " +
                        std::to_string(x));
    }
  }
  // Replay the walk: the parent of each letter is the nearest vertex on the
  // current root path that is smaller than it.
  std::vector<Label> parents(letters.size());
  std::vector<Label> path{0};
  for (Label x : letters) {
    while (path.back() > x) path.pop_back();
    parents[x - 1] = path.back();
    path.push_back(x);
  }
  return IncreasingTree::from_parents(parents);
}

}  // namespace rankone
