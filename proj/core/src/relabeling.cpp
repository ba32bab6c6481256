#include "rankone/relabeling.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rankone/errors.hpp"

namespace rankone {

Relabeling Relabeling::compress(std::span<const Label> ground_set) {
  std::vector<Label> to(ground_set.size());
  std::iota(to.begin(), to.end(), Label{0});
  return between({ground_set.begin(), ground_set.end()}, std::move(to));
}

Relabeling Relabeling::between(std::vector<Label> from, std::vector<Label> to) {
  if (from.size() != to.size()) {
    throw DomainError("relabeling between sets of different sizes");
  }
  std::sort(from.begin(), from.end());
  std::sort(to.begin(), to.end());
  if (std::adjacent_find(from.begin(), from.end()) != from.end() ||
      std::adjacent_find(to.begin(), to.end()) != to.end()) {
    throw DomainError("relabeling sets must have distinct labels");
  }
  return Relabeling(std::move(from), std::move(to));
}

Label Relabeling::operator()(Label x) const {
  auto it = std::lower_bound(from_.begin(), from_.end(), x);
  if (it == from_.end() || *it != x) {
    throw DomainError("label outside relabeling domain: " + std::to_string(x));
  }
  return to_[static_cast<std::size_t>(it - from_.begin())];
}

CycleDecomposition relabel(const CycleDecomposition& p, const Relabeling& r) {
  std::vector<std::vector<Label>> cycles = p.cycles();
  for (auto& c : cycles) {
    for (auto& x : c) x = r(x);
  }
  return CycleDecomposition::from_cycles(std::move(cycles));
}

IncreasingTree relabel(const IncreasingTree& t, const Relabeling& r) {
  std::vector<Label> labels;
  labels.reserve(t.size());
  for (Label v : t.labels()) labels.push_back(r(v));
  auto edges = t.edges();
  for (auto& e : edges) e = {r(e.child), r(e.parent)};
  return IncreasingTree::from_edges(std::move(labels), edges);
}

MarkedTree relabel(const MarkedTree& t, const Relabeling& r) {
  return MarkedTree(relabel(t.tree(), r), r(t.mark()));
}

}  // namespace rankone
