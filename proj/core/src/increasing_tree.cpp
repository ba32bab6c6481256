#include "rankone/increasing_tree.hpp"

#include <algorithm>
#include <string>

#include "rankone/errors.hpp"

namespace rankone {

namespace {

std::string label_str(Label v) { return std::to_string(v); }

}  // namespace

IncreasingTree IncreasingTree::singleton(Label root) {
  if (root < 0) throw DomainError("negative label: " + label_str(root));
  IncreasingTree t;
  t.insert_label(root);
  t.parent_[root] = kNoParent;
  return t;
}

IncreasingTree IncreasingTree::from_parents(std::span<const Label> parents) {
  IncreasingTree t = singleton(0);
  for (std::size_t i = 0; i < parents.size(); ++i) {
    const auto v = static_cast<Label>(i + 1);
    const Label p = parents[i];
    if (p < 0 || p >= v) {
      throw DomainError("parent of " + label_str(v) + " is " + label_str(p) +
                        ", must be in [0, " + label_str(v) + ")");
    }
    t.add_leaf(v, p);
  }
  return t;
}

IncreasingTree IncreasingTree::from_edges(std::vector<Label> labels,
                                          std::span<const Edge> edges) {
  if (labels.empty()) throw DomainError("tree needs at least one vertex");
  std::sort(labels.begin(), labels.end());
  if (labels.front() < 0) {
    throw DomainError("negative label: " + label_str(labels.front()));
  }
  if (auto dup = std::adjacent_find(labels.begin(), labels.end());
      dup != labels.end()) {
    throw DomainError("repeated label: " + label_str(*dup));
  }
  const Label max = labels.back();
  std::vector<Label> parent(static_cast<std::size_t>(max) + 1, kAbsent);
  for (const Edge& e : edges) {
    if (!std::binary_search(labels.begin(), labels.end(), e.child)) {
      throw DomainError("edge names unknown vertex " + label_str(e.child));
    }
    if (!std::binary_search(labels.begin(), labels.end(), e.parent)) {
      throw DomainError("edge names unknown vertex " + label_str(e.parent));
    }
    if (e.parent >= e.child) {
      throw DomainError("edge " + label_str(e.child) + ":" +
                        label_str(e.parent) + " is not increasing");
    }
    if (parent[e.child] != kAbsent) {
      throw DomainError("vertex " + label_str(e.child) +
                        " has more than one parent");
    }
    parent[e.child] = e.parent;
  }
  IncreasingTree t = singleton(labels.front());
  // Every parent is smaller than its child, so ascending order attaches
  // parents before children.
  for (std::size_t i = 1; i < labels.size(); ++i) {
    const Label v = labels[i];
    if (parent[v] == kAbsent) {
      throw DomainError("vertex " + label_str(v) + " has no parent");
    }
    t.add_leaf(v, parent[v]);
  }
  return t;
}

bool IncreasingTree::contains(Label v) const noexcept {
  return v >= 0 && static_cast<std::size_t>(v) < parent_.size() &&
         parent_[v] != kAbsent;
}

bool IncreasingTree::has_prefix_labels() const noexcept {
  return labels_.front() == 0 &&
         labels_.back() == static_cast<Label>(labels_.size()) - 1;
}

std::optional<Label> IncreasingTree::parent(Label v) const {
  require(v);
  if (parent_[v] == kNoParent) return std::nullopt;
  return parent_[v];
}

std::span<const Label> IncreasingTree::children(Label v) const {
  require(v);
  return children_[v];
}

bool IncreasingTree::in_subtree(Label v, Label top) const {
  require(v);
  require(top);
  // Labels increase downward, so the climb can stop once it passes `top`.
  while (v > top) v = parent_[v];
  return v == top;
}

std::vector<Edge> IncreasingTree::edges() const {
  std::vector<Edge> out;
  out.reserve(labels_.size() - 1);
  for (std::size_t i = 1; i < labels_.size(); ++i) {
    out.push_back({labels_[i], parent_[labels_[i]]});
  }
  return out;
}

void IncreasingTree::add_leaf(Label v, Label parent) {
  if (v < 0) throw ContractViolation("negative label: " + label_str(v));
  if (contains(v)) {
    throw ContractViolation("vertex " + label_str(v) + " already present");
  }
  require(parent);
  if (parent >= v) {
    throw ContractViolation("cannot attach " + label_str(v) + " below " +
                            label_str(parent));
  }
  insert_label(v);
  link(v, parent);
}

void IncreasingTree::remove_leaf(Label v) {
  require(v);
  if (!children_[v].empty()) {
    throw ContractViolation("vertex " + label_str(v) + " is not a leaf");
  }
  if (parent_[v] == kNoParent) {
    throw ContractViolation("cannot remove the root");
  }
  unlink(v);
  erase_label(v);
}

void IncreasingTree::move_subtree(Label v, Label new_parent) {
  require(v);
  require(new_parent);
  if (parent_[v] == kNoParent) {
    throw ContractViolation("cannot move the root");
  }
  if (new_parent >= v) {
    throw ContractViolation("cannot move " + label_str(v) + " below " +
                            label_str(new_parent));
  }
  unlink(v);
  link(v, new_parent);
}

void IncreasingTree::insert_above(Label v, Label below) {
  if (v < 0) throw ContractViolation("negative label: " + label_str(v));
  if (contains(v)) {
    throw ContractViolation("vertex " + label_str(v) + " already present");
  }
  require(below);
  const Label up = parent_[below];
  if (v >= below || (up != kNoParent && up >= v)) {
    throw ContractViolation("cannot insert " + label_str(v) + " above " +
                            label_str(below));
  }
  if (up == kNoParent && v > labels_.front()) {
    throw ContractViolation("new root " + label_str(v) +
                            " must be below every label");
  }
  insert_label(v);
  if (up == kNoParent) {
    parent_[v] = kNoParent;
  } else {
    unlink(below);
    link(v, up);
  }
  link(below, v);
}

void IncreasingTree::splice_out(Label v) {
  require(v);
  if (children_[v].size() != 1) {
    throw ContractViolation("vertex " + label_str(v) +
                            " must have exactly one child to splice out");
  }
  const Label child = children_[v].front();
  const Label up = parent_[v];
  unlink(child);
  if (up == kNoParent) {
    parent_[child] = kNoParent;
  } else {
    unlink(v);
    link(child, up);
  }
  erase_label(v);
}

bool operator==(const IncreasingTree& a, const IncreasingTree& b) {
  if (a.labels_ != b.labels_) return false;
  return std::all_of(a.labels_.begin(), a.labels_.end(),
                     [&](Label v) { return a.parent_[v] == b.parent_[v]; });
}

void IncreasingTree::require(Label v) const {
  if (!contains(v)) throw DomainError("unknown vertex: " + label_str(v));
}

void IncreasingTree::grow_to(Label v) {
  const auto need = static_cast<std::size_t>(v) + 1;
  if (parent_.size() < need) {
    parent_.resize(need, kAbsent);
    children_.resize(need);
  }
}

void IncreasingTree::link(Label child, Label parent) {
  parent_[child] = parent;
  auto& siblings = children_[parent];
  siblings.insert(std::upper_bound(siblings.begin(), siblings.end(), child),
                  child);
}

void IncreasingTree::unlink(Label child) {
  auto& siblings = children_[parent_[child]];
  siblings.erase(std::find(siblings.begin(), siblings.end(), child));
  parent_[child] = kNoParent;
}

void IncreasingTree::insert_label(Label v) {
  grow_to(v);
  labels_.insert(std::upper_bound(labels_.begin(), labels_.end(), v), v);
}

void IncreasingTree::erase_label(Label v) {
  labels_.erase(std::lower_bound(labels_.begin(), labels_.end(), v));
  parent_[v] = kAbsent;
  children_[v].clear();
  while (!parent_.empty() && parent_.back() == kAbsent) {
    parent_.pop_back();
    children_.pop_back();
  }
}

std::vector<Label> depth_search_walk(const IncreasingTree& tree, Label start) {
  std::vector<Label> order;
  std::vector<Label> stack{start};
  (void)tree.children(start);  // validates `start`
  while (!stack.empty()) {
    const Label v = stack.back();
    stack.pop_back();
    order.push_back(v);
    // Ascending push: the greatest child is popped first.
    const auto kids = tree.children(v);
    stack.insert(stack.end(), kids.begin(), kids.end());
  }
  return order;
}

std::vector<Label> leaves(const IncreasingTree& tree) {
  std::vector<Label> out;
  for (Label v : tree.labels()) {
    if (tree.is_leaf(v)) out.push_back(v);
  }
  return out;
}

}  // namespace rankone
