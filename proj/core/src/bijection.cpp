#include "rankone/bijection.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "rankone/errors.hpp"
#include "rankone/rank.hpp"
#include "rankone/relabeling.hpp"

namespace rankone {

namespace {

struct Step {
  MarkedTree tree;
  CaseTag tag;
};

void require_derangement(const CycleDecomposition& p) {
  if (auto fixed = p.first_fixed_point()) {
    throw DomainError("fixed point: " + std::to_string(*fixed));
  }
  if (!p.has_prefix_ground_set()) {
    throw DomainError("ground set must be 0.." + std::to_string(p.size() - 1));
  }
  if (p.size() < 2) throw DomainError("derangements need size >= 2");
}

void require_prefix_tree(const MarkedTree& mt) {
  if (!mt.tree().has_prefix_labels()) {
    throw DomainError("marked tree must have labels 0.." +
                      std::to_string(mt.size() - 1));
  }
  if (mt.size() < 2) throw DomainError("marked trees need size >= 2");
}

// The three images of sizes 2 and 3, by their derangements.
Step base_case(const CycleDecomposition& p) {
  const auto& cycle = p.cycles().front();
  if (p.size() == 2) {
    return {MarkedTree(IncreasingTree::from_parents(std::array{0}), 0),
            CaseTag::Base2};
  }
  if (cycle == std::vector<Label>{0, 1, 2}) {
    return {MarkedTree(IncreasingTree::from_parents(std::array{0, 1}), 1),
            CaseTag::Base3};
  }
  // (0 2 1)
  return {MarkedTree(IncreasingTree::from_parents(std::array{0, 0}), 0),
          CaseTag::Base3};
}

bool in_two_cycle(const CycleDecomposition& p, Label x) {
  return p.cycle_of(x).size() == 2;
}

TwoCycleReduction reduce(const CycleDecomposition& p, Label top);

Step forward_step(const CycleDecomposition& p) {
  if (p.size() <= 3) return base_case(p);
  const auto top = static_cast<Label>(p.size()) - 1;

  if (!in_two_cycle(p, top)) {
    const Label v = p.preimage(top);
    const MarkedTree reduced = forward_step(p.without(top)).tree;
    IncreasingTree t = reduced.tree();
    t.add_leaf(top, v);
    const Label k = reduced.mark();
    if (rank(t, k) == Rank{1}) {
      CaseTag tag = CaseTag::C1b;
      if (v == k) {
        tag = CaseTag::C1a;
      } else if (t.parent(v) == k) {
        tag = CaseTag::C1cI;
      }
      return {MarkedTree(std::move(t), k), tag};
    }
    // v was the only leaf child of k; v now has rank 1 and takes the mark.
    return {MarkedTree(std::move(t), v), CaseTag::C1cII};
  }

  auto [t, j, k] = reduce(p, top);
  if (k < j) {
    t.add_leaf(j, k);
    t.add_leaf(top, j);
    return {MarkedTree(std::move(t), j), CaseTag::C2b};
  }
  t = case2a_restructure(std::move(t), j, k);
  t.add_leaf(top, j);
  return {MarkedTree(std::move(t), j), CaseTag::C2a};
}

TwoCycleReduction reduce(const CycleDecomposition& p, Label top) {
  const Label j = p.image(top);
  const CycleDecomposition rest = p.without_cycle_of(top);
  const Relabeling squeeze = Relabeling::compress(rest.ground_set());
  const MarkedTree small = forward_step(relabel(rest, squeeze)).tree;
  const MarkedTree back = relabel(small, squeeze.inverse());
  return {back.tree(), j, back.mark()};
}

CycleDecomposition inverse_impl(const MarkedTree& mt);

// Recurse on a tree whose labels are a gap-ful subset, then restore them.
CycleDecomposition inverse_relabeled(const IncreasingTree& t, Label mark) {
  const Relabeling squeeze = Relabeling::compress(t.labels());
  const MarkedTree small(relabel(t, squeeze), squeeze(mark));
  return relabel(inverse_impl(small), squeeze.inverse());
}

// Undo case2a_restructure on the tree with n-1 already removed. `m` is the
// marked vertex; returns the pre-restructure tree (m deleted) and its mark.
std::pair<IncreasingTree, Label> undo_case2a(IncreasingTree t, Label m) {
  Label old_mark = -1;
  {
    const RankTable ranks(t);
    const auto walk = depth_search_walk(t, m);
    auto hit = std::find_if(walk.begin() + 1, walk.end(),
                            [&](Label x) { return ranks[x] == Rank{1}; });
    if (hit == walk.end()) {
      throw InvariantFailure("C2a inverse: no rank-1 vertex below mark " +
                             std::to_string(m));
    }
    old_mark = *hit;
  }

  const auto kids = t.children(m);
  const std::vector<Label> heads(kids.begin(), kids.end());
  if (heads.empty()) {
    throw InvariantFailure("C2a inverse: mark " + std::to_string(m) +
                           " has no children besides n-1");
  }
  // Fold c_m into c_{m-1}, then c_{m-1} into c_{m-2}, ..., c_2 into c_1.
  for (std::size_t i = heads.size() - 1; i >= 1; --i) {
    const Label moving = heads[i];
    const RankTable ranks(t);
    Label target = -1;
    for (Label q : depth_search_walk(t, heads[i - 1])) {
      const Rank r = ranks[q];
      const auto qk = t.children(q);
      if (r == Rank{1} ||
          (r >= Rank{2} && !qk.empty() && qk.back() > moving)) {
        target = q;
        break;
      }
    }
    if (target < 0) {
      throw InvariantFailure("C2a inverse: no attachment point for subtree " +
                             std::to_string(moving));
    }
    if (target >= moving) {
      throw InvariantFailure("C2a inverse: attachment point " +
                             std::to_string(target) + " is not below " +
                             std::to_string(moving));
    }
    t.move_subtree(moving, target);
  }
  t.splice_out(m);
  return {std::move(t), old_mark};
}

CycleDecomposition inverse_impl(const MarkedTree& mt) {
  const CaseTag tag = classify_tree(mt);
  const Label m = mt.mark();
  switch (tag) {
    case CaseTag::Base2:
      return CycleDecomposition::from_cycles({{0, 1}});
    case CaseTag::Base3:
      return CycleDecomposition::from_cycles(
          {m == 1 ? std::vector<Label>{0, 1, 2} : std::vector<Label>{0, 2, 1}});
    default:
      break;
  }

  const auto top = static_cast<Label>(mt.size()) - 1;
  IncreasingTree t = mt.tree();
  const Label v = *t.parent(top);
  t.remove_leaf(top);

  switch (tag) {
    case CaseTag::C1a:
    case CaseTag::C1b:
    case CaseTag::C1cI:
      return inverse_impl(MarkedTree(std::move(t), m))
          .with_inserted_after(v, top);
    case CaseTag::C1cII: {
      const Label up = *t.parent(m);
      return inverse_impl(MarkedTree(std::move(t), up))
          .with_inserted_after(m, top);
    }
    case CaseTag::C2b: {
      const Label up = *t.parent(m);
      t.remove_leaf(m);
      return inverse_relabeled(t, up).with_cycle({m, top});
    }
    case CaseTag::C2a: {
      auto [restored, old_mark] = undo_case2a(std::move(t), m);
      return inverse_relabeled(restored, old_mark).with_cycle({m, top});
    }
    default:
      throw InvariantFailure("unreachable case tag");
  }
}

}  // namespace

std::string_view to_string(CaseTag tag) noexcept {
  switch (tag) {
    case CaseTag::Base2: return "Base2";
    case CaseTag::Base3: return "Base3";
    case CaseTag::C1a: return "C1a";
    case CaseTag::C1b: return "C1b";
    case CaseTag::C1cI: return "C1cI";
    case CaseTag::C1cII: return "C1cII";
    case CaseTag::C2a: return "C2a";
    case CaseTag::C2b: return "C2b";
  }
  return "?";
}

CaseTag parse_case_tag(std::string_view name) {
  for (CaseTag tag : kAllCaseTags) {
    if (to_string(tag) == name) return tag;
  }
  throw FormatError("unknown case tag: " + std::string(name));
}

MarkedTree forward(const CycleDecomposition& p) {
  require_derangement(p);
  return forward_step(p).tree;
}

CaseTag classify_derangement(const CycleDecomposition& p) {
  require_derangement(p);
  if (p.size() <= 3) return p.size() == 2 ? CaseTag::Base2 : CaseTag::Base3;
  return forward_step(p).tag;
}

TwoCycleReduction reduce_two_cycle(const CycleDecomposition& p) {
  require_derangement(p);
  const auto top = static_cast<Label>(p.size()) - 1;
  if (p.size() < 4 || !in_two_cycle(p, top)) {
    throw DomainError("largest label is not in a 2-cycle of a size >= 4 "
                      "derangement");
  }
  return reduce(p, top);
}

IncreasingTree case2a_restructure(IncreasingTree t, Label partner, Label mark) {
  if (mark <= partner) {
    throw ContractViolation("case2a_restructure needs mark > partner, got " +
                            std::to_string(mark) +
                            " <= " + std::to_string(partner));
  }
  if (t.contains(partner)) {
    throw ContractViolation("partner " + std::to_string(partner) +
                            " already in tree");
  }
  if (rank(t, mark) != Rank{1}) {
    throw ContractViolation("mark " + std::to_string(mark) +
                            " does not have rank 1");
  }

  // The path vertex that ends up directly below `partner`: the first vertex
  // on the root-to-mark path with a larger label.
  Label below = mark;
  for (auto up = t.parent(mark); up && *up > partner; up = t.parent(*up)) {
    below = *up;
  }
  t.insert_above(partner, below);

  Label w = partner;
  while (w != mark) {
    const auto kids = t.children(w);
    const Label toward = *std::find_if(kids.begin(), kids.end(), [&](Label c) {
      return t.in_subtree(mark, c);
    });
    const Rank r = rank(t, w);
    const bool detach =
        w != partner &&
        (r == Rank{1} || (r >= Rank{2} && toward != kids.back()));
    if (detach) t.move_subtree(toward, partner);
    w = toward;
  }
  return t;
}

CycleDecomposition inverse(const MarkedTree& mt) {
  require_prefix_tree(mt);
  return inverse_impl(mt);
}

CaseTag classify_tree(const MarkedTree& mt) {
  if (mt.size() < 2) throw DomainError("marked trees need size >= 2");
  if (mt.size() == 2) return CaseTag::Base2;
  if (mt.size() == 3) return CaseTag::Base3;

  const IncreasingTree& t = mt.tree();
  const Label m = mt.mark();
  const Label top = t.max_label();
  const Label v = *t.parent(top);
  if (v != m) {
    return t.parent(v) == m ? CaseTag::C1cI : CaseTag::C1b;
  }
  const auto kids = t.children(m);
  if (kids.size() == 1) {
    // A root whose only child is the leaf n-1 means n == 2, handled above.
    const Label up = t.parent(m).value();
    return rank(t, up) == Rank{1} ? CaseTag::C2b : CaseTag::C1cII;
  }
  const bool leaf_sibling = std::any_of(kids.begin(), kids.end(), [&](Label c) {
    return c != top && t.is_leaf(c);
  });
  return leaf_sibling ? CaseTag::C1a : CaseTag::C2a;
}

}  // namespace rankone
