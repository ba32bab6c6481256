#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "printers.hpp"
#include "rankone/bijection.hpp"
#include "rankone/enumeration.hpp"
#include "rankone/errors.hpp"
#include "rankone/rank.hpp"
#include "rankone/relabeling.hpp"
#include "rankone/serialization.hpp"

namespace rankone {
namespace {

CycleDecomposition cycles(std::vector<std::vector<Label>> c) {
  return CycleDecomposition::from_cycles(std::move(c));
}

std::string image(std::vector<std::vector<Label>> c) {
  return to_string(forward(cycles(std::move(c))));
}

TEST(Forward, BaseCases) {
  EXPECT_EQ(image({{0, 1}}), "size=2;parents=0;mark=0");
  EXPECT_EQ(image({{0, 1, 2}}), "size=3;parents=0,1;mark=1");
  EXPECT_EQ(image({{0, 2, 1}}), "size=3;parents=0,0;mark=0");
}

TEST(Forward, WorkedCase1a) {
  // Intermediate f_5((0 3)(1 4 2)): root marked, 1 -> {2, 4}, 0 -> 3.
  EXPECT_EQ(image({{0, 3}, {1, 4, 2}}), "size=5;parents=0,1,0,1;mark=0");
  EXPECT_EQ(image({{0, 5, 3}, {1, 4, 2}}), "size=6;parents=0,1,0,1,0;mark=0");
}

TEST(Forward, WorkedCase1b) {
  EXPECT_EQ(image({{0, 2, 3}, {1, 4}}), "size=5;parents=0,1,2,1;mark=1");
  EXPECT_EQ(image({{0, 5, 2, 3}, {1, 4}}), "size=6;parents=0,1,2,1,0;mark=1");
}

TEST(Forward, WorkedCase1cI) {
  EXPECT_EQ(image({{0, 3, 1, 4, 2}}), "size=5;parents=0,1,0,1;mark=1");
  EXPECT_EQ(image({{0, 3, 1, 4, 2, 5}}), "size=6;parents=0,1,0,1,2;mark=1");
}

TEST(Forward, WorkedCase1cII) {
  EXPECT_EQ(image({{0, 1, 3, 2, 4}}), "size=5;parents=0,1,1,2;mark=1");
  // The re-marked tree: 5 hangs below 3 and 3 takes the mark.
  EXPECT_EQ(image({{0, 1, 3, 5, 2, 4}}), "size=6;parents=0,1,1,2,3;mark=3");
}

TEST(Forward, WorkedCase2a) {
  // f_8 of the reduced derangement, on labels 1..8: 1 -> {2, 3}, 3 -> 5,
  // 2 -> {4, 6}, 4 -> 7, 6 -> 8, mark 4.
  const auto r = reduce_two_cycle(cycles({{0, 9}, {1, 3, 5, 2, 6, 8}, {4, 7}}));
  EXPECT_EQ(to_string(r.tree),
            "labels=1,2,3,4,5,6,7,8;edges=2:1,3:1,4:2,5:3,6:2,7:4,8:6");
  EXPECT_EQ(r.partner, 0);
  EXPECT_EQ(r.mark, 4);
  EXPECT_EQ(image({{0, 9}, {1, 3, 5, 2, 6, 8}, {4, 7}}),
            "size=10;parents=0,0,1,0,3,2,4,6,0;mark=0");
}

TEST(Forward, WorkedCase2b) {
  // f_8 of (0 2 5 1 6 8)(3 7), drawn on its own labels: 0 -> {1, 2},
  // 2 -> 5, 1 -> {3, 6}, 3 -> 7, 6 -> 8, mark 3.
  const auto r =
      reduce_two_cycle(cycles({{0, 2, 5, 1, 6, 8}, {3, 7}, {4, 9}}));
  EXPECT_EQ(to_string(r.tree),
            "labels=0,1,2,3,5,6,7,8;edges=1:0,2:0,3:1,5:2,6:1,7:3,8:6");
  EXPECT_EQ(r.partner, 4);
  EXPECT_EQ(r.mark, 3);
  EXPECT_EQ(image({{0, 2, 5, 1, 6, 8}, {3, 7}, {4, 9}}),
            "size=10;parents=0,0,1,3,2,1,3,6,4;mark=4");
}

TEST(Forward, RejectsInvalidInput) {
  EXPECT_THROW(forward(cycles({{0}, {1, 2}})), DomainError);
  EXPECT_THROW(forward(cycles({{1, 2}})), DomainError);
  EXPECT_THROW(forward(cycles({{0, 1}, {3, 4}})), DomainError);
  EXPECT_THROW(forward(CycleDecomposition{}), DomainError);
}

TEST(ClassifyDerangement, WorkedExamples) {
  EXPECT_EQ(classify_derangement(cycles({{0, 1}})), CaseTag::Base2);
  EXPECT_EQ(classify_derangement(cycles({{0, 2, 1}})), CaseTag::Base3);
  EXPECT_EQ(classify_derangement(cycles({{0, 5, 3}, {1, 4, 2}})), CaseTag::C1a);
  EXPECT_EQ(classify_derangement(cycles({{0, 5, 2, 3}, {1, 4}})), CaseTag::C1b);
  EXPECT_EQ(classify_derangement(cycles({{0, 3, 1, 4, 2, 5}})), CaseTag::C1cI);
  EXPECT_EQ(classify_derangement(cycles({{0, 1, 3, 5, 2, 4}})),
            CaseTag::C1cII);
  EXPECT_EQ(classify_derangement(cycles({{0, 9}, {1, 3, 5, 2, 6, 8}, {4, 7}})),
            CaseTag::C2a);
  EXPECT_EQ(classify_derangement(cycles({{0, 2, 5, 1, 6, 8}, {3, 7}, {4, 9}})),
            CaseTag::C2b);
  EXPECT_THROW(classify_derangement(cycles({{0}, {1, 2}})), DomainError);
}

TEST(ClassifyTree, WorkedExamples) {
  EXPECT_EQ(classify_tree(forward(cycles({{0, 5, 3}, {1, 4, 2}}))),
            CaseTag::C1a);
  EXPECT_EQ(classify_tree(forward(cycles({{0, 1, 3, 5, 2, 4}}))),
            CaseTag::C1cII);
  EXPECT_EQ(classify_tree(forward(cycles({{0, 2, 5, 1, 6, 8}, {3, 7}, {4, 9}}))),
            CaseTag::C2b);
  EXPECT_EQ(classify_tree(parse_marked_tree("size=2;parents=0;mark=0")),
            CaseTag::Base2);
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(parse_marked_tree("size=2;parents=0;mark=0")),
            cycles({{0, 1}}));
  EXPECT_EQ(inverse(parse_marked_tree("size=6;parents=0,1,0,1,0;mark=0")),
            cycles({{0, 5, 3}, {1, 4, 2}}));
  EXPECT_EQ(
      inverse(parse_marked_tree("size=10;parents=0,0,1,0,3,2,4,6,0;mark=0")),
      cycles({{0, 9}, {1, 3, 5, 2, 6, 8}, {4, 7}}));
  EXPECT_EQ(
      inverse(parse_marked_tree("size=10;parents=0,0,1,3,2,1,3,6,4;mark=4")),
      cycles({{0, 2, 5, 1, 6, 8}, {3, 7}, {4, 9}}));
}

TEST(Inverse, RejectsGeneralLabels) {
  EXPECT_THROW(inverse(parse_marked_tree("labels=1,2;edges=2:1;mark=1")),
               DomainError);
}

TEST(Case2aRestructure, WorkedExample) {
  const std::vector<Edge> e{{3, 1}, {5, 3}, {2, 1}, {4, 2},
                            {7, 4}, {6, 2}, {8, 6}};
  auto t = IncreasingTree::from_edges({1, 2, 3, 4, 5, 6, 7, 8}, e);
  const auto out = case2a_restructure(t, 0, 4);
  const std::vector<Edge> want{{1, 0}, {3, 1}, {5, 3}, {2, 0},
                               {6, 2}, {8, 6}, {4, 0}, {7, 4}};
  EXPECT_EQ(out, IncreasingTree::from_edges({0, 1, 2, 3, 4, 5, 6, 7, 8}, want));
}

TEST(Case2aRestructure, MarkBelowPartnerWithoutMoves) {
  const std::vector<Edge> e{{2, 1}};
  const auto t = IncreasingTree::from_edges({1, 2}, e);
  const auto out = case2a_restructure(t, 0, 1);
  EXPECT_EQ(to_string(out), "size=3;parents=0,1");
}

TEST(Case2aRestructure, PartnerInsertedMidPath) {
  // 0 -> 1 -> 3 -> 4 with 0 -> 5; inserting 2 lands between 1 and 3.
  const std::vector<Edge> e{{1, 0}, {3, 1}, {4, 3}, {5, 0}};
  const auto t = IncreasingTree::from_edges({0, 1, 3, 4, 5}, e);
  const auto out = case2a_restructure(t, 2, 3);
  EXPECT_EQ(out.parent(2), 1);
  EXPECT_EQ(out.parent(3), 2);
}

TEST(Case2aRestructure, ContractViolations) {
  const std::vector<Edge> e{{2, 1}};
  const auto t = IncreasingTree::from_edges({1, 2}, e);
  EXPECT_THROW(case2a_restructure(t, 0, 2), ContractViolation);  // rank 0
  const std::vector<Edge> e2{{3, 2}};
  const auto t2 = IncreasingTree::from_edges({2, 3}, e2);
  EXPECT_THROW(case2a_restructure(t2, 4, 2), ContractViolation);  // k <= j
  EXPECT_THROW(case2a_restructure(t2, 3, 2), ContractViolation);
}

// After restructuring, the walk from the partner meets the old mark before
// any other rank-1 vertex. Checked over every marked tree t of size <= 6 and
// every admissible partner label, with brute-force walk and rank.
TEST(Case2aRestructure, WalkPropertyExhaustive) {
  for (std::size_t size = 2; size <= 6; ++size) {
    MarkedTreeStream stream(size);
    while (auto mt = stream.next()) {
      // Shift labels up to make room for a partner in every gap.
      for (Label j = 0; j <= mt->mark(); ++j) {
        std::vector<Label> from(mt->tree().labels().begin(),
                                mt->tree().labels().end());
        std::vector<Label> to;
        for (Label v : from) to.push_back(v < j ? v : v + 1);
        const auto shift = Relabeling::between(from, to);
        const IncreasingTree t = relabel(mt->tree(), shift);
        const Label k = shift(mt->mark());
        const auto out = case2a_restructure(t, j, k);

        oracle::ParentTable table(static_cast<std::size_t>(out.max_label()) + 1,
                                  -1);
        for (const Edge& e : out.edges()) table[e.child] = e.parent;
        const auto walk = oracle::walk(table, j);
        auto first = std::find_if(walk.begin() + 1, walk.end(), [&](int x) {
          return oracle::rank_bfs(table, x) == 1;
        });
        ASSERT_NE(first, walk.end());
        ASSERT_EQ(*first, k) << to_string(out) << " j=" << j;
      }
    }
  }
}

TEST(Relabel, Examples) {
  const auto p = cycles({{1, 3, 5, 2, 6, 8}, {4, 7}});
  const auto squeeze = Relabeling::compress(p.ground_set());
  EXPECT_EQ(relabel(p, squeeze).to_string(), "(0 2 4 1 5 7)(3 6)");
  EXPECT_EQ(relabel(relabel(p, squeeze), squeeze.inverse()), p);

  const auto q = cycles({{0, 2}, {1, 3}});
  EXPECT_EQ(relabel(q, Relabeling::compress(q.ground_set())), q);

  const auto r = cycles({{2, 5}, {3, 4}});
  EXPECT_EQ(relabel(r, Relabeling::compress(r.ground_set())).to_string(),
            "(0 3)(1 2)");

  EXPECT_THROW(relabel(cycles({{0, 9}}), squeeze), DomainError);
  EXPECT_THROW(Relabeling::between({1, 2}, {0}), DomainError);
}

TEST(CaseTag, NamesRoundTrip) {
  for (CaseTag tag : kAllCaseTags) {
    EXPECT_EQ(parse_case_tag(to_string(tag)), tag);
  }
  EXPECT_THROW(parse_case_tag("C3"), FormatError);
}

// classify_tree reads the case off the image; it must agree with the case
// the construction actually took.
TEST(BijectionProperties, RoundTripAndCoherenceUpToSeven) {
  for (std::size_t n = 2; n <= 7; ++n) {
    DerangementStream ds(n);
    while (auto p = ds.next()) {
      const MarkedTree mt = forward(*p);
      ASSERT_EQ(mt.size(), n);
      ASSERT_EQ(rank(mt.tree(), mt.mark()), Rank{1});
      ASSERT_EQ(inverse(mt), *p) << p->to_string();
      const CaseTag tag = classify_derangement(*p);
      ASSERT_EQ(classify_tree(mt), tag) << p->to_string();

      if (tag == CaseTag::C2a) {
        const Label top = static_cast<Label>(n) - 1;
        const auto kids = mt.tree().children(mt.mark());
        ASSERT_GT(kids.size(), 1u);
        for (Label c : kids) {
          ASSERT_TRUE(c == top || !mt.tree().is_leaf(c));
        }
      }
    }
    MarkedTreeStream ms(n);
    while (auto mt = ms.next()) {
      ASSERT_EQ(forward(inverse(*mt)), *mt) << to_string(*mt);
    }
  }
}

// Beyond the exhaustive range: random derangements of size up to 16.
TEST(BijectionProperties, RandomLargeDerangements) {
  std::mt19937 rng(7);
  int checked = 0;
  while (checked < 400) {
    const auto n = std::uniform_int_distribution<std::size_t>(2, 16)(rng);
    std::vector<Label> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    const auto p = CycleDecomposition::from_images(images);
    if (!p.is_derangement()) continue;
    const MarkedTree mt = forward(p);
    ASSERT_EQ(inverse(mt), p) << p.to_string();
    ASSERT_EQ(classify_tree(mt), classify_derangement(p)) << p.to_string();
    ++checked;
  }
}

}  // namespace
}  // namespace rankone
