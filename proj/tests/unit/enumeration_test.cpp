#include <gtest/gtest.h>

#include <set>

#include "json.hpp"
#include "oracles.hpp"
#include "printers.hpp"
#include "rankone/enumeration.hpp"
#include "rankone/errors.hpp"
#include "rankone/serialization.hpp"

namespace rankone {
namespace {

template <typename Stream>
std::size_t drain(Stream s) {
  std::size_t count = 0;
  while (s.next()) ++count;
  return count;
}

TEST(IncreasingTreeStream, Counts) {
  EXPECT_EQ(drain(IncreasingTreeStream(1)), 1u);
  EXPECT_EQ(drain(IncreasingTreeStream(4)), 6u);
  EXPECT_EQ(drain(IncreasingTreeStream(7)), oracle::factorial(6));
  EXPECT_THROW(IncreasingTreeStream(0), DomainError);
}

TEST(IncreasingTreeStream, DistinctAndRestartable) {
  IncreasingTreeStream s(6);
  std::vector<std::string> first;
  while (auto t = s.next()) first.push_back(to_string(*t));
  s.reset();
  std::vector<std::string> second;
  while (auto t = s.next()) second.push_back(to_string(*t));
  EXPECT_EQ(first, second);
  EXPECT_EQ(std::set<std::string>(first.begin(), first.end()).size(),
            first.size());
}

TEST(DerangementStream, Examples) {
  EXPECT_EQ(drain(DerangementStream(1)), 0u);
  DerangementStream three(3);
  EXPECT_EQ(three.next()->to_string(), "(0 1 2)");
  EXPECT_EQ(three.next()->to_string(), "(0 2 1)");
  EXPECT_FALSE(three.next());
  EXPECT_EQ(drain(DerangementStream(6)), oracle::derangement_count(6));
}

TEST(DerangementStream, CountsMatchInclusionExclusion) {
  for (unsigned n = 1; n <= 8; ++n) {
    std::set<std::string> seen;
    DerangementStream s(n);
    while (auto p = s.next()) {
      ASSERT_TRUE(p->is_derangement());
      ASSERT_EQ(p->size(), n);
      seen.insert(p->to_string());
    }
    EXPECT_EQ(seen.size(), oracle::derangement_count(n)) << "n=" << n;
  }
}

TEST(MarkedTreeStream, Examples) {
  EXPECT_EQ(drain(MarkedTreeStream(1)), 0u);
  MarkedTreeStream two(2);
  EXPECT_EQ(to_string(*two.next()), "size=2;parents=0;mark=0");
  EXPECT_FALSE(two.next());
  EXPECT_EQ(drain(MarkedTreeStream(5)), 44u);
}

TEST(MarkedTreeStream, CountsMatchBruteForce) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(drain(MarkedTreeStream(static_cast<std::size_t>(n))),
              oracle::marked_tree_count(n))
        << "n=" << n;
  }
}

TEST(CountRankK, Examples) {
  EXPECT_EQ(count_rank_k(4, 0), 12u);
  EXPECT_EQ(count_rank_k(6, 1), 265u);
  EXPECT_EQ(count_rank_k(2, 1), 1u);
  EXPECT_EQ(count_rank_k(1, 0), 1u);
}

TEST(CountRankK, EveryVertexHasOneRank) {
  for (unsigned n = 1; n <= 8; ++n) {
    std::uint64_t sum = 0;
    for (std::uint32_t k = 0; k < n; ++k) sum += count_rank_k(n, k);
    EXPECT_EQ(sum, n * oracle::factorial(n - 1)) << "n=" << n;
    if (n >= 2) EXPECT_EQ(count_rank_k(n, 0), oracle::factorial(n) / 2);
    EXPECT_EQ(count_rank_k(n, 1), oracle::derangement_count(n));
  }
}

TEST(RankCountTable, RowsFollowCountRankK) {
  const auto rows = rank_count_table(6, 2);
  ASSERT_EQ(rows.size(), 6u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.k, 2u);
    EXPECT_EQ(r.count, count_rank_k(r.n, 2));
  }
}

TEST(RecurrenceCheck, Rows) {
  const auto rows = recurrence_check(5);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].a_n, 0u);
  EXPECT_EQ(rows[1].a_n, 1u);
  EXPECT_FALSE(rows[1].derangement_residual);
  EXPECT_EQ(rows[2].a_n, 2u);
  EXPECT_EQ(rows[3].a_n, 9u);
  EXPECT_EQ(rows[3].derangement_residual, 0);
  EXPECT_EQ(rows[3].scaled_variant_residual, 9 - 4 * 2 - 4 * 1);
  EXPECT_EQ(rows[4].a_n, 44u);
  EXPECT_EQ(rows[4].derangement_residual, 0);
  EXPECT_THROW(recurrence_check(2), DomainError);
}

TEST(CaseCounts, SumsAndCoverage) {
  EXPECT_EQ(case_counts(4).total, 9u);
  for (std::size_t n = 4; n <= 7; ++n) {
    const auto c = case_counts(n);
    std::uint64_t sum = 0;
    for (const auto& [tag, count] : c.histogram) sum += count;
    EXPECT_EQ(sum, oracle::derangement_count(static_cast<unsigned>(n)));
    EXPECT_EQ(c.total, sum);
    if (n >= 6) {
      for (CaseTag tag : {CaseTag::C1a, CaseTag::C1b, CaseTag::C1cI,
                          CaseTag::C1cII, CaseTag::C2a, CaseTag::C2b}) {
        EXPECT_GE(c.histogram.at(tag), 1u) << to_string(tag);
      }
    }
    // Brute force: marked trees whose mark is the parent of the max label.
    std::uint64_t direct = 0;
    MarkedTreeStream ms(n);
    while (auto mt = ms.next()) {
      if (mt->tree().parent(mt->tree().max_label()) == mt->mark()) ++direct;
    }
    EXPECT_EQ(c.mark_is_parent_of_max, direct) << "n=" << n;
  }
  EXPECT_THROW(case_counts(3), DomainError);
}

TEST(VerifyBijection, SmallSizes) {
  const auto two = verify_bijection(2);
  EXPECT_EQ(two.derangement_count, 1u);
  EXPECT_EQ(two.marked_tree_count, 1u);
  EXPECT_TRUE(two.verified());

  const auto five = verify_bijection(5);
  EXPECT_EQ(five.derangement_count, 44u);
  EXPECT_EQ(five.marked_tree_count, 44u);
  EXPECT_TRUE(five.verified());
  std::uint64_t hist = 0;
  for (const auto& [tag, count] : five.case_histogram) hist += count;
  EXPECT_EQ(hist, 44u);
}

TEST(VerifyBijection, IndependentOfThreadCount) {
  VerifyOptions one;
  one.threads = 1;
  VerifyOptions three;
  three.threads = 3;
  const auto a = verify_bijection(6, one);
  const auto b = verify_bijection(6, three);
  EXPECT_EQ(a.derangement_count, b.derangement_count);
  EXPECT_EQ(a.marked_tree_count, b.marked_tree_count);
  EXPECT_EQ(a.case_histogram, b.case_histogram);
  EXPECT_EQ(a.round_trip_failures, b.round_trip_failures);
}

TEST(VerifyBijection, RefusesBeyondLimit) {
  EXPECT_THROW(verify_bijection(9), ResourceLimitError);
  VerifyOptions huge;
  huge.size_limit = 10;
  EXPECT_THROW(verify_bijection(5, huge), ResourceLimitError);
  EXPECT_THROW(verify_bijection(1), DomainError);
}

TEST(Report, TextAndJson) {
  VerificationReport r;
  r.n = 4;
  r.derangement_count = 9;
  r.marked_tree_count = 9;
  r.case_histogram[CaseTag::C1a] = 2;
  r.round_trip_failures.push_back({"(0 1)(2 3)", "boom"});
  const std::string text = to_text(r);
  EXPECT_NE(text.find("n=4 derangements=9 marked_trees=9 failures=1 "
                      "cases=C1a:2 "),
            std::string::npos);
  EXPECT_NE(text.find("status=FAILED"), std::string::npos);
  EXPECT_NE(text.find("  failure subject=(0 1)(2 3) reason=boom"),
            std::string::npos);

  const auto j = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["derangement_count"], 9);
  EXPECT_EQ(j["marked_tree_count"], 9);
  EXPECT_EQ(j["case_histogram"]["C1a"], 2);
  EXPECT_EQ(j["round_trip_failures"][0]["subject"], "(0 1)(2 3)");
  EXPECT_EQ(j["round_trip_failures"][0]["reason"], "boom");
  EXPECT_FALSE(j["verified"]);
  EXPECT_TRUE(j.contains("elapsed_seconds"));
}

}  // namespace
}  // namespace rankone
