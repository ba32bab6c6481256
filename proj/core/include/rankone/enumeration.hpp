#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rankone/bijection.hpp"
#include "rankone/marked_tree.hpp"
#include "rankone/permutation.hpp"
#include "rankone/report.hpp"

namespace rankone {

// Exhaustive generators. Each is a restartable single-consumer stream with a
// fixed order, so two runs produce identical sequences.

/// All (n-1)! increasing trees on {0, ..., n-1}: vertex m is hung below each
/// of 0, ..., m-1 in turn, the largest vertex varying fastest.
class IncreasingTreeStream {
 public:
  explicit IncreasingTreeStream(std::size_t n);

  std::optional<IncreasingTree> next();
  void reset();

 private:
  std::size_t n_;
  std::vector<Label> parents_;
  bool exhausted_ = false;
};

/// Derangements of {0, ..., n-1} in canonical cycle form, ordered by their
/// one-line words lexicographically.
class DerangementStream {
 public:
  explicit DerangementStream(std::size_t n);

  std::optional<CycleDecomposition> next();
  void reset();

 private:
  std::size_t n_;
  std::vector<Label> images_;
  bool exhausted_ = false;
};

/// Every (tree, rank-1 vertex) pair of size n: trees in IncreasingTreeStream
/// order, marks ascending within a tree.
class MarkedTreeStream {
 public:
  explicit MarkedTreeStream(std::size_t n);

  std::optional<MarkedTree> next();
  void reset();

 private:
  IncreasingTreeStream trees_;
  std::optional<IncreasingTree> current_;
  std::vector<Label> pending_marks_;  // descending, consumed from the back
};

/// Total number of rank-k vertices over all increasing trees of size n.
std::uint64_t count_rank_k(std::size_t n, std::uint32_t k);

struct RankCountRow {
  std::size_t n;
  std::uint32_t k;
  std::uint64_t count;
};

/// count_rank_k(n, k) for n = 1, ..., max_n.
std::vector<RankCountRow> rank_count_table(std::size_t max_n, std::uint32_t k);

/// One row of the rank-1 recurrence check. Residuals need A_{n-1} and
/// A_{n-2}, so they are empty for n < 3.
struct RecurrenceRow {
  std::size_t n;
  std::uint64_t a_n;
  /// A_n - (n-1)(A_{n-1} + A_{n-2}), the derangement recurrence.
  std::optional<std::int64_t> derangement_residual;
  /// A_n - n*A_{n-1} - n*A_{n-2}, residual against the n-scaled variant.
  std::optional<std::int64_t> scaled_variant_residual;
};

/// A_n = count_rank_k(n, 1) for n = 1, ..., max_n with both residuals.
std::vector<RecurrenceRow> recurrence_check(std::size_t max_n);

struct CaseCounts {
  std::size_t n = 0;
  std::map<CaseTag, std::uint64_t> histogram;
  std::uint64_t total = 0;
  /// C2a + C2b + C1a + C1cII: marked trees whose mark is the parent of n-1.
  std::uint64_t mark_is_parent_of_max = 0;
};

/// Histogram of classify_derangement over all derangements of size n >= 4.
CaseCounts case_counts(std::size_t n);

inline constexpr std::size_t kDefaultSizeLimit = 8;
inline constexpr std::size_t kMaxSizeLimit = 9;

struct VerifyOptions {
  /// Largest n verify_bijection accepts; at most kMaxSizeLimit.
  std::size_t size_limit = kDefaultSizeLimit;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Runs the bijection over every derangement and every marked tree of size n
/// and records each mismatch. Throws ResourceLimitError when n exceeds the
/// configured limit and DomainError when n < 2. The report does not depend
/// on the thread count.
VerificationReport verify_bijection(std::size_t n,
                                    const VerifyOptions& options = {});

}  // namespace rankone
