#include "rankone/enumeration.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <string>
#include <functional>
#include <thread>

#include "rankone/errors.hpp"
#include "rankone/rank.hpp"
#include "rankone/serialization.hpp"

namespace rankone {

IncreasingTreeStream::IncreasingTreeStream(std::size_t n) : n_(n) {
  if (n == 0) throw DomainError("tree size must be at least 1");
  reset();
}

void IncreasingTreeStream::reset() {
  parents_.assign(n_ - 1, 0);
  exhausted_ = false;
}

std::optional<IncreasingTree> IncreasingTreeStream::next() {
  if (exhausted_) return std::nullopt;
  IncreasingTree out = IncreasingTree::from_parents(parents_);
  // Odometer: position i (the parent of vertex i+1) ranges over 0..i.
  exhausted_ = true;
  for (std::size_t i = parents_.size(); i-- > 0;) {
    if (parents_[i] < static_cast<Label>(i)) {
      ++parents_[i];
      std::fill(parents_.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                parents_.end(), 0);
      exhausted_ = false;
      break;
    }
  }
  return out;
}

DerangementStream::DerangementStream(std::size_t n) : n_(n) {
  if (n == 0) throw DomainError("derangement size must be at least 1");
  reset();
}

void DerangementStream::reset() {
  images_.resize(n_);
  std::iota(images_.begin(), images_.end(), Label{0});
  exhausted_ = false;
}

std::optional<CycleDecomposition> DerangementStream::next() {
  while (!exhausted_) {
    bool fixed = false;
    for (std::size_t i = 0; i < n_ && !fixed; ++i) {
      fixed = images_[i] == static_cast<Label>(i);
    }
    std::optional<CycleDecomposition> out;
    if (!fixed) out = CycleDecomposition::from_images(images_);
    exhausted_ = !std::next_permutation(images_.begin(), images_.end());
    if (out) return out;
  }
  return std::nullopt;
}

MarkedTreeStream::MarkedTreeStream(std::size_t n) : trees_(n) {}

void MarkedTreeStream::reset() {
  trees_.reset();
  current_.reset();
  pending_marks_.clear();
}

std::optional<MarkedTree> MarkedTreeStream::next() {
  while (pending_marks_.empty()) {
    current_ = trees_.next();
    if (!current_) return std::nullopt;
    const RankTable ranks(*current_);
    const auto labels = current_->labels();
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
      if (ranks[*it] == Rank{1}) pending_marks_.push_back(*it);
    }
  }
  const Label mark = pending_marks_.back();
  pending_marks_.pop_back();
  return MarkedTree(*current_, mark);
}

std::uint64_t count_rank_k(std::size_t n, std::uint32_t k) {
  std::uint64_t total = 0;
  IncreasingTreeStream trees(n);
  while (auto t = trees.next()) {
    const RankTable ranks(*t);
    for (Label v : t->labels()) {
      if (ranks[v] == Rank{k}) ++total;
    }
  }
  return total;
}

std::vector<RankCountRow> rank_count_table(std::size_t max_n,
                                           std::uint32_t k) {
  std::vector<RankCountRow> rows;
  for (std::size_t n = 1; n <= max_n; ++n) {
    rows.push_back({n, k, count_rank_k(n, k)});
  }
  return rows;
}

std::vector<RecurrenceRow> recurrence_check(std::size_t max_n) {
  if (max_n < 3) throw DomainError("recurrence_check needs max_n >= 3");
  std::vector<RecurrenceRow> rows;
  for (std::size_t n = 1; n <= max_n; ++n) {
    RecurrenceRow row{n, count_rank_k(n, 1), std::nullopt, std::nullopt};
    if (n >= 3) {
      const auto a = static_cast<std::int64_t>(row.a_n);
      const auto a1 = static_cast<std::int64_t>(rows[n - 2].a_n);
      const auto a2 = static_cast<std::int64_t>(rows[n - 3].a_n);
      const auto sn = static_cast<std::int64_t>(n);
      row.derangement_residual = a - (sn - 1) * (a1 + a2);
      row.scaled_variant_residual = a - sn * a1 - sn * a2;
    }
    rows.push_back(row);
  }
  return rows;
}

CaseCounts case_counts(std::size_t n) {
  if (n < 4) throw DomainError("case_counts needs n >= 4");
  CaseCounts out;
  out.n = n;
  DerangementStream ds(n);
  while (auto p = ds.next()) {
    ++out.histogram[classify_derangement(*p)];
    ++out.total;
  }
  for (CaseTag tag :
       {CaseTag::C2a, CaseTag::C2b, CaseTag::C1a, CaseTag::C1cII}) {
    if (auto it = out.histogram.find(tag); it != out.histogram.end()) {
      out.mark_is_parent_of_max += it->second;
    }
  }
  return out;
}

namespace {

// Partial result of one worker; merged associatively.
struct Shard {
  std::uint64_t derangements = 0;
  std::uint64_t marked_trees = 0;
  std::vector<std::string> images;
  std::vector<std::string> marked;
  std::vector<RoundTripFailure> failures;
  std::map<CaseTag, std::uint64_t> cases;
};

void check_derangement(const CycleDecomposition& p, std::size_t n,
                       Shard& shard) {
  const std::string subject = p.to_string();
  try {
    ++shard.cases[classify_derangement(p)];
    const MarkedTree mt = forward(p);
    if (mt.size() != n || !mt.tree().has_prefix_labels()) {
      shard.failures.push_back({subject, "forward image has wrong labels"});
      return;
    }
    shard.images.push_back(to_string(mt));
    if (inverse(mt) != p) {
      shard.failures.push_back(
          {subject, "inverse(forward(p)) = " + inverse(mt).to_string()});
    }
  } catch (const std::exception& e) {
    shard.failures.push_back({subject, std::string("exception: ") + e.what()});
  }
}

void check_marked_tree(const MarkedTree& mt, std::size_t n, Shard& shard) {
  const std::string subject = to_string(mt);
  shard.marked.push_back(subject);
  try {
    const CycleDecomposition p = inverse(mt);
    if (p.size() != n || !p.has_prefix_ground_set() || !p.is_derangement()) {
      shard.failures.push_back(
          {subject, "inverse is not a derangement of size n: " +
                        p.to_string()});
      return;
    }
    if (forward(p) != mt) {
      shard.failures.push_back(
          {subject, "forward(inverse(t)) = " + to_string(forward(p))});
    }
  } catch (const std::exception& e) {
    shard.failures.push_back({subject, std::string("exception: ") + e.what()});
  }
}

void run_shard(std::size_t n, unsigned index, unsigned stride, Shard& shard) {
  std::uint64_t i = 0;
  DerangementStream ds(n);
  while (auto p = ds.next()) {
    if (i++ % stride != index) continue;
    ++shard.derangements;
    check_derangement(*p, n, shard);
  }
  i = 0;
  MarkedTreeStream ms(n);
  while (auto mt = ms.next()) {
    if (i++ % stride != index) continue;
    ++shard.marked_trees;
    check_marked_tree(*mt, n, shard);
  }
}

}  // namespace

VerificationReport verify_bijection(std::size_t n,
                                    const VerifyOptions& options) {
  if (options.size_limit > kMaxSizeLimit) {
    throw ResourceLimitError("size limit " +
                             std::to_string(options.size_limit) +
                             " exceeds the hard ceiling " +
                             std::to_string(kMaxSizeLimit));
  }
  if (n > options.size_limit) {
    throw ResourceLimitError("refusing to verify n=" + std::to_string(n) +
                             ": above the size limit " +
                             std::to_string(options.size_limit));
  }
  if (n < 2) throw DomainError("verify_bijection needs n >= 2");

  const auto start = std::chrono::steady_clock::now();
  unsigned workers = options.threads;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

  std::vector<Shard> shards(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(run_shard, n, w, workers, std::ref(shards[w]));
    }
  }

  VerificationReport report;
  report.n = n;
  std::vector<std::string> images;
  std::vector<std::string> marked;
  for (auto& s : shards) {
    report.derangement_count += s.derangements;
    report.marked_tree_count += s.marked_trees;
    for (const auto& [tag, count] : s.cases) report.case_histogram[tag] += count;
    std::move(s.failures.begin(), s.failures.end(),
              std::back_inserter(report.round_trip_failures));
    std::move(s.images.begin(), s.images.end(), std::back_inserter(images));
    std::move(s.marked.begin(), s.marked.end(), std::back_inserter(marked));
  }

  std::sort(images.begin(), images.end());
  for (auto it = std::adjacent_find(images.begin(), images.end());
       it != images.end();
       it = std::adjacent_find(std::next(it), images.end())) {
    report.round_trip_failures.push_back(
        {*it, "image of more than one derangement"});
  }
  images.erase(std::unique(images.begin(), images.end()), images.end());
  std::sort(marked.begin(), marked.end());

  std::vector<std::string> stray;
  std::set_difference(images.begin(), images.end(), marked.begin(),
                      marked.end(), std::back_inserter(stray));
  for (auto& s : stray) {
    report.round_trip_failures.push_back(
        {std::move(s), "image is not a marked tree of size n"});
  }
  std::vector<std::string> missed;
  std::set_difference(marked.begin(), marked.end(), images.begin(),
                      images.end(), std::back_inserter(missed));
  for (auto& s : missed) {
    report.round_trip_failures.push_back(
        {std::move(s), "marked tree missing from the image"});
  }

  std::sort(report.round_trip_failures.begin(),
            report.round_trip_failures.end());
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace rankone
