#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rankone/bijection.hpp"

namespace rankone {

struct RoundTripFailure {
  std::string subject;  // serialized derangement or marked tree
  std::string reason;

  friend auto operator<=>(const RoundTripFailure&,
                          const RoundTripFailure&) = default;
};

struct VerificationReport {
  std::size_t n = 0;
  std::uint64_t derangement_count = 0;
  std::uint64_t marked_tree_count = 0;
  std::vector<RoundTripFailure> round_trip_failures;
  std::map<CaseTag, std::uint64_t> case_histogram;
  std::chrono::duration<double> elapsed{0};

  bool verified() const noexcept { return round_trip_failures.empty(); }
};

/// One summary line, then one indented line per failure:
///
///   n=5 derangements=44 marked_trees=44 failures=0 cases=C1a:4,... elapsed_s=0.001 status=verified
///     failure subject=<text> reason=<text>
std::string to_text(const VerificationReport& report);

/// JSON object with the fields n, derangement_count, marked_tree_count,
/// round_trip_failures (array of {subject, reason}), case_histogram (object
/// keyed by case tag), elapsed_seconds and verified.
std::string to_json(const VerificationReport& report);

/// JSON array of reports.
std::string to_json(const std::vector<VerificationReport>& reports);

}  // namespace rankone
