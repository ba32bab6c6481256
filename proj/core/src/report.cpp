#include "rankone/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace rankone {

namespace {

nlohmann::ordered_json as_json(const VerificationReport& report) {
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : report.round_trip_failures) {
    failures.push_back({{"subject", f.subject}, {"reason", f.reason}});
  }
  nlohmann::ordered_json cases = nlohmann::ordered_json::object();
  for (const auto& [tag, count] : report.case_histogram) {
    cases[std::string(to_string(tag))] = count;
  }
  return {
      {"n", report.n},
      {"derangement_count", report.derangement_count},
      {"marked_tree_count", report.marked_tree_count},
      {"round_trip_failures", std::move(failures)},
      {"case_histogram", std::move(cases)},
      {"elapsed_seconds", report.elapsed.count()},
      {"verified", report.verified()},
  };
}

}  // namespace

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "n=" << report.n << " derangements=" << report.derangement_count
      << " marked_trees=" << report.marked_tree_count
      << " failures=" << report.round_trip_failures.size() << " cases=";
  bool first = true;
  for (const auto& [tag, count] : report.case_histogram) {
    if (!first) out << ',';
    out << to_string(tag) << ':' << count;
    first = false;
  }
  out << " elapsed_s=" << std::fixed << std::setprecision(3)
      << report.elapsed.count()
      << " status=" << (report.verified() ? "verified" : "FAILED") << '\n';
  for (const auto& f : report.round_trip_failures) {
    out << "  failure subject=" << f.subject << " reason=" << f.reason << '\n';
  }
  return out.str();
}

std::string to_json(const VerificationReport& report) {
  return as_json(report).dump();
}

std::string to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (const auto& r : reports) all.push_back(as_json(r));
  return all.dump();
}

}  // namespace rankone
