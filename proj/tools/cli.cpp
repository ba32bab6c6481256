#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "cycle_notation.hpp"
#include "dot.hpp"
#include "rankone/bijection.hpp"
#include "rankone/enumeration.hpp"
#include "rankone/errors.hpp"
#include "rankone/report.hpp"
#include "rankone/serialization.hpp"

namespace rankone::cli {

namespace {

struct Flags {
  std::string payload;
  std::optional<std::size_t> size;
  std::string kind;
  std::size_t min_size = 2;
  std::size_t max_size = kDefaultSizeLimit;
  std::uint32_t k = 1;
  bool allow_large = false;
  bool json = false;
  unsigned threads = 0;
  std::string format = "dot";
};

int do_map(const Flags& f, std::ostream& out) {
  CycleParseOptions opts;
  opts.require_derangement = true;
  opts.size = f.size;
  if (!opts.size) {
    const auto p = parse_cycles(f.payload);
    opts.size = static_cast<std::size_t>(p.ground_set().back()) + 1;
  }
  out << to_string(forward(parse_cycles(f.payload, opts))) << '\n';
  return kSuccess;
}

int do_unmap(const Flags& f, std::ostream& out) {
  out << inverse(parse_marked_tree(f.payload)).to_string() << '\n';
  return kSuccess;
}

int do_tree2perm(const Flags& f, std::ostream& out) {
  out << tree_to_perm(parse_tree_or_marked(f.payload).tree).to_string()
      << '\n';
  return kSuccess;
}

int do_perm2tree(const Flags& f, std::ostream& out) {
  out << to_string(perm_to_tree(parse_perm_word(f.payload))) << '\n';
  return kSuccess;
}

int do_enumerate(const Flags& f, std::ostream& out) {
  const std::size_t n = f.size.value();
  if (f.kind == "trees") {
    IncreasingTreeStream s(n);
    while (auto t = s.next()) out << to_string(*t) << '\n';
  } else if (f.kind == "derangements") {
    DerangementStream s(n);
    while (auto p = s.next()) out << p->to_string() << '\n';
  } else {
    MarkedTreeStream s(n);
    while (auto mt = s.next()) out << to_string(*mt) << '\n';
  }
  return kSuccess;
}

int do_verify(const Flags& f, std::ostream& out) {
  VerifyOptions opts;
  opts.size_limit = f.allow_large ? kMaxSizeLimit : kDefaultSizeLimit;
  opts.threads = f.threads;
  if (f.max_size > opts.size_limit) {
    throw ResourceLimitError(
        "refusing --max-size " + std::to_string(f.max_size) +
        ": limit is " + std::to_string(opts.size_limit) +
        (f.allow_large ? "" : " (use --allow-large for up to 9)"));
  }
  std::vector<VerificationReport> reports;
  for (std::size_t n = std::max<std::size_t>(2, f.min_size); n <= f.max_size;
       ++n) {
    reports.push_back(verify_bijection(n, opts));
    if (!f.json) out << to_text(reports.back()) << std::flush;
  }
  if (f.json) out << to_json(reports) << '\n';
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const auto& r) { return r.verified(); });
  return ok ? kSuccess : kVerificationFailure;
}

int do_rank_counts(const Flags& f, std::ostream& out) {
  out << "n\tk\tcount\n";
  for (const auto& row : rank_count_table(f.max_size, f.k)) {
    out << row.n << '\t' << row.k << '\t' << row.count << '\n';
  }
  return kSuccess;
}

int do_cases(const Flags& f, std::ostream& out) {
  const CaseCounts counts = case_counts(f.size.value());
  out << "case\tcount\n";
  for (CaseTag tag : kAllCaseTags) {
    auto it = counts.histogram.find(tag);
    if (tag == CaseTag::Base2 || tag == CaseTag::Base3) continue;
    out << to_string(tag) << '\t'
        << (it == counts.histogram.end() ? 0 : it->second) << '\n';
  }
  out << "total\t" << counts.total << '\n';
  out << "mark_is_parent_of_max\t" << counts.mark_is_parent_of_max << '\n';
  return kSuccess;
}

int do_recurrence(const Flags& f, std::ostream& out) {
  out << "n\tA_n\tA_n-(n-1)(A_n-1+A_n-2)\tA_n-nA_n-1-nA_n-2\n";
  for (const auto& row : recurrence_check(f.max_size)) {
    out << row.n << '\t' << row.a_n << '\t';
    if (row.derangement_residual) {
      out << *row.derangement_residual << '\t'
          << *row.scaled_variant_residual;
    } else {
      out << "-\t-";
    }
    out << '\n';
  }
  return kSuccess;
}

int do_render(const Flags& f, std::ostream& out) {
  auto parsed = parse_tree_or_marked(f.payload);
  if (parsed.mark) {
    // Validates the mark before drawing it.
    MarkedTree checked(parsed.tree, *parsed.mark);
    out << to_dot(checked.tree(), checked.mark());
  } else {
    out << to_dot(parsed.tree);
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Derangements and increasing trees with a marked rank-1 vertex",
               "rankone"};
  app.require_subcommand(1, 1);
  Flags f;
  int (*action)(const Flags&, std::ostream&) = nullptr;

  auto* map = app.add_subcommand("map", "Map a derangement to a marked tree");
  map->add_option("cycles", f.payload, "Derangement in cycle notation")
      ->required();
  map->add_option("--size", f.size, "Expected size n");
  map->callback([&] { action = do_map; });

  auto* unmap = app.add_subcommand("unmap", "Map a marked tree back");
  unmap->add_option("tree", f.payload, "size=..;parents=..;mark=..")
      ->required();
  unmap->callback([&] { action = do_unmap; });

  auto* t2p = app.add_subcommand("tree2perm", "Increasing tree to word");
  t2p->add_option("tree", f.payload, "size=..;parents=..")->required();
  t2p->callback([&] { action = do_tree2perm; });

  auto* p2t = app.add_subcommand("perm2tree", "Word to increasing tree");
  p2t->add_option("word", f.payload, "Permutation of 1..n-1")->required();
  p2t->callback([&] { action = do_perm2tree; });

  auto* enumerate = app.add_subcommand("enumerate", "List all objects");
  enumerate->add_option("kind", f.kind, "trees | derangements | marked")
      ->required()
      ->check(CLI::IsMember({"trees", "derangements", "marked"}));
  enumerate->add_option("--size", f.size, "Size n")
      ->required()
      ->check(CLI::Range(1, 10));
  enumerate->callback([&] { action = do_enumerate; });

  auto* verify = app.add_subcommand("verify", "Exhaustively verify the map");
  verify->add_option("--max-size", f.max_size, "Largest n (default 8)");
  verify->add_option("--min-size", f.min_size, "Smallest n (default 2)");
  verify->add_flag("--allow-large", f.allow_large, "Permit n = 9");
  verify->add_option("--threads", f.threads, "Worker threads, 0 = auto");
  verify->add_flag("--json", f.json, "Emit a JSON array of reports");
  verify->callback([&] { action = do_verify; });

  auto* stats = app.add_subcommand("stats", "Counting tables");
  stats->require_subcommand(1, 1);
  auto* ranks = stats->add_subcommand("rank-counts", "Rank-k vertex totals");
  ranks->add_option("--max-size", f.max_size)->required()->check(
      CLI::Range(1, 10));
  ranks->add_option("--k", f.k, "Rank (default 1)");
  ranks->callback([&] { action = do_rank_counts; });
  auto* cases = stats->add_subcommand("cases", "Case histogram");
  cases->add_option("--size", f.size)->required()->check(CLI::Range(4, 10));
  cases->callback([&] { action = do_cases; });
  auto* rec = stats->add_subcommand("recurrence", "Rank-1 recurrence data");
  rec->add_option("--max-size", f.max_size)->required()->check(
      CLI::Range(3, 10));
  rec->callback([&] { action = do_recurrence; });

  auto* render = app.add_subcommand("render", "Draw a tree");
  render->add_option("tree", f.payload, "Tree or marked tree")->required();
  render->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"dot"}));
  render->callback([&] { action = do_render; });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    return action(f, out);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InvariantFailure& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kInvalidInput;
}

}  // namespace rankone::cli
