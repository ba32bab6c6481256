#include "cycle_notation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "rankone/errors.hpp"

namespace rankone::cli {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

[[noreturn]] void syntax_error(std::size_t index, const std::string& what) {
  throw FormatError("syntax error at column " + std::to_string(index + 1) +
                        ": " + what,
                    index + 1);
}

// Labels of one cycle body text[begin, end).
std::vector<Label> read_body(std::string_view text, std::size_t begin,
                             std::size_t end) {
  std::vector<Label> labels;
  const bool spaced =
      std::any_of(text.begin() + static_cast<std::ptrdiff_t>(begin),
                  text.begin() + static_cast<std::ptrdiff_t>(end), is_space);
  if (!spaced) {
    for (std::size_t i = begin; i < end; ++i) {
      if (!is_digit(text[i])) syntax_error(i, "expected a digit");
      labels.push_back(text[i] - '0');
    }
    return labels;
  }
  std::size_t i = begin;
  while (i < end) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    Label value = 0;
    const char* first = text.data() + i;
    auto [ptr, ec] = std::from_chars(first, text.data() + end, value);
    if (ptr == first || !is_digit(*first)) syntax_error(i, "expected a label");
    if (ec != std::errc{}) syntax_error(i, "label too large");
    i += static_cast<std::size_t>(ptr - first);
    if (i < end && !is_space(text[i])) {
      syntax_error(i, "expected whitespace or ')'");
    }
    labels.push_back(value);
  }
  return labels;
}

}  // namespace

CycleDecomposition parse_cycles(std::string_view text,
                                const CycleParseOptions& options) {
  std::vector<std::vector<Label>> cycles;
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i == text.size()) break;
    if (text[i] != '(') syntax_error(i, "expected '('");
    const std::size_t close = text.find_first_of("()", i + 1);
    if (close == std::string_view::npos) {
      syntax_error(text.size(), "expected ')'");
    }
    if (text[close] == '(') syntax_error(close, "expected ')'");
    auto labels = read_body(text, i + 1, close);
    if (labels.empty()) syntax_error(close, "empty cycle");
    cycles.push_back(std::move(labels));
    i = close + 1;
  }
  if (cycles.empty()) syntax_error(i, "expected '('");

  std::vector<Label> all;
  for (const auto& c : cycles) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  if (auto dup = std::adjacent_find(all.begin(), all.end()); dup != all.end()) {
    throw DomainError("repeated label: " + std::to_string(*dup));
  }
  if (options.size) {
    const auto n = static_cast<Label>(*options.size);
    if (all.back() >= n) {
      throw DomainError("label out of range: " + std::to_string(all.back()) +
                        " (size " + std::to_string(n) + ")");
    }
    for (Label expect = 0; expect < n; ++expect) {
      if (static_cast<std::size_t>(expect) >= all.size() ||
          all[expect] != expect) {
        throw DomainError("missing label: " + std::to_string(expect) +
                          " (size " + std::to_string(n) + ")");
      }
    }
  }
  auto p = CycleDecomposition::from_cycles(std::move(cycles));
  if (options.require_derangement) {
    if (auto fixed = p.first_fixed_point()) {
      throw DomainError("fixed point: " + std::to_string(*fixed));
    }
  }
  return p;
}

}  // namespace rankone::cli
