#include "rankone/serialization.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "rankone/errors.hpp"

namespace rankone {

namespace {

void append_list(std::string& out, std::span<const Label> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
}

// Left-to-right reader over one serialized tree; columns are 1-based.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  std::size_t column() const { return pos_ + 1; }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) {
      fail("expected '" + std::string(token) + "'");
    }
    pos_ += token.size();
  }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  Label number() {
    Label value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first || value < 0) {
      fail("expected a nonnegative integer");
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  // Comma-separated numbers up to ';' or end of input; may be empty.
  std::vector<Label> number_list() {
    std::vector<Label> out;
    if (done() || peek() == ';') return out;
    out.push_back(number());
    while (accept(",")) out.push_back(number());
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError(
        "syntax error at column " + std::to_string(column()) + ": " + what,
        column());
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

IncreasingTree read_tree(Cursor& in) {
  if (in.accept("size=")) {
    const std::size_t col = in.column();
    const Label n = in.number();
    in.expect(";parents=");
    const auto parents = in.number_list();
    if (n < 1 || parents.size() != static_cast<std::size_t>(n) - 1) {
      throw FormatError("size mismatch: size=" + std::to_string(n) +
                            " needs " + std::to_string(n < 1 ? 0 : n - 1) +
                            " parents, found " +
                            std::to_string(parents.size()),
                        col);
    }
    return IncreasingTree::from_parents(parents);
  }
  if (in.accept("labels=")) {
    auto labels = in.number_list();
    in.expect(";edges=");
    std::vector<Edge> edges;
    if (!in.done() && in.peek() != ';') {
      do {
        const Label child = in.number();
        in.expect(":");
        edges.push_back({child, in.number()});
      } while (in.accept(","));
    }
    return IncreasingTree::from_edges(std::move(labels), edges);
  }
  in.fail("expected 'size=' or 'labels='");
}

}  // namespace

std::string to_string(const IncreasingTree& tree) {
  std::string out;
  const auto edges = tree.edges();
  if (tree.has_prefix_labels()) {
    out = "size=" + std::to_string(tree.size()) + ";parents=";
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(edges[i].parent);
    }
    return out;
  }
  out = "labels=";
  append_list(out, tree.labels());
  out += ";edges=";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(edges[i].child) + ':' +
           std::to_string(edges[i].parent);
  }
  return out;
}

std::string to_string(const MarkedTree& tree) {
  return to_string(tree.tree()) + ";mark=" + std::to_string(tree.mark());
}

ParsedTree parse_tree_or_marked(std::string_view text) {
  Cursor in(trim(text));
  IncreasingTree tree = read_tree(in);
  std::optional<Label> mark;
  if (in.accept(";mark=")) mark = in.number();
  if (!in.done()) in.fail("unexpected trailing input");
  return {std::move(tree), mark};
}

IncreasingTree parse_tree(std::string_view text) {
  auto parsed = parse_tree_or_marked(text);
  if (parsed.mark) {
    throw FormatError("unexpected mark field in unmarked tree");
  }
  return std::move(parsed.tree);
}

MarkedTree parse_marked_tree(std::string_view text) {
  auto parsed = parse_tree_or_marked(text);
  if (!parsed.mark) throw FormatError("missing ';mark=' field");
  return MarkedTree(std::move(parsed.tree), *parsed.mark);
}

PermWord parse_perm_word(std::string_view text) {
  text = trim(text);
  std::vector<Label> letters;
  const bool spaced =
      text.find_first_of(" \t") != std::string_view::npos || text.size() == 1;
  if (!spaced) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw FormatError("syntax error at column " + std::to_string(i + 1) +
                              ": expected a digit",
                          i + 1);
      }
      letters.push_back(text[i] - '0');
    }
    return PermWord(std::move(letters));
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    Label value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + pos ||
        (ptr != text.data() + text.size() &&
         !std::isspace(static_cast<unsigned char>(*ptr)))) {
      throw FormatError("syntax error at column " + std::to_string(pos + 1) +
                            ": expected an integer",
                        pos + 1);
    }
    letters.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  return PermWord(std::move(letters));
}

}  // namespace rankone
