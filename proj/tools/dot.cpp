#include "dot.hpp"

#include <sstream>

namespace rankone::cli {

std::string to_dot(const IncreasingTree& tree, std::optional<Label> mark) {
  std::ostringstream out;
  out << "digraph tree {\n";
  out << "  node [shape=circle];\n";
  for (Label v : tree.labels()) {
    out << "  " << v << " [label=\"" << v << '"';
    if (mark == v) out << ", shape=box, style=filled, color=red, fillcolor=red";
    out << "];\n";
  }
  for (Label v : tree.labels()) {
    for (Label c : tree.children(v)) out << "  " << v << " -> " << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rankone::cli
