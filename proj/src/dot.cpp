#include "latticefiber/dot.hpp"

#include <algorithm>
#include <sstream>

namespace latticefiber {

namespace {

std::string node_name(int node, int n) {
  return node <= n ? "l" + std::to_string(node) : "i" + std::to_string(node - n);
}

std::string barcode_dot(const std::vector<int>& births_by_death) {
  std::vector<int> births = births_by_death;
  std::sort(births.begin(), births.end());
  std::ostringstream os;
  os << "digraph barcode {\n";
  os << "  rankdir=LR;\n";
  os << "  subgraph births {\n    rank=same;\n";
  for (int i : births) os << "    b" << i << " [label=\"" << i << "\"];\n";
  os << "  }\n";
  os << "  subgraph deaths {\n    rank=same;\n";
  for (std::size_t j = 1; j <= births_by_death.size(); ++j)
    os << "    d" << j << " [label=\"" << j << "\"];\n";
  os << "  }\n";
  for (std::size_t j = 1; j <= births_by_death.size(); ++j)
    os << "  b" << births_by_death[j - 1] << " -> d" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string tree_to_dot(const MergeTree& t) {
  const TreeGraph g = tree_graph(t);
  std::ostringstream os;
  os << "digraph merge_tree {\n";
  os << "  rankdir=BT;\n";
  for (int m = 0; m <= g.n; ++m)
    os << "  l" << m << " [label=\"" << m << "\" shape=circle];\n";
  for (int k = 1; k <= g.n; ++k)
    os << "  i" << k << " [label=\"" << k << "\" shape=square];\n";
  for (int k = 1; k <= g.n; ++k)
    for (int child : g.children[static_cast<std::size_t>(k) - 1])
      os << "  " << node_name(child, g.n) << " -> i" << k << ";\n";
  os << "}\n";
  return os.str();
}

std::string barcode_to_dot(const Barcode& b) { return barcode_dot(b.births_by_death()); }

std::string barcode_to_dot(const PartialBarcode& b) { return barcode_dot(b.births_by_death()); }

}  // namespace latticefiber
