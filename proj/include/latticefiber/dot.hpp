#pragma once

#include <string>

#include "latticefiber/barcode.hpp"
#include "latticefiber/merge_tree.hpp"

namespace latticefiber {

// Graphviz renderings; output is byte-deterministic.

// Rooted binary tree drawn bottom-up: leaf m is node "lm", internal node k is
// "ik", edges point child -> parent.
std::string tree_to_dot(const MergeTree& t);

// Two-column bipartite birth -> death graph; birth i is node "bi", death j is
// node "dj".
std::string barcode_to_dot(const Barcode& b);
std::string barcode_to_dot(const PartialBarcode& b);

}  // namespace latticefiber
