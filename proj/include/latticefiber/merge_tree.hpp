#pragma once

#include <array>
#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace latticefiber {

// One merge step: the block containing a fuses with the block containing b.
// Canonical form stores the two block minima with a < b.
struct MergeEvent {
  int a = 0;
  int b = 0;
  auto operator<=>(const MergeEvent&) const = default;
};

// Combinatorial merge tree on leaves {0,...,n}, encoded as its n merge events
// in death order. Internal node k is the merge performed at step k, so
// internal labels strictly increase toward the root. The constructor accepts
// arbitrary block representatives and canonicalizes them to block minima;
// it rejects self-merges, out-of-range labels, and wrong event counts.
class MergeTree {
 public:
  MergeTree(int n, std::vector<MergeEvent> events);

  int n() const { return n_; }
  const std::vector<MergeEvent>& events() const { return events_; }

  auto operator<=>(const MergeTree&) const = default;

 private:
  int n_;
  std::vector<MergeEvent> events_;
};

// Stage-k prefix of a merge tree: only the internal nodes labelled 1..k
// exist yet. k may be anywhere in [0, n].
class PartialMergeTree {
 public:
  PartialMergeTree(int n, std::vector<MergeEvent> events);

  int n() const { return n_; }
  int stage() const { return static_cast<int>(events_.size()); }
  const std::vector<MergeEvent>& events() const { return events_; }
  bool is_full() const { return stage() == n_; }

  auto operator<=>(const PartialMergeTree&) const = default;

 private:
  int n_;
  std::vector<MergeEvent> events_;
};

MergeTree to_full(const PartialMergeTree& t);

// The stage-k filtration step of t (its first k events).
PartialMergeTree partial_tree(const MergeTree& t, int k);

// Containment order on partial merge trees: a is a filtration stage of b.
bool poset_leq_partial(const PartialMergeTree& a, const PartialMergeTree& b);

// Explicit rooted-binary-tree view, for export and inspection.
// Node ids: 0..n are the leaves; n+k is internal node k, for k = 1..n.
struct TreeGraph {
  int n = 0;
  std::vector<int> parent;                   // size 2n+1; -1 at the root
  std::vector<std::array<int, 2>> children;  // children[k-1] of internal node k
};

TreeGraph tree_graph(const MergeTree& t);

std::string to_string(const MergeTree& t);
std::string to_string(const PartialMergeTree& t);
std::ostream& operator<<(std::ostream& os, const MergeTree& t);
std::ostream& operator<<(std::ostream& os, const PartialMergeTree& t);

}  // namespace latticefiber
