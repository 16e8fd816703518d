#include "latticefiber/merge_tree.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "latticefiber/errors.hpp"
#include "latticefiber/union_find.hpp"

namespace latticefiber {

namespace {

// Replays the events against a union-find, rewriting each to the canonical
// (min, min) form and rejecting invalid merges.
std::vector<MergeEvent> canonicalize_events(int n, const std::vector<MergeEvent>& raw) {
  UnionFind uf(n + 1);
  std::vector<MergeEvent> canon;
  canon.reserve(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const int step = static_cast<int>(k) + 1;
    const auto [x, y] = raw[k];
    if (x < 0 || x > n || y < 0 || y > n)
      throw ValidationError("label out of range at step " + std::to_string(step) +
                            ": leaves must lie in {0,...," + std::to_string(n) + "}");
    const int ma = uf.min_of(x);
    const int mb = uf.min_of(y);
    if (ma == mb)
      throw ValidationError("self-merge at step " + std::to_string(step) + ": leaves " +
                            std::to_string(x) + " and " + std::to_string(y) +
                            " are already in the same block");
    canon.push_back({std::min(ma, mb), std::max(ma, mb)});
    uf.unite(x, y);
  }
  return canon;
}

void require_positive_leaf_count(int n) {
  if (n < 1) throw ValidationError("merge tree needs n >= 1 (leaves 0,...,n)");
}

}  // namespace

MergeTree::MergeTree(int n, std::vector<MergeEvent> events) : n_(n) {
  require_positive_leaf_count(n_);
  if (static_cast<int>(events.size()) != n_)
    throw ValidationError("merge tree on leaves {0,...," + std::to_string(n_) + "} needs exactly " +
                          std::to_string(n_) + " events, got " + std::to_string(events.size()));
  events_ = canonicalize_events(n_, events);
}

PartialMergeTree::PartialMergeTree(int n, std::vector<MergeEvent> events) : n_(n) {
  require_positive_leaf_count(n_);
  if (static_cast<int>(events.size()) > n_)
    throw ValidationError("partial merge tree stage " + std::to_string(events.size()) +
                          " exceeds n=" + std::to_string(n_));
  events_ = canonicalize_events(n_, events);
}

MergeTree to_full(const PartialMergeTree& t) {
  if (!t.is_full())
    throw ValidationError("partial merge tree at stage " + std::to_string(t.stage()) +
                          " of n=" + std::to_string(t.n()) + " is not full");
  return MergeTree(t.n(), t.events());
}

PartialMergeTree partial_tree(const MergeTree& t, int k) {
  if (k < 0 || k > t.n())
    throw ValidationError("stage " + std::to_string(k) + " outside [0," + std::to_string(t.n()) +
                          "]");
  return PartialMergeTree(
      t.n(), std::vector<MergeEvent>(t.events().begin(), t.events().begin() + k));
}

bool poset_leq_partial(const PartialMergeTree& a, const PartialMergeTree& b) {
  if (a.n() != b.n())
    throw ValidationError("cannot compare partial merge trees with n=" + std::to_string(a.n()) +
                          " and n=" + std::to_string(b.n()));
  if (a.stage() > b.stage()) return false;
  return std::equal(a.events().begin(), a.events().end(), b.events().begin());
}

TreeGraph tree_graph(const MergeTree& t) {
  const int n = t.n();
  TreeGraph g;
  g.n = n;
  g.parent.assign(2 * static_cast<std::size_t>(n) + 1, -1);
  g.children.reserve(static_cast<std::size_t>(n));
  // root_of[m] = current subtree root of the block whose minimum is m
  std::vector<int> root_of(static_cast<std::size_t>(n) + 1);
  std::iota(root_of.begin(), root_of.end(), 0);
  for (int k = 1; k <= n; ++k) {
    const auto [a, b] = t.events()[k - 1];
    const int node = n + k;
    const int left = root_of[a];
    const int right = root_of[b];
    g.children.push_back({left, right});
    g.parent[left] = node;
    g.parent[right] = node;
    root_of[a] = node;  // merged block keeps the smaller minimum a
  }
  return g;
}

namespace {

std::string events_to_string(const std::vector<MergeEvent>& events) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (i > 0) os << ',';
    os << '(' << events[i].a << ',' << events[i].b << ')';
  }
  os << ']';
  return os.str();
}

}  // namespace

std::string to_string(const MergeTree& t) { return events_to_string(t.events()); }

std::string to_string(const PartialMergeTree& t) {
  return events_to_string(t.events()) + "@" + std::to_string(t.stage()) + "/" +
         std::to_string(t.n());
}

std::ostream& operator<<(std::ostream& os, const MergeTree& t) { return os << to_string(t); }

std::ostream& operator<<(std::ostream& os, const PartialMergeTree& t) {
  return os << to_string(t);
}

}  // namespace latticefiber
