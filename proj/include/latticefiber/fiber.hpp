#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latticefiber/barcode.hpp"
#include "latticefiber/enumerate.hpp"
#include "latticefiber/errors.hpp"
#include "latticefiber/merge_tree.hpp"

namespace latticefiber {

using BigCount = boost::multiprecision::cpp_int;

// Search state for incremental fiber construction: a stage-k event prefix
// together with the minima of its current blocks. For a node consistent with
// a target barcode, the alive minima are {0} plus the births whose death
// exceeds k.
struct FiberNode {
  PartialMergeTree prefix;
  std::vector<int> alive_minima;  // sorted ascending
};

FiberNode fiber_root(int n);

// One incremental step: if bar (i, k+1) is next in the target, i must head
// its own block, and the children merge it with each alive minimum m < i.
// The choice is purely local; nothing outside alive_minima is consulted.
// Throws if i is not an alive minimum (an inconsistent hand-built node;
// unreachable when expanding from fiber_root).
std::vector<FiberNode> extend_step(const FiberNode& node, const Barcode& target);

namespace detail {

template <class Emit>
bool fiber_dfs(const std::vector<int>& births_by_death, int stage_limit,
               std::vector<MergeEvent>& events, std::vector<int>& alive, Emit& emit) {
  if (static_cast<int>(events.size()) == stage_limit) return emit();
  const int i = births_by_death[events.size()];
  const auto it = std::lower_bound(alive.begin(), alive.end(), i);
  if (it == alive.end() || *it != i)
    throw std::logic_error("birth " + std::to_string(i) + " is not an alive block minimum");
  const std::size_t pos = static_cast<std::size_t>(it - alive.begin());
  alive.erase(it);  // i dies at this step whatever partner is chosen
  bool keep = true;
  for (std::size_t idx = 0; keep && idx < pos; ++idx) {
    events.push_back({alive[idx], i});
    keep = fiber_dfs(births_by_death, stage_limit, events, alive, emit);
    events.pop_back();
  }
  alive.insert(alive.begin() + static_cast<std::ptrdiff_t>(pos), i);
  return keep;
}

}  // namespace detail

// Depth-first enumeration of every merge tree whose barcode is the target,
// each exactly once, children ordered by ascending merge partner. The visitor
// may return bool to stop early.
template <class F>
void fiber_enumerate(const Barcode& target, F&& visit) {
  const int n = target.n();
  std::vector<MergeEvent> events;
  events.reserve(static_cast<std::size_t>(n));
  std::vector<int> alive(static_cast<std::size_t>(n) + 1);
  std::iota(alive.begin(), alive.end(), 0);
  auto emit = [&]() { return detail::visit_keep_going(visit, MergeTree(n, events)); };
  detail::fiber_dfs(target.births_by_death(), n, events, alive, emit);
}

// Stage-k partial trees whose partial barcode is the target.
template <class F>
void partial_fiber(const PartialBarcode& target, F&& visit) {
  const int n = target.n();
  std::vector<MergeEvent> events;
  events.reserve(static_cast<std::size_t>(target.stage()));
  std::vector<int> alive(static_cast<std::size_t>(n) + 1);
  std::iota(alive.begin(), alive.end(), 0);
  auto emit = [&]() { return detail::visit_keep_going(visit, PartialMergeTree(n, events)); };
  detail::fiber_dfs(target.births_by_death(), target.stage(), events, alive, emit);
}

// Fiber cardinality by the product of per-step choice counts, without any
// enumeration: at step k the birth i_k may merge with any alive minimum
// below it. O(n log n).
BigCount fiber_count(const Barcode& target);

// Oracle route: filter the full partition-chain enumeration by barcode.
std::vector<MergeTree> fiber_brute_force(const Barcode& target,
                                         int max_n = kMaxPartitionChainN);

// Collects fiber_enumerate into a vector.
std::vector<MergeTree> fiber_list(const Barcode& target);

}  // namespace latticefiber
