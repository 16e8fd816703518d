#pragma once

#include <numeric>
#include <string>
#include <type_traits>
#include <vector>

#include "latticefiber/barcode.hpp"
#include "latticefiber/based_path.hpp"
#include "latticefiber/errors.hpp"
#include "latticefiber/merge_tree.hpp"
#include "latticefiber/partition.hpp"
#include "latticefiber/subset.hpp"

namespace latticefiber {

// Exhaustive enumeration is intended for desk-scale n; the subset lattice has
// n! maximal chains and the partition lattice (n+1)!*n!/2^n of them.
inline constexpr int kMaxSubsetChainN = 8;
inline constexpr int kMaxPartitionChainN = 7;

namespace detail {

// Visitors may return void (always continue) or bool (false stops early).
template <class F, class Arg>
bool visit_keep_going(F& visit, const Arg& value) {
  if constexpr (std::is_void_v<decltype(visit(value))>) {
    visit(value);
    return true;
  } else {
    return static_cast<bool>(visit(value));
  }
}

inline void check_enumeration_bound(int n, int max_n, const char* what) {
  if (n < 0) throw ValidationError("enumeration needs n >= 0");
  if (n > max_n)
    throw ValidationError(std::string(what) + " enumeration bound exceeded: n=" +
                          std::to_string(n) + " > " + std::to_string(max_n));
}

template <class F>
bool subset_chain_dfs(int n, std::vector<Subset>& chain, std::vector<char>& used, F& visit) {
  if (chain.back().size() == n)
    return visit_keep_going(visit, BasedPath<Subset>::unchecked(chain));
  for (int m = 1; m <= n; ++m) {
    if (used[m]) continue;
    used[m] = 1;
    Subset next = chain.back().with(m);
    chain.push_back(std::move(next));
    const bool keep = subset_chain_dfs(n, chain, used, visit);
    chain.pop_back();
    used[m] = 0;
    if (!keep) return false;
  }
  return true;
}

template <class F>
bool partition_chain_dfs(std::vector<Partition>& chain, F& visit) {
  if (chain.back().block_count() == 1)
    return visit_keep_going(visit, BasedPath<Partition>::unchecked(chain));
  const int bc = chain.back().block_count();
  for (int i = 0; i < bc; ++i) {
    for (int j = i + 1; j < bc; ++j) {
      Partition next = chain.back().merge_blocks(i, j);
      chain.push_back(std::move(next));
      const bool keep = partition_chain_dfs(chain, visit);
      chain.pop_back();
      if (!keep) return false;
    }
  }
  return true;
}

template <class F>
bool merge_tree_dfs(int n, std::vector<int>& minima, std::vector<MergeEvent>& events, F& visit) {
  if (static_cast<int>(events.size()) == n) return visit_keep_going(visit, MergeTree(n, events));
  const int count = static_cast<int>(minima.size());
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      events.push_back({minima[i], minima[j]});
      const int b = minima[j];
      minima.erase(minima.begin() + j);
      const bool keep = merge_tree_dfs(n, minima, events, visit);
      minima.insert(minima.begin() + j, b);
      events.pop_back();
      if (!keep) return false;
    }
  }
  return true;
}

}  // namespace detail

// All maximal saturated based chains of the subset lattice of {1,...,n}, in
// lexicographic order of the insertion sequence.
template <class F>
void for_each_maximal_subset_chain(int n, F&& visit, int max_n = kMaxSubsetChainN) {
  detail::check_enumeration_bound(n, max_n, "subset chain");
  std::vector<Subset> chain{Subset::empty(n)};
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  detail::subset_chain_dfs(n, chain, used, visit);
}

// All maximal saturated based chains of the partition lattice of {0,...,n},
// in lexicographic order of the merged block-minima pairs.
template <class F>
void for_each_maximal_partition_chain(int n, F&& visit, int max_n = kMaxPartitionChainN) {
  detail::check_enumeration_bound(n, max_n, "partition chain");
  std::vector<Partition> chain{Partition::singletons(n)};
  chain.reserve(static_cast<std::size_t>(n) + 1);
  detail::partition_chain_dfs(chain, visit);
}

// All merge trees on leaves {0,...,n}, in the same order as the partition
// chains they correspond to.
template <class F>
void for_each_merge_tree(int n, F&& visit, int max_n = kMaxPartitionChainN) {
  detail::check_enumeration_bound(n, max_n, "merge tree");
  if (n < 1) throw ValidationError("merge tree enumeration needs n >= 1");
  std::vector<int> minima(static_cast<std::size_t>(n) + 1);
  std::iota(minima.begin(), minima.end(), 0);
  std::vector<MergeEvent> events;
  events.reserve(static_cast<std::size_t>(n));
  detail::merge_tree_dfs(n, minima, events, visit);
}

// All n! barcodes, in lexicographic order of births listed by death time.
template <class F>
void for_each_barcode(int n, F&& visit, int max_n = kMaxSubsetChainN) {
  detail::check_enumeration_bound(n, max_n, "barcode");
  if (n < 1) throw ValidationError("barcode enumeration needs n >= 1");
  std::vector<int> births(static_cast<std::size_t>(n));
  std::iota(births.begin(), births.end(), 1);
  do {
    if (!detail::visit_keep_going(visit, Barcode::from_births(births))) return;
  } while (std::next_permutation(births.begin(), births.end()));
}

}  // namespace latticefiber
