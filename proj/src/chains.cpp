#include "latticefiber/chains.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "latticefiber/errors.hpp"

namespace latticefiber {

namespace {

// Index of the block whose minimum is m; blocks are sorted by minimum.
int block_with_min(const Partition& p, int m) {
  const auto& blocks = p.blocks();
  auto it = std::lower_bound(blocks.begin(), blocks.end(), m,
                             [](const std::vector<int>& block, int v) { return block.front() < v; });
  if (it == blocks.end() || it->front() != m)
    throw std::logic_error("no block with minimum " + std::to_string(m));
  return static_cast<int>(it - blocks.begin());
}

BasedPath<Partition> chain_from_events(int n, const std::vector<MergeEvent>& events) {
  std::vector<Partition> chain;
  chain.reserve(events.size() + 1);
  chain.push_back(Partition::singletons(n));
  for (const auto& [a, b] : events) {
    const Partition& cur = chain.back();
    Partition next = cur.merge_blocks(block_with_min(cur, a), block_with_min(cur, b));
    chain.push_back(std::move(next));
  }
  return BasedPath<Partition>::unchecked(std::move(chain));
}

std::vector<MergeEvent> events_from_chain(const BasedPath<Partition>& p) {
  const auto& elems = p.elements();
  const int n = elems.front().n();
  std::vector<MergeEvent> events;
  events.reserve(elems.size() - 1);
  std::vector<int> block_of(static_cast<std::size_t>(n) + 1);
  for (std::size_t s = 0; s + 1 < elems.size(); ++s) {
    const Partition& u = elems[s];
    const Partition& v = elems[s + 1];
    for (int b = 0; b < u.block_count(); ++b)
      for (int m : u.blocks()[b]) block_of[m] = b;
    // the covering step fused exactly one pair of u-blocks
    int first = -1, second = -1;
    for (const auto& vblock : v.blocks()) {
      const int lead = block_of[vblock.front()];
      for (int m : vblock) {
        if (block_of[m] != lead) {
          first = lead;
          second = block_of[m];
          break;
        }
      }
      if (first != -1) break;
    }
    if (first == -1) throw std::logic_error("covering step does not merge two blocks");
    const int ma = u.blocks()[first].front();
    const int mb = u.blocks()[second].front();
    events.push_back({std::min(ma, mb), std::max(ma, mb)});
  }
  return events;
}

}  // namespace

BasedPath<Partition> tree_to_partition_chain(const MergeTree& t) {
  return chain_from_events(t.n(), t.events());
}

BasedPath<Partition> partial_tree_to_partition_chain(const PartialMergeTree& t) {
  return chain_from_events(t.n(), t.events());
}

MergeTree partition_chain_to_tree(const BasedPath<Partition>& p) {
  const int n = p.elements().front().n();
  if (p.length() != n)
    throw ValidationError("partition chain of length " + std::to_string(p.length()) +
                          " is not maximal (need " + std::to_string(n) + " steps)");
  return MergeTree(n, events_from_chain(p));
}

PartialMergeTree partition_chain_to_partial_tree(const BasedPath<Partition>& p) {
  return PartialMergeTree(p.elements().front().n(), events_from_chain(p));
}

BasedPath<Subset> barcode_to_subset_chain(const Barcode& b) {
  std::vector<Subset> chain;
  chain.reserve(static_cast<std::size_t>(b.n()) + 1);
  chain.push_back(Subset::empty(b.n()));
  for (int j = 1; j <= b.n(); ++j) chain.push_back(chain.back().with(b.birth_of_death(j)));
  return BasedPath<Subset>::unchecked(std::move(chain));
}

BasedPath<Subset> partial_barcode_to_subset_chain(const PartialBarcode& b) {
  std::vector<Subset> chain;
  chain.reserve(static_cast<std::size_t>(b.stage()) + 1);
  chain.push_back(Subset::empty(b.n()));
  for (int j = 1; j <= b.stage(); ++j) chain.push_back(chain.back().with(b.birth_of_death(j)));
  return BasedPath<Subset>::unchecked(std::move(chain));
}

namespace {

std::vector<int> births_from_chain(const BasedPath<Subset>& p) {
  const auto& elems = p.elements();
  std::vector<int> births;
  births.reserve(elems.size() - 1);
  for (std::size_t s = 0; s + 1 < elems.size(); ++s) {
    std::vector<int> diff;
    std::set_difference(elems[s + 1].members().begin(), elems[s + 1].members().end(),
                        elems[s].members().begin(), elems[s].members().end(),
                        std::back_inserter(diff));
    if (diff.size() != 1) throw std::logic_error("covering step does not add one element");
    births.push_back(diff.front());
  }
  return births;
}

}  // namespace

Barcode subset_chain_to_barcode(const BasedPath<Subset>& p) {
  const int n = p.elements().front().n();
  if (p.length() != n)
    throw ValidationError("subset chain of length " + std::to_string(p.length()) +
                          " is not maximal (need " + std::to_string(n) + " steps)");
  return Barcode::from_births(births_from_chain(p));
}

PartialBarcode subset_chain_to_partial_barcode(const BasedPath<Subset>& p) {
  return PartialBarcode::from_births(p.elements().front().n(), births_from_chain(p));
}

}  // namespace latticefiber
