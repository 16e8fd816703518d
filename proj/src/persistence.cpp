#include "latticefiber/persistence.hpp"

#include <stdexcept>

#include "latticefiber/union_find.hpp"

namespace latticefiber {

Subset dead_labels(const Partition& u) {
  std::vector<int> dead;
  dead.reserve(static_cast<std::size_t>(u.n()));
  for (const auto& block : u.blocks())
    dead.insert(dead.end(), block.begin() + 1, block.end());  // front is the block minimum
  return Subset(u.n(), std::move(dead));
}

BasedPath<Subset> lift_dead_labels(const BasedPath<Partition>& p) {
  BasedPath<Subset> lifted = lift_map([](const Partition& u) { return dead_labels(u); }, p);
  if (lifted.elements().size() != p.elements().size())
    throw std::logic_error("dead-labels lift stalled on a saturated chain");
  return lifted;
}

Barcode persistence_map(const MergeTree& t) {
  return subset_chain_to_barcode(lift_dead_labels(tree_to_partition_chain(t)));
}

PartialBarcode persistence_map(const PartialMergeTree& t) {
  return subset_chain_to_partial_barcode(lift_dead_labels(partial_tree_to_partition_chain(t)));
}

namespace {

std::vector<int> elder_births(int n, const std::vector<MergeEvent>& events) {
  UnionFind uf(n + 1);
  std::vector<int> births;
  births.reserve(events.size());
  for (const auto& [x, y] : events) {
    const int ma = uf.min_of(x);
    const int mb = uf.min_of(y);
    births.push_back(std::max(ma, mb));
    uf.unite(x, y);
  }
  return births;
}

}  // namespace

Barcode elder_pairing(const MergeTree& t) {
  return Barcode::from_births(elder_births(t.n(), t.events()));
}

PartialBarcode elder_pairing(const PartialMergeTree& t) {
  return PartialBarcode::from_births(t.n(), elder_births(t.n(), t.events()));
}

}  // namespace latticefiber
