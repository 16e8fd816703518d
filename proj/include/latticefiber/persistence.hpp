#pragma once

#include "latticefiber/barcode.hpp"
#include "latticefiber/based_path.hpp"
#include "latticefiber/chains.hpp"
#include "latticefiber/merge_tree.hpp"
#include "latticefiber/partition.hpp"
#include "latticefiber/subset.hpp"

namespace latticefiber {

// The labels that have died in u: every element except each block's minimum.
// The block minimum is the oldest leaf of its component and survives. This is
// a monotone, surjective map from the partition lattice of {0,...,n} onto the
// subset lattice of {1,...,n} (0 is always a minimum, so never appears), and
// |dead_labels(u)| = (n+1) - block_count(u).
Subset dead_labels(const Partition& u);

// Pointwise dead_labels along a chain. A saturated partition chain maps to a
// saturated subset chain: merging blocks with minima a < b adds exactly b.
BasedPath<Subset> lift_dead_labels(const BasedPath<Partition>& p);

// Barcode of a merge tree, computed through the lattice route:
// tree -> partition chain -> (lifted dead_labels) -> subset chain -> barcode.
Barcode persistence_map(const MergeTree& t);
PartialBarcode persistence_map(const PartialMergeTree& t);

// Barcode of a merge tree, computed directly: when the blocks with minima
// a < b merge at step k, the younger representative b dies, giving bar (b, k).
// Must agree with persistence_map on every input.
Barcode elder_pairing(const MergeTree& t);
PartialBarcode elder_pairing(const PartialMergeTree& t);

}  // namespace latticefiber
