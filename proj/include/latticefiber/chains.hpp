#pragma once

#include "latticefiber/barcode.hpp"
#include "latticefiber/based_path.hpp"
#include "latticefiber/merge_tree.hpp"
#include "latticefiber/partition.hpp"
#include "latticefiber/subset.hpp"

namespace latticefiber {

// Merge trees correspond to maximal saturated based chains in the partition
// lattice: step k of the chain merges the two blocks named by event k.
// Barcodes correspond to maximal saturated based chains in the subset
// lattice: step j adds the birth that dies at time j. The four conversions
// below (and their partial variants) are mutually inverse.

BasedPath<Partition> tree_to_partition_chain(const MergeTree& t);
BasedPath<Partition> partial_tree_to_partition_chain(const PartialMergeTree& t);

// Requires a maximal chain (length n); the partial variant accepts any.
MergeTree partition_chain_to_tree(const BasedPath<Partition>& p);
PartialMergeTree partition_chain_to_partial_tree(const BasedPath<Partition>& p);

BasedPath<Subset> barcode_to_subset_chain(const Barcode& b);
BasedPath<Subset> partial_barcode_to_subset_chain(const PartialBarcode& b);

// Requires a maximal chain (length n); the partial variant accepts any.
Barcode subset_chain_to_barcode(const BasedPath<Subset>& p);
PartialBarcode subset_chain_to_partial_barcode(const BasedPath<Subset>& p);

}  // namespace latticefiber
