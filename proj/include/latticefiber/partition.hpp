#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace latticefiber {

// Element of the lattice of set partitions of {0,1,...,n}, ordered by
// refinement. Canonical form: each block sorted ascending, blocks sorted
// ascending by their minimum, so equality is structural.
class Partition {
 public:
  Partition(int n, std::vector<std::vector<int>> blocks);

  // Bottom element: every element in its own block.
  static Partition singletons(int n);
  // Top element: one block holding all of {0,...,n}.
  static Partition coarsest(int n);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  // Merge the blocks at indices i < j into one; the result stays canonical.
  Partition merge_blocks(int i, int j) const;

  auto operator<=>(const Partition&) const = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

// u refines v: every block of v is a union of blocks of u.
bool refines(const Partition& u, const Partition& v);

// Greatest lower bound: blocks are the non-empty pairwise intersections.
Partition partition_meet(const Partition& u, const Partition& v);

// Least upper bound: connected components of the co-blocked-in-u-or-v graph.
Partition partition_join(const Partition& u, const Partition& v);

// v covers u: v is u with exactly two blocks merged.
bool partition_covers(const Partition& u, const Partition& v);

std::string to_string(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace latticefiber
