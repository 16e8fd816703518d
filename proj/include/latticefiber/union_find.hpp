#pragma once

#include <numeric>
#include <vector>

namespace latticefiber {

// Disjoint sets over {0,...,size-1} with per-class minimum tracking.
class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(size), rank_(size, 0), min_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
    std::iota(min_.begin(), min_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Smallest element in x's class.
  int min_of(int x) { return min_[find(x)]; }

  void unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return;
    if (rank_[rx] < rank_[ry]) std::swap(rx, ry);
    parent_[ry] = rx;
    if (rank_[rx] == rank_[ry]) ++rank_[rx];
    if (min_[ry] < min_[rx]) min_[rx] = min_[ry];
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<int> min_;
};

}  // namespace latticefiber
