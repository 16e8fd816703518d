#include "latticefiber/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "latticefiber/errors.hpp"
#include "latticefiber/union_find.hpp"

namespace latticefiber {

namespace {

void require_same_ground(const Partition& u, const Partition& v) {
  if (u.n() != v.n())
    throw ValidationError("ground set mismatch: partitions of {0,...," + std::to_string(u.n()) +
                          "} and {0,...," + std::to_string(v.n()) + "}");
}

// block_of[m] = index of the block containing m, for m in {0,...,n}.
std::vector<int> block_index_table(const Partition& p) {
  std::vector<int> block_of(static_cast<std::size_t>(p.n()) + 1, -1);
  for (int b = 0; b < p.block_count(); ++b)
    for (int m : p.blocks()[b]) block_of[m] = b;
  return block_of;
}

}  // namespace

Partition::Partition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n_ < 0) throw ValidationError("partition ground size must be non-negative");
  std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
  for (auto& block : blocks_) {
    if (block.empty()) throw ValidationError("partition block must be non-empty");
    std::sort(block.begin(), block.end());
    for (int m : block) {
      if (m < 0 || m > n_)
        throw ValidationError("partition element " + std::to_string(m) + " outside {0,...," +
                              std::to_string(n_) + "}");
      if (seen[m])
        throw ValidationError("element " + std::to_string(m) + " appears in more than one block");
      seen[m] = 1;
    }
  }
  for (int m = 0; m <= n_; ++m)
    if (!seen[m]) throw ValidationError("element " + std::to_string(m) + " is not in any block");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

Partition Partition::singletons(int n) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) blocks.push_back({m});
  return Partition(n, std::move(blocks));
}

Partition Partition::coarsest(int n) {
  std::vector<int> all(static_cast<std::size_t>(n) + 1);
  std::iota(all.begin(), all.end(), 0);
  return Partition(n, {std::move(all)});
}

Partition Partition::merge_blocks(int i, int j) const {
  if (i < 0 || j <= i || j >= block_count())
    throw ValidationError("merge_blocks requires block indices i < j");
  std::vector<std::vector<int>> nb = blocks_;
  std::vector<int> merged;
  merged.reserve(nb[i].size() + nb[j].size());
  std::merge(nb[i].begin(), nb[i].end(), nb[j].begin(), nb[j].end(), std::back_inserter(merged));
  nb[static_cast<std::size_t>(i)] = std::move(merged);
  nb.erase(nb.begin() + j);
  return Partition(n_, std::move(nb));
}

bool refines(const Partition& u, const Partition& v) {
  require_same_ground(u, v);
  const std::vector<int> v_block = block_index_table(v);
  for (const auto& block : u.blocks()) {
    const int target = v_block[block.front()];
    for (int m : block)
      if (v_block[m] != target) return false;
  }
  return true;
}

Partition partition_meet(const Partition& u, const Partition& v) {
  require_same_ground(u, v);
  const std::vector<int> u_block = block_index_table(u);
  const std::vector<int> v_block = block_index_table(v);
  std::map<std::pair<int, int>, std::vector<int>> cells;
  for (int m = 0; m <= u.n(); ++m) cells[{u_block[m], v_block[m]}].push_back(m);
  std::vector<std::vector<int>> blocks;
  blocks.reserve(cells.size());
  for (auto& [key, cell] : cells) blocks.push_back(std::move(cell));
  return Partition(u.n(), std::move(blocks));
}

Partition partition_join(const Partition& u, const Partition& v) {
  require_same_ground(u, v);
  UnionFind uf(u.n() + 1);
  for (const auto& block : u.blocks())
    for (std::size_t i = 1; i < block.size(); ++i) uf.unite(block[0], block[i]);
  for (const auto& block : v.blocks())
    for (std::size_t i = 1; i < block.size(); ++i) uf.unite(block[0], block[i]);
  std::map<int, std::vector<int>> components;
  for (int m = 0; m <= u.n(); ++m) components[uf.find(m)].push_back(m);
  std::vector<std::vector<int>> blocks;
  blocks.reserve(components.size());
  for (auto& [root, members] : components) blocks.push_back(std::move(members));
  return Partition(u.n(), std::move(blocks));
}

bool partition_covers(const Partition& u, const Partition& v) {
  require_same_ground(u, v);
  return v.block_count() == u.block_count() - 1 && refines(u, v);
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '{';
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    if (b > 0) os << ',';
    os << '{';
    for (std::size_t i = 0; i < p.blocks()[b].size(); ++i) {
      if (i > 0) os << ',';
      os << p.blocks()[b][i];
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

}  // namespace latticefiber
