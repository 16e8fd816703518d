#include "latticefiber/fiber.hpp"

#include "latticefiber/chains.hpp"
#include "latticefiber/persistence.hpp"

namespace latticefiber {

namespace {

// Fenwick tree counting alive positions in {0,...,n}.
class AliveCounter {
 public:
  explicit AliveCounter(int n) : tree_(static_cast<std::size_t>(n) + 2, 0) {
    for (int p = 0; p <= n; ++p) add(p, 1);
  }

  void add(int pos, int delta) {
    for (int i = pos + 1; i < static_cast<int>(tree_.size()); i += i & -i) tree_[i] += delta;
  }

  // Number of alive positions in [0, pos].
  int prefix(int pos) const {
    int sum = 0;
    for (int i = pos + 1; i > 0; i -= i & -i) sum += tree_[i];
    return sum;
  }

 private:
  std::vector<int> tree_;
};

}  // namespace

FiberNode fiber_root(int n) {
  std::vector<int> alive(static_cast<std::size_t>(n) + 1);
  std::iota(alive.begin(), alive.end(), 0);
  return FiberNode{PartialMergeTree(n, {}), std::move(alive)};
}

std::vector<FiberNode> extend_step(const FiberNode& node, const Barcode& target) {
  if (node.prefix.n() != target.n())
    throw ValidationError("fiber node n=" + std::to_string(node.prefix.n()) +
                          " does not match barcode n=" + std::to_string(target.n()));
  const int k = node.prefix.stage();
  if (k >= target.n()) return {};
  const int i = target.birth_of_death(k + 1);
  const auto& alive = node.alive_minima;
  const auto it = std::lower_bound(alive.begin(), alive.end(), i);
  if (it == alive.end() || *it != i)
    throw ValidationError("birth " + std::to_string(i) + " dying at time " + std::to_string(k + 1) +
                          " is not an alive block minimum at stage " + std::to_string(k));
  std::vector<FiberNode> children;
  children.reserve(static_cast<std::size_t>(it - alive.begin()));
  for (auto m = alive.begin(); m != it; ++m) {
    std::vector<MergeEvent> events = node.prefix.events();
    events.push_back({*m, i});
    std::vector<int> child_alive;
    child_alive.reserve(alive.size() - 1);
    child_alive.insert(child_alive.end(), alive.begin(), it);
    child_alive.insert(child_alive.end(), it + 1, alive.end());
    children.push_back(
        FiberNode{PartialMergeTree(target.n(), std::move(events)), std::move(child_alive)});
  }
  return children;
}

BigCount fiber_count(const Barcode& target) {
  const int n = target.n();
  AliveCounter alive(n);
  BigCount total = 1;
  for (int k = 1; k <= n; ++k) {
    const int i = target.birth_of_death(k);
    total *= alive.prefix(i - 1);
    alive.add(i, -1);  // i stops being a block minimum once it dies
  }
  return total;
}

std::vector<MergeTree> fiber_brute_force(const Barcode& target, int max_n) {
  std::vector<MergeTree> out;
  for_each_maximal_partition_chain(
      target.n(),
      [&](const BasedPath<Partition>& chain) {
        MergeTree t = partition_chain_to_tree(chain);
        if (persistence_map(t) == target) out.push_back(std::move(t));
      },
      max_n);
  return out;
}

std::vector<MergeTree> fiber_list(const Barcode& target) {
  std::vector<MergeTree> out;
  fiber_enumerate(target, [&](const MergeTree& t) { out.push_back(t); });
  return out;
}

}  // namespace latticefiber
