#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace latticefiber {

// Element of the lattice of subsets of {1,...,n}, ordered by inclusion.
// Members are kept sorted so equality is structural.
class Subset {
 public:
  Subset(int n, std::vector<int> members);

  static Subset empty(int n) { return Subset(n, {}); }
  static Subset full(int n);

  int n() const { return n_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(int m) const;

  // Copy with one more member (must not already be present).
  Subset with(int m) const;

  auto operator<=>(const Subset&) const = default;

 private:
  int n_;
  std::vector<int> members_;  // sorted, unique, each in [1, n]
};

bool subset_leq(const Subset& a, const Subset& b);

// (meet, join) = (intersection, union).
std::pair<Subset, Subset> subset_meet_join(const Subset& a, const Subset& b);

// b covers a: a is a subset of b and b has exactly one extra element.
bool subset_covers(const Subset& a, const Subset& b);

std::string to_string(const Subset& s);
std::ostream& operator<<(std::ostream& os, const Subset& s);

}  // namespace latticefiber
