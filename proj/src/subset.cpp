#include "latticefiber/subset.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "latticefiber/errors.hpp"

namespace latticefiber {

namespace {

void require_same_ambient(const Subset& a, const Subset& b) {
  if (a.n() != b.n())
    throw ValidationError("ambient size mismatch: subsets of {1,...," + std::to_string(a.n()) +
                          "} and {1,...," + std::to_string(b.n()) + "}");
}

}  // namespace

Subset::Subset(int n, std::vector<int> members) : n_(n), members_(std::move(members)) {
  if (n_ < 0) throw ValidationError("subset ambient size must be non-negative");
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const int m = members_[i];
    if (m < 1 || m > n_)
      throw ValidationError("subset member " + std::to_string(m) + " outside {1,...," +
                            std::to_string(n_) + "}");
    if (i > 0 && members_[i - 1] == m)
      throw ValidationError("duplicate subset member " + std::to_string(m));
  }
}

Subset Subset::full(int n) {
  std::vector<int> all(static_cast<std::size_t>(std::max(n, 0)));
  for (int m = 1; m <= n; ++m) all[m - 1] = m;
  return Subset(n, std::move(all));
}

bool Subset::contains(int m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

Subset Subset::with(int m) const {
  std::vector<int> v = members_;
  v.insert(std::lower_bound(v.begin(), v.end(), m), m);
  return Subset(n_, std::move(v));
}

bool subset_leq(const Subset& a, const Subset& b) {
  require_same_ambient(a, b);
  return std::includes(b.members().begin(), b.members().end(), a.members().begin(),
                       a.members().end());
}

std::pair<Subset, Subset> subset_meet_join(const Subset& a, const Subset& b) {
  require_same_ambient(a, b);
  std::vector<int> meet, join;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(meet));
  std::set_union(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                 std::back_inserter(join));
  return {Subset(a.n(), std::move(meet)), Subset(a.n(), std::move(join))};
}

bool subset_covers(const Subset& a, const Subset& b) {
  require_same_ambient(a, b);
  return b.size() == a.size() + 1 && subset_leq(a, b);
}

std::string to_string(const Subset& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    if (i > 0) os << ',';
    os << s.members()[i];
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Subset& s) { return os << to_string(s); }

}  // namespace latticefiber
