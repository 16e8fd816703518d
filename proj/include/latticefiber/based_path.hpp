#pragma once

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "latticefiber/errors.hpp"
#include "latticefiber/partition.hpp"
#include "latticefiber/subset.hpp"

namespace latticefiber {

// Order, covering relation, and bottom element of a concrete lattice, so the
// path machinery can stay generic over the element kind.
template <class L>
struct LatticeTraits;

template <>
struct LatticeTraits<Subset> {
  static Subset bottom(int n) { return Subset::empty(n); }
  static bool leq(const Subset& a, const Subset& b) { return subset_leq(a, b); }
  static bool covers(const Subset& a, const Subset& b) { return subset_covers(a, b); }
};

template <>
struct LatticeTraits<Partition> {
  static Partition bottom(int n) { return Partition::singletons(n); }
  static bool leq(const Partition& a, const Partition& b) { return refines(a, b); }
  static bool covers(const Partition& a, const Partition& b) { return partition_covers(a, b); }
};

// Saturated chain starting at the lattice's bottom element: each consecutive
// pair is a covering relation. Maximal such chains encode full merge trees
// (partition lattice) and full barcodes (subset lattice).
template <class L>
class BasedPath {
 public:
  explicit BasedPath(std::vector<L> elements) : elements_(std::move(elements)) { validate(); }

  // Skips validation; callers guarantee the sequence is a saturated based chain.
  static BasedPath unchecked(std::vector<L> elements) {
    return BasedPath(std::move(elements), UncheckedTag{});
  }

  const std::vector<L>& elements() const { return elements_; }

  // Number of covering steps (elements minus one).
  int length() const { return static_cast<int>(elements_.size()) - 1; }

  const L& endpoint() const { return elements_.back(); }

  bool operator==(const BasedPath&) const = default;

 private:
  struct UncheckedTag {};
  BasedPath(std::vector<L> elements, UncheckedTag) : elements_(std::move(elements)) {}

  void validate() const {
    if (elements_.empty()) throw ValidationError("based path must be non-empty");
    const L bottom = LatticeTraits<L>::bottom(elements_.front().n());
    if (!(elements_.front() == bottom))
      throw ValidationError("path is not based at the bottom element");
    for (std::size_t i = 0; i + 1 < elements_.size(); ++i) {
      const L& a = elements_[i];
      const L& b = elements_[i + 1];
      if (a == b || !LatticeTraits<L>::leq(a, b))
        throw ValidationError("path elements do not strictly increase at step " +
                              std::to_string(i + 1));
      if (!LatticeTraits<L>::covers(a, b))
        throw ValidationError("unsaturated step " + std::to_string(i + 1) +
                              ": consecutive elements are not a covering pair");
    }
  }

  std::vector<L> elements_;
};

template <class L>
BasedPath<L> validate_based_path(std::vector<L> elements) {
  return BasedPath<L>(std::move(elements));
}

template <class L>
const L& endpoint(const BasedPath<L>& p) {
  return p.endpoint();
}

// Apply a monotone element map pointwise and collapse consecutive equal
// images. Throws ValidationError if the image is not a saturated based chain,
// which signals that f is not liftable on this input.
template <class F, class L>
auto lift_map(F&& f, const BasedPath<L>& p) {
  using L2 = std::remove_cvref_t<std::invoke_result_t<F&, const L&>>;
  std::vector<L2> image;
  image.reserve(p.elements().size());
  for (const L& e : p.elements()) {
    L2 y = f(e);
    if (image.empty() || !(image.back() == y)) image.push_back(std::move(y));
  }
  return BasedPath<L2>(std::move(image));
}

// The lifted map commutes with taking endpoints.
template <class F, class L>
bool check_naturality(F&& f, const BasedPath<L>& p) {
  return f(p.endpoint()) == lift_map(f, p).endpoint();
}

}  // namespace latticefiber
