#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace latticefiber {

// Combinatorial barcode with n bars: a bijection from births {1,...,n} to
// deaths {1,...,n}, stored as the birth paired with each death. Equivalently
// the graph of a permutation.
class Barcode {
 public:
  Barcode(int n, const std::vector<std::pair<int, int>>& pairs);

  // births[j-1] is the birth dying at time j.
  static Barcode from_births(std::vector<int> births_by_death);

  static Barcode identity(int n);
  static Barcode reversal(int n);

  int n() const { return n_; }
  int birth_of_death(int j) const { return births_by_death_[j - 1]; }
  const std::vector<int>& births_by_death() const { return births_by_death_; }
  // (birth, death) pairs sorted by death.
  std::vector<std::pair<int, int>> pairs() const;

  auto operator<=>(const Barcode&) const = default;

 private:
  Barcode() : n_(0) {}
  int n_;
  std::vector<int> births_by_death_;
};

// Death-prefix of a barcode: k pairs whose deaths are exactly {1,...,k} and
// whose births are distinct members of {1,...,n}.
class PartialBarcode {
 public:
  PartialBarcode(int n, const std::vector<std::pair<int, int>>& pairs);

  static PartialBarcode from_births(int n, std::vector<int> births_by_death);

  int n() const { return n_; }
  int stage() const { return static_cast<int>(births_by_death_.size()); }
  int birth_of_death(int j) const { return births_by_death_[j - 1]; }
  const std::vector<int>& births_by_death() const { return births_by_death_; }
  std::vector<std::pair<int, int>> pairs() const;
  bool is_full() const { return stage() == n_; }

  auto operator<=>(const PartialBarcode&) const = default;

 private:
  PartialBarcode() : n_(0) {}
  int n_;
  std::vector<int> births_by_death_;
};

Barcode to_full(const PartialBarcode& b);

// The stage-k filtration step of b (bars dying by time k).
PartialBarcode prefix(const Barcode& b, int k);

// Containment order on partial barcodes: a's pairs are among b's.
bool poset_leq_partial(const PartialBarcode& a, const PartialBarcode& b);

std::string to_string(const Barcode& b);
std::string to_string(const PartialBarcode& b);
std::ostream& operator<<(std::ostream& os, const Barcode& b);
std::ostream& operator<<(std::ostream& os, const PartialBarcode& b);

}  // namespace latticefiber
