#include "latticefiber/barcode.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "latticefiber/errors.hpp"

namespace latticefiber {

namespace {

// Shared validation: deaths must be exactly {1,...,k}; births distinct in
// {1,...,n}. Returns births indexed by death.
std::vector<int> births_from_pairs(int n, int k, const std::vector<std::pair<int, int>>& pairs,
                                   const char* what) {
  if (n < 1) throw ValidationError(std::string(what) + " needs n >= 1");
  if (static_cast<int>(pairs.size()) != k)
    throw ValidationError(std::string(what) + " with n=" + std::to_string(n) + " needs exactly " +
                          std::to_string(k) + " pairs, got " + std::to_string(pairs.size()));
  std::vector<int> births(static_cast<std::size_t>(k), 0);
  std::vector<char> birth_seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> death_seen(static_cast<std::size_t>(k) + 1, 0);
  for (const auto& [i, j] : pairs) {
    if (j < 1 || j > k)
      throw ValidationError(std::string(what) + ": death " + std::to_string(j) +
                            " outside {1,...," + std::to_string(k) + "}");
    if (death_seen[j]) throw ValidationError(std::string(what) + ": duplicate death " + std::to_string(j));
    if (i < 1 || i > n)
      throw ValidationError(std::string(what) + ": birth " + std::to_string(i) +
                            " outside {1,...," + std::to_string(n) + "}");
    if (birth_seen[i]) throw ValidationError(std::string(what) + ": duplicate birth " + std::to_string(i));
    death_seen[j] = 1;
    birth_seen[i] = 1;
    births[j - 1] = i;
  }
  return births;
}

std::vector<std::pair<int, int>> pairs_from_births(const std::vector<int>& births) {
  std::vector<std::pair<int, int>> out;
  out.reserve(births.size());
  for (std::size_t j = 0; j < births.size(); ++j)
    out.emplace_back(births[j], static_cast<int>(j) + 1);
  return out;
}

}  // namespace

Barcode::Barcode(int n, const std::vector<std::pair<int, int>>& pairs) : n_(n) {
  births_by_death_ = births_from_pairs(n, n, pairs, "barcode");
}

Barcode Barcode::from_births(std::vector<int> births_by_death) {
  const int n = static_cast<int>(births_by_death.size());
  Barcode b;
  b.n_ = n;
  b.births_by_death_ =
      births_from_pairs(n, n, pairs_from_births(births_by_death), "barcode");
  return b;
}

Barcode Barcode::identity(int n) {
  std::vector<int> births(static_cast<std::size_t>(n));
  std::iota(births.begin(), births.end(), 1);
  return from_births(std::move(births));
}

Barcode Barcode::reversal(int n) {
  std::vector<int> births(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) births[j - 1] = n + 1 - j;
  return from_births(std::move(births));
}

std::vector<std::pair<int, int>> Barcode::pairs() const {
  return pairs_from_births(births_by_death_);
}

PartialBarcode::PartialBarcode(int n, const std::vector<std::pair<int, int>>& pairs) : n_(n) {
  const int k = static_cast<int>(pairs.size());
  if (k > n)
    throw ValidationError("partial barcode stage " + std::to_string(k) +
                          " exceeds n=" + std::to_string(n));
  births_by_death_ = births_from_pairs(n, k, pairs, "partial barcode");
}

PartialBarcode PartialBarcode::from_births(int n, std::vector<int> births_by_death) {
  return PartialBarcode(n, pairs_from_births(births_by_death));
}

std::vector<std::pair<int, int>> PartialBarcode::pairs() const {
  return pairs_from_births(births_by_death_);
}

Barcode to_full(const PartialBarcode& b) {
  if (!b.is_full())
    throw ValidationError("partial barcode at stage " + std::to_string(b.stage()) +
                          " of n=" + std::to_string(b.n()) + " is not full");
  return Barcode::from_births(b.births_by_death());
}

PartialBarcode prefix(const Barcode& b, int k) {
  if (k < 0 || k > b.n())
    throw ValidationError("stage " + std::to_string(k) + " outside [0," + std::to_string(b.n()) +
                          "]");
  return PartialBarcode::from_births(
      b.n(), std::vector<int>(b.births_by_death().begin(), b.births_by_death().begin() + k));
}

bool poset_leq_partial(const PartialBarcode& a, const PartialBarcode& b) {
  if (a.n() != b.n())
    throw ValidationError("cannot compare partial barcodes with n=" + std::to_string(a.n()) +
                          " and n=" + std::to_string(b.n()));
  if (a.stage() > b.stage()) return false;
  return std::equal(a.births_by_death().begin(), a.births_by_death().end(),
                    b.births_by_death().begin());
}

namespace {

std::string bars_to_string(const std::vector<int>& births) {
  std::ostringstream os;
  os << '{';
  for (std::size_t j = 0; j < births.size(); ++j) {
    if (j > 0) os << ',';
    os << '(' << births[j] << ',' << j + 1 << ')';
  }
  os << '}';
  return os.str();
}

}  // namespace

std::string to_string(const Barcode& b) { return bars_to_string(b.births_by_death()); }

std::string to_string(const PartialBarcode& b) {
  return bars_to_string(b.births_by_death()) + "@" + std::to_string(b.stage()) + "/" +
         std::to_string(b.n());
}

std::ostream& operator<<(std::ostream& os, const Barcode& b) { return os << to_string(b); }

std::ostream& operator<<(std::ostream& os, const PartialBarcode& b) {
  return os << to_string(b);
}

}  // namespace latticefiber
