// Compares the incremental fiber enumeration against the filter-all-chains
// route, and times the product-formula count at large n.
//
// Usage: fiber_bench [n]   (default n = 6)

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "latticefiber/enumerate.hpp"
#include "latticefiber/fiber.hpp"

using namespace latticefiber;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void bench_barcode(const char* label, const Barcode& b, int brute_bound) {
  auto start = Clock::now();
  long long incremental = 0;
  fiber_enumerate(b, [&](const MergeTree&) { ++incremental; });
  const double t_incremental = ms_since(start);

  start = Clock::now();
  const long long brute = static_cast<long long>(fiber_brute_force(b, brute_bound).size());
  const double t_brute = ms_since(start);

  start = Clock::now();
  const BigCount counted = fiber_count(b);
  const double t_count = ms_since(start);

  std::cout << label << ": size=" << incremental << " (brute " << brute << ", product " << counted
            << ")\n";
  std::cout << "  incremental " << t_incremental << " ms, filter-all-chains " << t_brute
            << " ms, product formula " << t_count << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 6;
  if (n < 1 || n > kMaxPartitionChainN) {
    std::cerr << "n must be in [1, " << kMaxPartitionChainN << "]\n";
    return 2;
  }

  std::mt19937 rng(20240615);
  std::vector<int> births(static_cast<std::size_t>(n));
  std::iota(births.begin(), births.end(), 1);
  std::shuffle(births.begin(), births.end(), rng);

  std::cout << "fiber routes at n=" << n << "\n";
  bench_barcode("identity", Barcode::identity(n), kMaxPartitionChainN);
  bench_barcode("reversal", Barcode::reversal(n), kMaxPartitionChainN);
  bench_barcode("random  ", Barcode::from_births(births), kMaxPartitionChainN);

  const int big_n = 500;
  std::vector<int> big(static_cast<std::size_t>(big_n));
  std::iota(big.begin(), big.end(), 1);
  std::shuffle(big.begin(), big.end(), rng);
  const Barcode big_barcode = Barcode::from_births(big);
  const auto start = Clock::now();
  const BigCount big_count = fiber_count(big_barcode);
  const double t_big = ms_since(start);
  std::ostringstream digits;
  digits << big_count;
  std::cout << "product formula at n=" << big_n << ": " << digits.str().size() << "-digit count in "
            << t_big << " ms\n";
  return 0;
}
