// Counts combinatorial cells of W_n for each rank and, for small n, compares
// them with Kazhdan-Lusztig cells for the matching weight ratio.

#include <cstdlib>
#include <iostream>

#include "bcells/bcells.hpp"

int main(int argc, char** argv) {
  using namespace bcells;
  const int n = argc > 1 ? std::atoi(argv[1]) : 3;
  std::cout << "W_" << n << ", " << group_order(n) << " elements\n";
  std::cout << "rank  left  right  two-sided  kl-agrees\n";
  for (int r = 0; r <= n; ++r) {
    const auto left = combinatorial_cells(n, r, Side::left);
    const auto right = combinatorial_cells(n, r, Side::right);
    const auto both = combinatorial_cells(n, r, Side::two_sided);
    std::string agrees = "-";
    if (n <= 4) agrees = kl_cells(n, {1, r + 1}, Side::left) == left ? "yes" : "no";
    std::cout << r << "     " << left.num_blocks() << "    " << right.num_blocks() << "     " << both.num_blocks()
              << "         " << agrees << '\n';
  }
}
