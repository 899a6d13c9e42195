// Inserts one signed permutation at several ranks and shows how the pairs are
// related by moving through extended cycles.

#include <iostream>

#include "bcells/bcells.hpp"

int main(int argc, char** argv) {
  using namespace bcells;
  const auto w = SignedPermutation::parse(argc > 1 ? argv[1] : "4 1 -3 -2");
  std::cout << "w = " << w.to_string() << ", tau = " << tau(w).to_string() << "\n\n";

  for (int r = 0; r <= w.size(); ++r) {
    const TableauPair p = insert(w, r);
    std::cout << "rank " << r << (is_split(p) ? " (split)" : "") << "\n"
              << to_box_string(p.left) << to_box_string(p.right);
    if (r < w.size()) {
      const auto ext = extended_cycles(p.left, p.right);
      std::cout << "extended cycles:";
      for (const auto& c : ext.in_left) std::cout << ' ' << c.to_string();
      std::cout << " |";
      for (const auto& c : ext.in_right) std::cout << ' ' << c.to_string();
      std::cout << (raise_pair_rank(p) == insert(w, r + 1) ? "  -> next rank\n\n" : "  -> MISMATCH\n\n");
    }
  }
  std::cout << "split rank " << split_rank(w) << '\n';
}
