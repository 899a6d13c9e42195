// Cycle structure of a domino tableau under both fixed-square conventions.

#include <iostream>

#include "bcells/bcells.hpp"

namespace {

void show(const bcells::DominoTableau& t, bcells::Convention conv) {
  for (const auto& c : bcells::cycle_partition(t, conv)) {
    const auto moved = bcells::move_through(t, std::set<int>(c.labels.begin(), c.labels.end()), conv);
    std::cout << "  " << c.to_string() << " " << bcells::to_string(c.kind) << " -> " << moved.to_string() << '\n';
  }
}

}  // namespace

int main() {
  const bcells::DominoTableau t(2, {{0, 0, 1, 1}, {0, 3, 4}, {2, 3, 4}, {2}});
  std::cout << bcells::to_box_string(t) << "regular:\n";
  show(t, bcells::Convention::regular);
  std::cout << "opposite:\n";
  show(t, bcells::Convention::opposite);
  std::cout << "raised: " << bcells::raise_tableau_rank(t).to_string() << '\n';
}
