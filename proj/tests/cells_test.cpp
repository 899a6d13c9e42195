#include <gtest/gtest.h>

#include <set>

#include "bcells/cells.hpp"
#include "bcells/insertion.hpp"

using namespace bcells;

namespace {
std::vector<SignedPermutation> sorted(std::vector<SignedPermutation> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST(Cells, StandardTableauCountsMatchGroupOrder) {
  // Sum over shapes of |SDT_r(shape)|^2 = 2^n n!.
  for (int n = 1; n <= 4; ++n) {
    for (int r = 0; r <= 3; ++r) {
      std::map<Shape, std::int64_t> per_shape;
      for (const auto& t : standard_tableaux(r, n)) {
        ASSERT_TRUE(validate(t)) << t.to_string();
        ++per_shape[t.shape()];
      }
      std::int64_t total = 0;
      for (const auto& [shape, c] : per_shape) {
        total += c * c;
        EXPECT_EQ(static_cast<std::int64_t>(standard_tableaux(r, shape).size()), c) << shape.to_string();
      }
      EXPECT_EQ(total, group_order(n)) << "n=" << n << " r=" << r;
    }
  }
}

TEST(Cells, ClassOfTableauIsItsFibre) {
  const DominoTableau q(2, {{0, 0, 1, 1}, {0, 2, 2}, {3, 4, 4}, {3}});
  const auto members = class_of_tableau(q);
  EXPECT_TRUE(std::binary_search(members.begin(), members.end(), SignedPermutation::parse("4 1 -3 -2")));
  for (const auto& w : members) EXPECT_EQ(insert(w, 2).right, q);
}

TEST(Cells, AsymptoticLeftCellsOfRankTwo) {
  const auto cells = asymptotic_cells(2, Side::left);
  EXPECT_EQ(cells.num_blocks(), 6u);
  EXPECT_EQ(combinatorial_cells(2, 1, Side::left), cells);
}

TEST(Cells, RightCellsAreInversesOfLeftCells) {
  for (int n = 1; n <= 4; ++n) {
    for (int r = 0; r <= n; ++r) {
      const auto left = combinatorial_cells(n, r, Side::left);
      const auto right = combinatorial_cells(n, r, Side::right);
      ASSERT_EQ(left.num_blocks(), right.num_blocks());
      for (const auto& b : left.blocks()) {
        std::vector<SignedPermutation> inv;
        for (const auto& w : b) inv.push_back(w.inverse());
        EXPECT_EQ(sorted(inv), right.block_of(inv.front()));
      }
    }
  }
}

TEST(Cells, TwoSidedCellsAreUnions) {
  for (int n = 1; n <= 4; ++n) {
    const auto left = combinatorial_cells(n, 1, Side::left);
    const auto both = combinatorial_cells(n, 1, Side::two_sided);
    EXPECT_TRUE(left.refines(both));
    EXPECT_TRUE(combinatorial_cells(n, 1, Side::right).refines(both));
  }
}

TEST(Cells, StableBeyondAsymptoticRank) {
  for (int n = 1; n <= 3; ++n)
    for (Side s : {Side::left, Side::right, Side::two_sided}) {
      EXPECT_EQ(combinatorial_cells(n, n - 1, s), asymptotic_cells(n, s));
      EXPECT_EQ(combinatorial_cells(n, n + 2, s), asymptotic_cells(n, s));
    }
}

TEST(Cells, BlockJoiningTwoTableauClasses) {
  const DominoTableau q(2, {{0, 0, 1, 1}, {0, 2, 2}, {3, 4, 4}, {3}});
  const auto moved = move_through(q, std::set<int>{4});
  EXPECT_NE(moved.shape(), q.shape());
  auto expected = class_of_tableau(q);
  const auto other = class_of_tableau(moved);
  expected.insert(expected.end(), other.begin(), other.end());
  const auto cells = combinatorial_cells(4, 2, Side::left);
  EXPECT_EQ(cells.block_of(SignedPermutation::parse("4 1 -3 -2")), sorted(expected));
}

TEST(Cells, KnownBlockCounts) {
  const std::size_t left[] = {50, 58, 68, 76, 76};
  const std::size_t two_sided[] = {10, 14, 16, 20, 20};
  for (int r = 0; r <= 4; ++r) {
    EXPECT_EQ(combinatorial_cells(4, r, Side::left).num_blocks(), left[r]) << "r=" << r;
    EXPECT_EQ(combinatorial_cells(4, r, Side::two_sided).num_blocks(), two_sided[r]) << "r=" << r;
  }
}

TEST(Cells, PartitionValidation) {
  EXPECT_THROW(CellPartition(1, "x", {{SignedPermutation::parse("1")}}), std::invalid_argument);
  EXPECT_THROW(CellPartition(1, "x", {{SignedPermutation::parse("1"), SignedPermutation::parse("-1")},
                                      {SignedPermutation::parse("1")}}),
               std::invalid_argument);
  EXPECT_EQ(parse_side("LR"), Side::two_sided);
  EXPECT_THROW(parse_side("X"), std::invalid_argument);
}
