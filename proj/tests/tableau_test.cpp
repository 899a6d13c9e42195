#include <gtest/gtest.h>

#include "bcells/tableau.hpp"

using namespace bcells;

namespace {
const DominoTableau kQ2(2, {{0, 0, 1, 1}, {0, 2, 2}, {3, 4, 4}, {3}});
const DominoTableau kQ3(3, {{0, 0, 0, 1, 1}, {0, 0, 2, 2}, {0, 4}, {3, 4}, {3}});
}  // namespace

TEST(DominoTableau, AccessorsAndShape) {
  EXPECT_EQ(kQ2.rank(), 2);
  EXPECT_EQ(kQ2.num_dominos(), 4);
  EXPECT_EQ(kQ2.shape(), Shape({4, 3, 3, 1}));
  EXPECT_TRUE(kQ2.domino(3).vertical());
  EXPECT_FALSE(kQ2.domino(2).vertical());
  EXPECT_EQ(kQ2.at(0, 1), 0);
  EXPECT_EQ(kQ2.at(1, 9), kOutside);
}

TEST(DominoTableau, ValidationAcceptsPrintedTableaux) {
  EXPECT_TRUE(validate(kQ2)) << validate(kQ2).message;
  EXPECT_TRUE(validate(kQ3)) << validate(kQ3).message;
  EXPECT_TRUE(validate(DominoTableau::core_only(3)));
}

TEST(DominoTableau, ValidationRejects) {
  // Q_3 exactly as printed, with label 2 on two dominos.
  const DominoTableau misprint(3, {{0, 0, 0, 1, 1}, {0, 0, 2, 2}, {0, 4}, {2, 4}, {2}});
  EXPECT_FALSE(validate(misprint));
  // Column decrease.
  EXPECT_FALSE(validate(DominoTableau(0, {{2, 2}, {1, 1}})));
  // Wrong core.
  EXPECT_FALSE(validate(DominoTableau(1, {{1, 1}})));
  // Labels with a gap.
  EXPECT_FALSE(validate(DominoTableau(0, {{1, 1, 3, 3}})));
}

TEST(DominoTableau, SplitExamples) {
  EXPECT_TRUE(is_split(DominoTableau(0, {{1, 1, 2, 2}})));
  EXPECT_FALSE(is_split(DominoTableau(0, {{1, 1}, {2, 2}})));
  EXPECT_FALSE(is_split(kQ2));
  EXPECT_TRUE(is_split(kQ3));
  EXPECT_TRUE(is_split(DominoTableau::core_only(2)));
}

TEST(DominoTableau, TauAndEnhancedTau) {
  EXPECT_EQ(tau_of_tableau(kQ2).to_string(), "{s_1, s_2}");
  EXPECT_EQ(enhanced_tau_of_tableau(kQ2, 3).to_string(), "{s_1, s_2, t_3}");
  EXPECT_EQ(enhanced_tau_of_tableau(kQ2, 1).to_string(), "{s_1, s_2}");
  EXPECT_THROW(enhanced_tau_of_tableau(kQ2, 4), std::domain_error);
}

TEST(DominoTableau, RestrictAndKey) {
  const auto small = restrict_labels(kQ2, 2);
  EXPECT_EQ(small.num_dominos(), 2);
  EXPECT_TRUE(validate(small));
  EXPECT_EQ(small, DominoTableau(2, {{0, 0, 1, 1}, {0, 2, 2}}));
  EXPECT_NE(small.key(), kQ2.key());
}

TEST(DominoTableau, BoxDrawing) {
  const std::string box = to_box_string(kQ2);
  EXPECT_NE(box.find("4"), std::string::npos);
  EXPECT_NE(box.find("┌"), std::string::npos);
}
