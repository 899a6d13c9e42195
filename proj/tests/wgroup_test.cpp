#include <gtest/gtest.h>

#include <map>
#include <queue>
#include <set>

#include "bcells/signed_permutation.hpp"

using namespace bcells;

namespace {

// Word length by breadth-first search from the identity over right
// multiplication by simple generators.
std::map<SignedPermutation, int> bfs_lengths(int n) {
  std::map<SignedPermutation, int> dist;
  std::queue<SignedPermutation> q;
  dist[SignedPermutation::identity(n)] = 0;
  q.push(SignedPermutation::identity(n));
  while (!q.empty()) {
    const auto w = q.front();
    q.pop();
    for (int s = 0; s < n; ++s) {
      const auto next = compose(w, simple_generator(s).as_permutation(n));
      if (dist.emplace(next, dist[w] + 1).second) q.push(next);
    }
  }
  return dist;
}

}  // namespace

TEST(SignedPermutation, ParsesBarsAndMinusSigns) {
  const auto w = SignedPermutation::parse("4 1 -3 -2");
  EXPECT_EQ(w.entries(), (std::vector<int>{4, 1, -3, -2}));
  EXPECT_EQ(SignedPermutation::parse("(4 1 −3 −2)"), w);
  EXPECT_THROW(SignedPermutation::parse("1 1"), std::invalid_argument);
  EXPECT_THROW(SignedPermutation::parse("1 3"), std::invalid_argument);
}

TEST(SignedPermutation, CompositionAndInverse) {
  const auto w = SignedPermutation::parse("4 1 -3 -2");
  EXPECT_EQ(compose(w, w.inverse()), SignedPermutation::identity(4));
  EXPECT_EQ(compose(w.inverse(), w), SignedPermutation::identity(4));
  const auto u = SignedPermutation::parse("-2 3 1 -4");
  EXPECT_EQ(compose(compose(u, w), w.inverse()), u);
}

TEST(SignedPermutation, LengthMatchesWordLength) {
  for (int n = 1; n <= 4; ++n) {
    const auto dist = bfs_lengths(n);
    ASSERT_EQ(static_cast<std::int64_t>(dist.size()), group_order(n));
    for (const auto& [w, d] : dist) EXPECT_EQ(length(w), d) << w.to_string();
  }
}

TEST(SignedPermutation, LongestElement) {
  for (int n = 1; n <= 5; ++n) {
    const auto w0 = SignedPermutation::longest(n);
    EXPECT_EQ(length(w0), n * n);
    EXPECT_EQ(static_cast<int>(tau(w0).simple.size()), n);
  }
}

TEST(SignedPermutation, DescentsAgreeWithLength) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& w : enumerate(n)) {
      for (int s = 0; s < n; ++s) {
        const auto g = simple_generator(s);
        const bool shorter = length(compose(w, g.as_permutation(n))) < length(w);
        EXPECT_EQ(right_descends(w, g), shorter) << w.to_string() << " " << g.name();
      }
    }
  }
}

TEST(SignedPermutation, DescentExamples) {
  const auto w = SignedPermutation::parse("4 1 -3 -2");
  EXPECT_TRUE(right_descends(w, Generator::s(1)));
  EXPECT_FALSE(right_descends(w, Generator::t()));
  EXPECT_EQ(tau(w).to_string(), "{s_1, s_2}");
  EXPECT_EQ(enhanced_tau(w, 3).to_string(), "{s_1, s_2, t_3}");
  EXPECT_EQ(enhanced_tau(w, 1).to_string(), "{s_1, s_2}");
}

TEST(SignedPermutation, EnumerationCountsAndOrder) {
  for (int n = 0; n <= 5; ++n) {
    const auto all = enumerate(n);
    EXPECT_EQ(static_cast<std::int64_t>(all.size()), group_order(n));
    const std::set<SignedPermutation> distinct(all.begin(), all.end());
    EXPECT_EQ(distinct.size(), all.size());
  }
}

TEST(SignedPermutation, NonsplitCount) {
  // Positive and negative parts both decreasing: C(2n, n) elements.
  const int expected[] = {1, 2, 6, 20, 70, 252};
  for (int n = 0; n <= 5; ++n) {
    int count = 0;
    for (const auto& w : enumerate(n)) count += is_nonsplit(w);
    EXPECT_EQ(count, expected[n]) << "n=" << n;
  }
  EXPECT_TRUE(is_nonsplit(SignedPermutation::parse("3 -4 1 -2")));
  EXPECT_FALSE(is_nonsplit(SignedPermutation::parse("1 2")));
}
