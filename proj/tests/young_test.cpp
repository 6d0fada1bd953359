#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "print.hpp"
#include "dckl/domino.hpp"
#include "dckl/young.hpp"

using namespace dckl;

namespace {

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
  return q;
}

/// Hook length formula.
long hook_count(const Partition& p) {
  long num = 1, den = 1;
  for (int k = 2; k <= p.size(); ++k) num *= k;
  const Partition c = p.conjugate();
  for (int i = 1; i <= p.rows(); ++i)
    for (int j = 1; j <= p.row(i); ++j) den *= (p.row(i) - j) + (c.row(j) - i) + 1;
  return num / den;
}

std::vector<StandardTableau> derived_tableaux(int n) {
  std::vector<StandardTableau> out;
  for (int r = 0; r <= 2; ++r)
    for (const SignedPerm& w : enumerate(n)) {
      const auto pq = domino_pair(w, r);
      out.push_back(young_from_domino(pq.P));
      out.push_back(young_from_domino(pq.Q));
    }
  return out;
}

}  // namespace

TEST(RobinsonSchensted, Monotone) {
  const auto inc = rs_pair(std::vector<int>{1, 2, 3, 4});
  EXPECT_EQ(inc.P.outer(), Partition({4}));
  EXPECT_EQ(inc.Q.outer(), Partition({4}));
  const auto dec = rs_pair(std::vector<int>{4, 3, 2, 1});
  EXPECT_EQ(dec.P.outer(), Partition({1, 1, 1, 1}));
  EXPECT_THROW(rs_pair(std::vector<int>{1, 1}), InvalidArgument);
}

TEST(RobinsonSchensted, InverseSwapsTableaux) {
  for (const auto& p : permutations(4)) {
    const auto a = rs_pair(p), b = rs_pair(inverse_perm(p));
    EXPECT_EQ(a.P, b.Q);
    EXPECT_EQ(a.Q, b.P);
  }
}

TEST(RobinsonSchensted, InverseRoundTrip) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : permutations(n)) {
      const auto pq = rs_pair(p);
      EXPECT_TRUE(pq.P.is_standard());
      EXPECT_TRUE(pq.Q.is_standard());
      EXPECT_EQ(rs_inverse(pq.P, pq.Q), p);
    }
}

TEST(YoungTableaux, CountMatchesHookFormula) {
  for (const auto& shape : {Partition({3, 2}), Partition({4, 2, 1}), Partition({3, 3, 2}), Partition({1}), Partition(std::vector<int>{})})
    EXPECT_EQ(static_cast<long>(standard_young_tableaux(shape).size()), hook_count(shape)) << shape.to_string();
}

TEST(YoungTableaux, Conjugate) {
  const Tableau<int> t({{1, 2, 4}, {3}});
  EXPECT_EQ(t.conjugate(), Tableau<int>({{1, 3}, {2}, {4}}));
  EXPECT_EQ(t.conjugate().conjugate(), t);
  EXPECT_TRUE(t.is_standard());
  EXPECT_FALSE(Tableau<int>({{2, 1}}).is_standard());
}

TEST(Convert, ReversibleAndShapePreserving) {
  std::mt19937 rng(7);
  const auto tabs = derived_tableaux(4);
  for (int k = 0; k < 1000; ++k) {
    const StandardTableau& t = tabs[rng() % tabs.size()];
    const auto letters = t.letters();
    const Letter from = letters[rng() % letters.size()];
    const Letter to = Letter::bar(9);  // larger than all letters of W_4 tableaux
    const auto c = convert(t, from, to);
    EXPECT_TRUE(c.is_standard());
    EXPECT_EQ(c.outer(), t.outer());
    EXPECT_EQ(convert(c, to, from), t);
  }
}

TEST(Convert, LargestLetterKeepsPosition) {
  const StandardTableau t({{Letter::bar(1), Letter::plain(1)}, {Letter::bar(2), Letter::plain(2)}});
  const auto c = convert(t, Letter::plain(2), Letter::plain(5));
  EXPECT_EQ(c.find(Letter::plain(5)), t.find(Letter::plain(2)));
  EXPECT_THROW(convert(t, Letter::plain(3), Letter::plain(5)), InvalidArgument);
  EXPECT_THROW(convert(t, Letter::plain(1), Letter::plain(2)), InvalidArgument);
}

TEST(Neg, Examples) {
  const StandardTableau plain({{Letter::plain(1), Letter::plain(2)}});
  EXPECT_EQ(neg(plain), plain);
  const StandardTableau row({{Letter::bar(1), Letter::plain(1)}});
  EXPECT_EQ(neg(row), StandardTableau({{Letter::neg(1), Letter::plain(1)}}));
  EXPECT_EQ(neg_inverse(neg(row)), row);
}

TEST(Neg, RoundTripOnW3Tableaux) {
  for (const StandardTableau& t : derived_tableaux(3)) {
    const auto n = neg(t);
    EXPECT_TRUE(n.is_standard());
    for (const Letter& l : n.letters()) EXPECT_FALSE(l.is_barred());
    EXPECT_EQ(neg_inverse(n), t);
  }
}
