#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "print.hpp"
#include "dckl/group_table.hpp"
#include "dckl/signed_perm.hpp"

using namespace dckl;

namespace {

SignedPerm P(std::vector<int> w) { return SignedPerm(std::move(w)); }

/// Word lengths by breadth-first search over the Cayley graph.
std::map<SignedPerm, int> bfs_lengths(int n) {
  std::vector<SignedPerm> gens{SignedPerm::generator(n, Generator::t())};
  for (int i = 1; i < n; ++i) gens.push_back(SignedPerm::generator(n, Generator::s(i)));
  std::map<SignedPerm, int> dist{{SignedPerm::identity(n), 0}};
  std::queue<SignedPerm> q;
  q.push(SignedPerm::identity(n));
  while (!q.empty()) {
    const SignedPerm w = q.front();
    q.pop();
    for (const SignedPerm& g : gens) {
      const SignedPerm v = compose(w, g);
      if (dist.emplace(v, dist[w] + 1).second) q.push(v);
    }
  }
  return dist;
}

SignedPerm product(int n, const std::vector<Generator>& word) {
  SignedPerm w = SignedPerm::identity(n);
  for (const Generator& g : word) w = compose(w, SignedPerm::generator(n, g));
  return w;
}

/// Elements below w by the subword property of one reduced word.
std::set<SignedPerm> subword_ideal(const SignedPerm& w) {
  const auto word = reduced_word(w);
  std::set<SignedPerm> out;
  for (std::uint32_t mask = 0; mask < (1u << word.size()); ++mask) {
    std::vector<Generator> sub;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (mask & (1u << i)) sub.push_back(word[i]);
    out.insert(product(w.rank(), sub));
  }
  return out;
}

/// iota_r(w) as a permutation of alphabet positions 0..N-1.
std::vector<int> as_permutation(const OrderedWord& word, const OrderedWord& alphabet) {
  std::vector<int> p;
  for (const Letter& l : word) p.push_back(static_cast<int>(std::find(alphabet.begin(), alphabet.end(), l) - alphabet.begin()));
  return p;
}

}  // namespace

TEST(SignedPerm, IdentityAndValidation) {
  EXPECT_EQ(SignedPerm::identity(2), P({1, 2}));
  EXPECT_EQ(SignedPerm::identity(1), P({1}));
  EXPECT_THROW(SignedPerm::identity(0), InvalidArgument);
  EXPECT_THROW(P({1, 1}), InvalidArgument);
  EXPECT_THROW(P({3, 1}), InvalidArgument);
  for (const SignedPerm& w : enumerate(3)) EXPECT_EQ(compose(SignedPerm::identity(3), w), w);
}

TEST(SignedPerm, Compose) {
  const SignedPerm t = P({-1, 2}), s1 = P({2, 1});
  EXPECT_EQ(compose(t, s1), P({2, -1}));
  EXPECT_EQ(compose(s1, compose(t, s1)), P({1, -2}));
  EXPECT_EQ(SignedPerm::generator(2, Generator::tt(2)), P({1, -2}));
  EXPECT_THROW(compose(t, SignedPerm::identity(3)), InvalidArgument);
  for (const SignedPerm& w : enumerate(3)) {
    EXPECT_EQ(compose(w, inverse(w)), SignedPerm::identity(3));
    EXPECT_EQ(inverse(inverse(w)), w);
  }
}

TEST(SignedPerm, TReflectionsConjugate) {
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i) {
      const SignedPerm s = SignedPerm::generator(n, Generator::s(i));
      EXPECT_EQ(SignedPerm::generator(n, Generator::tt(i + 1)),
                compose(s, compose(SignedPerm::generator(n, Generator::tt(i)), s)));
    }
}

TEST(SignedPerm, LengthMatchesBreadthFirstSearch) {
  for (int n = 1; n <= 4; ++n) {
    const auto dist = bfs_lengths(n);
    ASSERT_EQ(dist.size(), enumerate(n).size());
    for (const auto& [w, d] : dist) EXPECT_EQ(length(w), d) << w.to_string();
    EXPECT_EQ(length(SignedPerm::longest(n)), n * n);
  }
  EXPECT_EQ(length(SignedPerm::longest(3)), 9);
  EXPECT_EQ(length(P({1, -2})), 3);
  EXPECT_EQ(length(SignedPerm::identity(3)), 0);
}

TEST(SignedPerm, DescentCriterionAgainstLengths) {
  for (int n = 1; n <= 4; ++n)
    for (const SignedPerm& w : enumerate(n)) {
      for (int i = 1; i < n; ++i) {
        const int l = length(compose(w, SignedPerm::generator(n, Generator::s(i))));
        EXPECT_EQ(l > length(w), w(i) < w(i + 1));
        EXPECT_EQ(std::abs(l - length(w)), 1);
      }
      for (int i = 1; i <= n; ++i)
        EXPECT_EQ(length(compose(w, SignedPerm::generator(n, Generator::tt(i)))) > length(w), w(i) > 0);
    }
}

TEST(SignedPerm, TLength) {
  EXPECT_EQ(t_length(SignedPerm::identity(3)), 0);
  EXPECT_EQ(t_length(SignedPerm::longest(4)), 4);
  EXPECT_EQ(t_length(P({5, 6, 1, 4, 2, -3})), 1);
  for (const SignedPerm& w : enumerate(3)) {
    EXPECT_EQ(t_length(w), t_length(inverse(w)));
    const auto word = reduced_word(w);
    EXPECT_EQ(t_length(w), std::count(word.begin(), word.end(), Generator::t()));
  }
}

TEST(SignedPerm, RightDescents) {
  EXPECT_TRUE(right_descents(SignedPerm::identity(3)).empty());
  EXPECT_EQ(right_descents(P({2, -1})), std::vector<Generator>{Generator::s(1)});
  EXPECT_EQ(right_descents(SignedPerm::longest(3)),
            (std::vector<Generator>{Generator::t(), Generator::s(1), Generator::s(2)}));
}

TEST(SignedPerm, ExtendedRightDescents) {
  EXPECT_TRUE(extended_right_descents(SignedPerm::identity(3), 2).empty());
  EXPECT_EQ(extended_right_descents(P({-2, 1}), 2), std::vector<Generator>{Generator::tt(1)});
  EXPECT_EQ(extended_right_descents(SignedPerm::longest(3), 3).size(), 5u);
  EXPECT_EQ(extended_right_descents(SignedPerm::longest(3), 7).size(), 5u);
  EXPECT_THROW(extended_right_descents(SignedPerm::identity(2), -1), InvalidArgument);
}

TEST(SignedPerm, LongestElement) {
  EXPECT_EQ(SignedPerm::longest(2), P({-1, -2}));
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(compose(SignedPerm::longest(n), SignedPerm::longest(n)), SignedPerm::identity(n));
}

TEST(SignedPerm, ParabolicCosetSplit) {
  const auto dist = bfs_lengths(4);
  for (const SignedPerm& w : enumerate(4)) {
    const auto [x, y] = coset_split_parabolic(w, 2);
    EXPECT_EQ(compose(x, y), w);
    EXPECT_TRUE(x(1) > 0 && x(1) < x(2));
    EXPECT_EQ(y(3), 3);
    EXPECT_EQ(y(4), 4);
    EXPECT_EQ(dist.at(w), dist.at(x) + dist.at(y));
  }
  const SignedPerm v = P({-2, 1});
  EXPECT_EQ(coset_split_parabolic(embed(v, 4), 2).first, SignedPerm::identity(4));
  EXPECT_EQ(coset_split_parabolic(embed(v, 4), 2).second, embed(v, 4));
  EXPECT_THROW(coset_split_parabolic(v, 3), InvalidArgument);
}

TEST(SignedPerm, ParabolicCosetSplitIsUnique) {
  // Among all factorizations w = x y, y in W_2, only one has 0 < x(1) < x(2).
  std::vector<SignedPerm> sub;
  for (const SignedPerm& y : enumerate(2)) sub.push_back(embed(y, 3));
  for (const SignedPerm& w : enumerate(3)) {
    int count = 0;
    for (const SignedPerm& y : sub) {
      const SignedPerm x = compose(w, inverse(y));
      if (x(1) > 0 && x(1) < x(2)) ++count;
    }
    EXPECT_EQ(count, 1);
  }
}

TEST(SignedPerm, SymmetricCosetSplit) {
  for (const SignedPerm& w : enumerate(3)) {
    const auto [x, sigma] = coset_split_symmetric(w);
    EXPECT_EQ(compose(x, sigma), w);
    EXPECT_TRUE(in_symmetric_group(sigma));
    EXPECT_TRUE(x(1) < x(2) && x(2) < x(3));
    EXPECT_EQ(length(w), length(x) + length(sigma));
  }
  const SignedPerm sigma = P({3, 1, 2});
  EXPECT_EQ(coset_split_symmetric(sigma).first, SignedPerm::identity(3));
  EXPECT_EQ(coset_split_symmetric(SignedPerm::longest(3)).first, P({-3, -2, -1}));
  EXPECT_EQ(coset_split_symmetric(SignedPerm::longest(3)).second, P({3, 2, 1}));
}

TEST(SignedPerm, ReducedWordReplays) {
  EXPECT_TRUE(reduced_word(SignedPerm::identity(3)).empty());
  EXPECT_EQ(reduced_word(P({1, -2})).size(), 3u);
  for (const SignedPerm& w : enumerate(3)) {
    const auto word = reduced_word(w);
    EXPECT_EQ(static_cast<int>(word.size()), length(w));
    EXPECT_EQ(product(3, word), w);
  }
}

TEST(SignedPerm, Enumerate) {
  EXPECT_EQ(enumerate(1), (std::vector<SignedPerm>{P({-1}), P({1})}));
  EXPECT_EQ(enumerate(3).size(), 48u);
  const auto all = enumerate(6);
  EXPECT_EQ(all.size(), 46080u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  EXPECT_THROW(enumerate(0), InvalidArgument);
}

TEST(Bruhat, MatchesSubwordProperty) {
  auto G = std::make_shared<const GroupTable>(3);
  BruhatOrder order(G);
  for (int w = 0; w < G->size(); ++w) {
    const auto ideal = subword_ideal(G->element(w));
    for (int y = 0; y < G->size(); ++y)
      EXPECT_EQ(order.leq(y, w), ideal.count(G->element(y)) > 0) << G->element(y).to_string() << " " << G->element(w).to_string();
  }
}

TEST(Bruhat, PartialOrder) {
  auto G = std::make_shared<const GroupTable>(3);
  BruhatOrder order(G);
  const int N = G->size();
  for (int x = 0; x < N; ++x) {
    EXPECT_TRUE(order.leq(G->identity(), x));
    EXPECT_TRUE(order.leq(x, G->longest()));
    for (int y = 0; y < N; ++y) {
      if (x != y && order.leq(x, y)) {
        EXPECT_FALSE(order.leq(y, x));
        EXPECT_LT(G->length(x), G->length(y));
      }
      for (int z = 0; z < N; ++z)
        if (order.leq(x, y) && order.leq(y, z)) {
          EXPECT_TRUE(order.leq(x, z));
        }
    }
  }
  EXPECT_TRUE(bruhat_leq(P({1, 2}), P({-2, -1})));
  EXPECT_FALSE(bruhat_leq(P({-1, 2}), P({2, 1})));
}

TEST(GroupTable, ConsistentWithElements) {
  const GroupTable G(3);
  for (int i = 0; i < G.size(); ++i) {
    const SignedPerm& w = G.element(i);
    EXPECT_EQ(G.index_of(w), i);
    EXPECT_EQ(G.element(G.inverse(i)), inverse(w));
    EXPECT_EQ(G.length(i), length(w));
    for (int g = 0; g < G.generator_count(); ++g) {
      EXPECT_EQ(G.element(G.left(g, i)), left_multiply(GroupTable::generator(g), w));
      EXPECT_EQ(G.element(G.right(i, g)), right_multiply(w, GroupTable::generator(g)));
    }
  }
  EXPECT_EQ(G.first_left_descent(G.identity()), -1);
}

TEST(Iota, Examples) {
  const auto w = iota(SignedPerm::identity(2), 0);
  EXPECT_EQ(w, (OrderedWord{Letter::neg(2), Letter::neg(1), Letter::plain(1), Letter::plain(2)}));
  EXPECT_EQ(iota(P({-1}), 1), (OrderedWord{Letter::plain(1), Letter::zero(1), Letter::neg(1)}));
  EXPECT_EQ(iota(P({1, 2}), 2).size(), 7u);
  EXPECT_LT(Letter::neg(1), Letter::zero(1));
  EXPECT_LT(Letter::zero(3), Letter::bar(1));
  EXPECT_LT(Letter::bar(1), Letter::plain(1));
  EXPECT_LT(Letter::plain(1), Letter::bar(2));
}

TEST(Iota, InverseCompatible) {
  for (int r = 0; r <= 2; ++r)
    for (const SignedPerm& w : enumerate(3)) {
      const auto alphabet = iota_alphabet(3, r);
      const auto p = as_permutation(iota(w, r), alphabet);
      const auto q = as_permutation(iota(inverse(w), r), alphabet);
      for (std::size_t k = 0; k < p.size(); ++k) EXPECT_EQ(q[static_cast<std::size_t>(p[k])], static_cast<int>(k));
    }
}
