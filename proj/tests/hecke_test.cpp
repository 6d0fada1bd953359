#include <gtest/gtest.h>

#include <memory>

#include "print.hpp"
#include "dckl/hecke.hpp"
#include "dckl/kl_basis.hpp"

using namespace dckl;

namespace {

LaurentPoly v(int e) { return LaurentPoly::monomial(1, e); }

const Weights kWeights[] = {{1, 1}, {2, 1}, {1, 2}, {2, 3}, {3, 2}};

}  // namespace

TEST(Hecke, QuadraticRelation) {
  auto G = std::make_shared<const GroupTable>(2);
  for (const Weights& wt : kWeights) {
    const HeckeAlgebra alg(G, wt);
    for (GroupTable::Gen g = 0; g < G->generator_count(); ++g) {
      const int s = G->index_of(SignedPerm::generator(2, GroupTable::generator(g)));
      const HeckeElt sq = alg.multiply(alg.T(s), alg.T(s));
      HeckeElt expect = alg.T(G->identity());
      expect += quadratic_term(wt.of(g)) * alg.T(s);
      EXPECT_EQ(sq, expect);
    }
  }
}

TEST(Hecke, BraidRelations) {
  auto G = std::make_shared<const GroupTable>(2);
  const HeckeAlgebra alg(G, {2, 3});
  const int t = G->index_of(SignedPerm::generator(2, Generator::t()));
  const int s = G->index_of(SignedPerm::generator(2, Generator::s(1)));
  auto prod = [&](std::initializer_list<int> xs) {
    HeckeElt h = alg.T(G->identity());
    for (int x : xs) h = alg.multiply(h, alg.T(x));
    return h;
  };
  EXPECT_EQ(prod({t, s, t, s}), prod({s, t, s, t}));
  EXPECT_EQ(prod({t, s, t, s}), alg.T(G->longest()));
}

TEST(Hecke, BarIsAnInvolution) {
  auto G = std::make_shared<const GroupTable>(2);
  const HeckeAlgebra alg(G, {1, 2});
  for (int w = 0; w < G->size(); ++w) EXPECT_EQ(alg.bar(alg.bar(alg.T(w))), alg.T(w));
  const int t = G->index_of(SignedPerm::generator(2, Generator::t()));
  HeckeElt expect = alg.T(t);
  expect -= quadratic_term(2) * alg.T(G->identity());
  EXPECT_EQ(alg.bar_T(t), expect);
}

TEST(KLBasis, SmallElements) {
  for (const Weights& wt : kWeights) {
    const KLBasis kl = KLBasis::build(2, wt);
    const GroupTable& G = kl.group();
    const int e = G.identity();
    const int t = G.index_of(SignedPerm::generator(2, Generator::t()));
    const int s = G.index_of(SignedPerm::generator(2, Generator::s(1)));
    EXPECT_EQ(kl.p(e, t), v(-wt.b));
    EXPECT_EQ(kl.p(e, s), v(-wt.a));
    EXPECT_EQ(kl.p(t, t), LaurentPoly(1));
    EXPECT_TRUE(kl.p(s, t).is_zero());
    EXPECT_EQ(kl.C(e).index, std::vector<int>{e});
  }
}

TEST(KLBasis, MatchesTriangularSolve) {
  for (int n = 1; n <= 3; ++n) {
    auto G = std::make_shared<const GroupTable>(n);
    for (const Weights& wt : kWeights) {
      const KLBasis kl = KLBasis::build(G, wt, {2, {}});
      const auto tri = kl_basis_triangular(HeckeAlgebra(G, wt));
      for (int w = 0; w < G->size(); ++w) {
        EXPECT_EQ(kl.C(w).index, tri[static_cast<std::size_t>(w)].index) << "n=" << n << " w=" << w;
        EXPECT_EQ(kl.C(w).coeff, tri[static_cast<std::size_t>(w)].coeff) << "n=" << n << " w=" << w;
      }
    }
  }
}

TEST(KLBasis, BarInvariantAndStarCompatible) {
  auto G = std::make_shared<const GroupTable>(3);
  for (const Weights& wt : kWeights) {
    const HeckeAlgebra alg(G, wt);
    const KLBasis kl = KLBasis::build(G, wt);
    for (int w = 0; w < G->size(); ++w) {
      const HeckeElt c = kl.C_dense(w);
      EXPECT_EQ(alg.bar(c), c);
      EXPECT_EQ(c.star(), kl.C_dense(G->inverse(w)));
      for (int y : c.support())
        if (y != w) {
          EXPECT_TRUE(c[y].max_degree() < 0);
        }
    }
  }
}

TEST(KLBasis, ThreadCountDoesNotChangeTheResult) {
  auto G = std::make_shared<const GroupTable>(3);
  const KLBasis one = KLBasis::build(G, {1, 2}, {1, {}});
  const KLBasis four = KLBasis::build(G, {1, 2}, {4, {}});
  for (int w = 0; w < G->size(); ++w) EXPECT_EQ(one.C(w).coeff, four.C(w).coeff);
  EXPECT_EQ(one.left_edges(), four.left_edges());
}

TEST(KLBasis, RejectsBadWeightsAndLargeRanks) {
  EXPECT_THROW(KLBasis::build(2, {0, 1}), InvalidArgument);
  EXPECT_THROW(KLBasis::build(5, {1, 1}), ResourceError);
  EXPECT_THROW(KLBasis::build(6, {1, 1}, {1, {true, false}}), ResourceError);
}
