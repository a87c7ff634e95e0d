#include <gtest/gtest.h>

#include <random>

#include "ntt/quiver.hpp"
#include "support.hpp"

using namespace ntt;
using namespace ntt::test;

namespace {

const PrimeField F2(2);

QuiverRep p1() { return a2_rep(F2, 1, 1, mat(F2, 1, 1, {1})); }        // F2 -id-> F2
QuiverRep s2() { return a2_rep(F2, 0, 1, Matrix(F2, 1, 0)); }          // 0 -> F2
QuiverRep s1() { return a2_rep(F2, 1, 0, Matrix(F2, 0, 1)); }          // F2 -> 0

}  // namespace

TEST(QuiverTest, RejectsCycles) {
  EXPECT_THROW(Quiver({"a", "b"}, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Quiver({"a"}, {{0, 0}}), std::invalid_argument);
}

TEST(QuiverTest, PathsOfA3) {
  auto q = Quiver::linear(3);
  EXPECT_EQ(q->paths(0, 2).size(), 1u);
  EXPECT_EQ(q->paths(0, 2)[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(q->paths(2, 0).empty());
  EXPECT_EQ(q->paths(1, 1).size(), 1u);
}

TEST(RepTest, ShapeIsValidated) {
  EXPECT_THROW(a2_rep(F2, 1, 2, Matrix(F2, 1, 1)), std::invalid_argument);
}

TEST(HomSpaceTest, FromZeroIsZero) {
  EXPECT_EQ(rep_hom_space(QuiverRep::zero(Quiver::linear(2), F2), p1()).size(), 0u);
}

TEST(HomSpaceTest, OneVertexScalars) {
  EXPECT_EQ(rep_hom_space(vec_rep(F2, 1), vec_rep(F2, 1)).size(), 1u);
}

TEST(HomSpaceTest, A2AgainstEnumeration) {
  // Every pair of components is enumerated and tested against the arrow.
  EXPECT_EQ(brute_intertwiner_dim(p1(), s2()), 0u);
  EXPECT_EQ(rep_hom_space(p1(), s2()).size(), 0u);
  EXPECT_EQ(brute_intertwiner_dim(s2(), p1()), 1u);
  EXPECT_EQ(rep_hom_space(s2(), p1()).size(), 1u);
  EXPECT_EQ(rep_hom_space(p1(), s1()).size(), brute_intertwiner_dim(p1(), s1()));
}

TEST(HomSpaceTest, RandomRepsAgainstEnumeration) {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 25; ++trial) {
      QuiverRep a = random_rep(Quiver::linear(2), f, 2, rng), b = random_rep(Quiver::linear(2), f, 2, rng);
      auto basis = rep_hom_space(a, b);
      EXPECT_EQ(basis.size(), brute_intertwiner_dim(a, b));
      for (const auto& phi : basis) EXPECT_TRUE(is_intertwiner(a, b, phi.components()));
    }
  }
}

TEST(HomSpaceTest, QuiverMismatchThrows) {
  EXPECT_THROW(rep_hom_space(vec_rep(F2, 1), p1()), std::invalid_argument);
}

TEST(KernelTest, IdentityAndZero) {
  QuiverRep a = p1();
  EXPECT_TRUE(rep_kernel(RepMap::identity(a)).object.is_zero());
  EXPECT_EQ(rep_kernel(RepMap::zero(a, s1())).object, a);
}

TEST(KernelTest, ProjectionOntoTopHasSimpleKernel) {
  RepMap top(p1(), s1(), {mat(F2, 1, 1, {1}), Matrix(F2, 0, 1)});
  RepKernel k = rep_kernel(top);
  EXPECT_EQ(k.object.dims(), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(compose(top, k.inclusion).is_zero());
}

TEST(CokernelTest, IdentityZeroAndRankNullity) {
  QuiverRep a = p1();
  EXPECT_TRUE(rep_cokernel(RepMap::identity(a)).object.is_zero());
  EXPECT_EQ(rep_cokernel(RepMap::zero(s1(), a)).object, a);
  std::mt19937_64 rng(23);
  PrimeField f3(3);
  auto q = Quiver::linear(2);
  for (int trial = 0; trial < 30; ++trial) {
    QuiverRep a2 = random_rep(q, f3, 3, rng), b2 = random_rep(q, f3, 3, rng);
    auto basis = rep_hom_space(a2, b2);
    if (basis.empty()) continue;
    RepMap phi = basis[rng() % basis.size()];
    RepCokernel c = rep_cokernel(phi);
    for (std::size_t v = 0; v < 2; ++v) EXPECT_EQ(c.object.dim(v), b2.dim(v) - rank(phi.component(v)));
    EXPECT_TRUE(compose(c.projection, phi).is_zero());
  }
}

TEST(DirectSumTest, DimensionsAdd) {
  QuiverRep zero = QuiverRep::zero(Quiver::linear(2), F2);
  EXPECT_EQ(direct_sum(p1(), zero).object, p1());
  EXPECT_TRUE(direct_sum(zero, zero).object.is_zero());
  DirectSum s = direct_sum(p1(), s2());
  EXPECT_EQ(s.object.dims(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(compose(s.project_first, s.inject_first), RepMap::identity(p1()));
  EXPECT_TRUE(compose(s.project_second, s.inject_first).is_zero());
  EXPECT_THROW(direct_sum(p1(), vec_rep(F2, 1)), std::invalid_argument);
}

TEST(RandomRepTest, ZeroMaxDimAndDeterminism) {
  std::mt19937_64 a(9), b(9), c(1);
  EXPECT_TRUE(random_rep(Quiver::linear(2), F2, 0, c).is_zero());
  EXPECT_EQ(random_rep(Quiver::linear(3), F2, 3, a), random_rep(Quiver::linear(3), F2, 3, b));
}

TEST(RandomRepTest, EveryDimensionOccurs) {
  std::mt19937_64 rng(2);
  int seen[2] = {0, 0};
  for (int i = 0; i < 1000; ++i) ++seen[random_rep(Quiver::one_vertex(), F2, 1, rng).dim(0)];
  EXPECT_GT(seen[0], 0);
  EXPECT_GT(seen[1], 0);
}
