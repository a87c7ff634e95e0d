#include <gtest/gtest.h>

#include <random>

#include "ntt/hom.hpp"
#include "support.hpp"

using namespace ntt;
using namespace ntt::test;

namespace {

const PrimeField F2(2), F3(3);

ComplexPtr acyclic_pair(PrimeField f) { return chain(f, 0, {1, 1}, {mat(f, 1, 1, {1})}); }

ComplexPtr random_x(std::mt19937_64& rng, QuiverPtr q, PrimeField f, int lo = -2, int hi = 2) {
  return random_complex({q, f, lo, hi, 3}, rng);
}

}  // namespace

TEST(ComplexTest, RejectsNonzeroSquare) {
  EXPECT_THROW(chain(F2, 0, {1, 1, 1}, {mat(F2, 1, 1, {1}), mat(F2, 1, 1, {1})}), std::invalid_argument);
}

TEST(ComplexTest, TrimsZeroEnds) {
  ComplexPtr x = chain(F2, -3, {0, 1, 0}, {Matrix(F2, 0, 1), Matrix(F2, 1, 0)});
  EXPECT_EQ(x->lo(), -2);
  EXPECT_EQ(x->hi(), -2);
}

TEST(HomologyTest, ConeOfIdentityIsAcyclic) {
  ComplexPtr x = acyclic_pair(F2);
  for (int n = -1; n <= 2; ++n) EXPECT_TRUE(homology(x, n).is_zero());
  EXPECT_TRUE(is_acyclic(x));
}

TEST(HomologyTest, ZeroDifferentialsGiveTerms) {
  ComplexPtr x = chain(F3, 0, {2, 1}, {Matrix(F3, 2, 1)});
  EXPECT_EQ(homology_dims(x, 0), (std::vector<std::size_t>{2}));
  EXPECT_EQ(homology_dims(x, 1), (std::vector<std::size_t>{1}));
}

TEST(HomologyTest, ZeroMultiplicationOverF3) {
  ComplexPtr x = chain(F3, 0, {1, 1, 1}, {mat(F3, 1, 1, {0}), mat(F3, 1, 1, {0})});
  for (int n = 0; n <= 2; ++n) EXPECT_EQ(homology(x, n).total_dim(), 1u);
}

TEST(HomologyTest, MatchesEnumeration) {
  std::mt19937_64 rng(4);
  for (auto q : {Quiver::one_vertex(), Quiver::linear(2)})
    for (PrimeField f : {F2, F3})
      for (int trial = 0; trial < 15; ++trial) {
        ComplexPtr x = random_complex({q, f, -1, 1, 2}, rng);
        for (int n = -1; n <= 1; ++n) EXPECT_EQ(homology(x, n).total_dim(), brute_homology_dim(x, n));
      }
}

TEST(ShiftTest, ZeroInverseAndHomology) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexPtr x = random_x(rng, Quiver::linear(2), F3);
    EXPECT_TRUE(same_complex(shift(x, 0), x));
    EXPECT_TRUE(same_complex(shift(shift(x, 1), -1), x));
    for (int k : {-2, 1, 3})
      for (int n = -4; n <= 5; ++n) EXPECT_EQ(homology_dims(shift(x, k), n), homology_dims(x, n - k));
  }
}

TEST(ShiftTest, DifferentialSign) {
  ComplexPtr x = chain(F3, 0, {1, 1}, {mat(F3, 1, 1, {1})});
  EXPECT_EQ(shift(x, 1)->diff(2, 0), mat(F3, 1, 1, {2}));
  EXPECT_EQ(shift(x, 2)->diff(3, 0), mat(F3, 1, 1, {1}));
}

TEST(ConeTest, Examples) {
  std::mt19937_64 rng(8);
  ComplexPtr x = random_x(rng, Quiver::linear(2), F2);
  ComplexPtr zero = Complex::zero(x->quiver(), F2);
  EXPECT_TRUE(is_acyclic(cone(ChainMap::identity(x)).object));
  EXPECT_TRUE(same_complex(cone(ChainMap::zero(zero, x)).object, x));
  EXPECT_TRUE(same_complex(cone(ChainMap::zero(x, zero)).object, shift(x, 1)));
  EXPECT_TRUE(same_complex(fib(ChainMap::zero(x, zero)).object, x));
}

TEST(ConeTest, FiberIsShiftedCofiber) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexPtr x = random_x(rng, Quiver::linear(2), F3), y = random_x(rng, Quiver::linear(2), F3);
    ChainMap f = random_chain_map(x, y, rng);
    ComplexPtr a = shift(fib(f).object, 1), b = cone(f).object;
    ASSERT_EQ(a->lo(), b->lo());
    for (int n = a->lo(); n <= a->hi(); ++n) EXPECT_EQ(a->term(n), b->term(n));
    EXPECT_TRUE(is_acyclic(cone(f).object) == is_quasi_iso(f));
  }
}

TEST(ConeTest, TriangleComposites) {
  std::mt19937_64 rng(12);
  ComplexPtr x = random_x(rng, Quiver::linear(2), F3), y = random_x(rng, Quiver::linear(2), F3);
  Triangle t = cone_triangle(random_chain_map(x, y, rng));
  EXPECT_TRUE(homotopic(compose(t.g, t.f), ChainMap::zero(x, t.g.target())).has_value());
  EXPECT_TRUE(homotopic(compose(t.h, t.g), ChainMap::zero(y, t.h.target())).has_value());
}

TEST(QuasiIsoTest, Examples) {
  ComplexPtr s = sphere(F2, 0);
  ComplexPtr zero = Complex::zero(s->quiver(), F2);
  EXPECT_TRUE(is_quasi_iso(ChainMap::identity(s)));
  EXPECT_FALSE(is_quasi_iso(ChainMap::zero(zero, s)));
  EXPECT_TRUE(is_quasi_iso(ChainMap::zero(zero, acyclic_pair(F2))));
}

TEST(PullbackTest, IdentityAndLooping) {
  std::mt19937_64 rng(14);
  auto q = Quiver::linear(2);
  ComplexPtr x = random_x(rng, q, F3), z = random_x(rng, q, F3);
  ChainMap f = random_chain_map(x, z, rng);
  Pullback pb = homotopy_pullback(f, ChainMap::identity(z));
  EXPECT_TRUE(is_quasi_iso(pb.first));
  ComplexPtr zero = Complex::zero(q, F3);
  Pullback loop = homotopy_pullback(ChainMap::zero(zero, z), ChainMap::zero(zero, z));
  EXPECT_TRUE(same_complex(loop.object, shift(z, -1)));
  for (int n = pb.object->lo(); n <= pb.object->hi(); ++n)
    for (std::size_t v = 0; v < 2; ++v)
      EXPECT_EQ(pb.object->dim(n, v), x->dim(n, v) + z->dim(n, v) + z->dim(n + 1, v));
}

TEST(PushoutTest, IdentityAndSuspension) {
  std::mt19937_64 rng(16);
  auto q = Quiver::linear(2);
  ComplexPtr w = random_x(rng, q, F2), y = random_x(rng, q, F2);
  Pushout po = homotopy_pushout(ChainMap::identity(w), random_chain_map(w, y, rng));
  EXPECT_TRUE(is_quasi_iso(po.second));
  ComplexPtr zero = Complex::zero(q, F2);
  Pushout susp = homotopy_pushout(ChainMap::zero(w, zero), ChainMap::zero(w, zero));
  EXPECT_TRUE(same_complex(susp.object, shift(w, 1)));
  for (int n = -3; n <= 4; ++n) EXPECT_EQ(homology_dims(susp.object, n), homology_dims(w, n - 1));
}

TEST(PulloutTest, IdentitySquareAndBrokenSquare) {
  std::mt19937_64 rng(18);
  ComplexPtr x = random_x(rng, Quiver::one_vertex(), F2);
  ChainMap id = ChainMap::identity(x);
  EXPECT_TRUE(is_pullout(CommutingSquare::strict(id, id, id, id)));
  // Enlarge the corner by a nonzero summand that nothing maps to.
  ComplexPtr s = sphere(F2, 0);
  Pushout sum = homotopy_pushout(ChainMap::zero(Complex::zero(x->quiver(), F2), x),
                                 ChainMap::zero(Complex::zero(x->quiver(), F2), s));
  CommutingSquare bad = CommutingSquare::strict(id, id, sum.first, sum.first);
  PulloutTests t = pullout_tests(bad);
  EXPECT_FALSE(t.cartesian);
  EXPECT_FALSE(t.cocartesian);
}

TEST(PulloutTest, FiberSquaresAndAgreement) {
  std::mt19937_64 rng(20);
  for (PrimeField f : {F2, F3})
    for (int trial = 0; trial < 20; ++trial) {
      auto q = trial % 2 ? Quiver::linear(2) : Quiver::one_vertex();
      ComplexPtr x = random_x(rng, q, f), y = random_x(rng, q, f), z = random_x(rng, q, f);
      ChainMap g = random_chain_map(x, y, rng);
      Fiber fb = fib(g);
      ComplexPtr zero = Complex::zero(q, f);
      CommutingSquare sq{fb.projection, ChainMap::zero(fb.object, zero), g, ChainMap::zero(zero, y),
                         reverse(fb.null)};
      EXPECT_TRUE(is_pullout(sq));
      CommutingSquare rnd = CommutingSquare::strict(ChainMap::zero(x, y), ChainMap::zero(x, z),
                                                    ChainMap::zero(y, zero), ChainMap::zero(z, zero));
      PulloutTests t = pullout_tests(rnd);
      EXPECT_EQ(t.cartesian, t.cocartesian);
    }
}

TEST(HomotopyTest, Examples) {
  std::mt19937_64 rng(22);
  ComplexPtr s = sphere(F3, 0);
  EXPECT_TRUE(homotopic(ChainMap::identity(s), ChainMap::identity(s)).has_value());
  EXPECT_FALSE(homotopic(ChainMap::identity(s), ChainMap::zero(s, s)).has_value());
  EXPECT_THROW(witness_between(ChainMap::identity(s), ChainMap::zero(s, s)), std::logic_error);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexPtr x = random_x(rng, Quiver::linear(2), F3), y = random_x(rng, Quiver::linear(2), F3);
    ChainMap f = random_chain_map(x, y, rng);
    GradedMap h = random_graded_map(x, y, 1, rng);
    ChainMap g = f + ChainMap(h.boundary());
    auto found = homotopic(f, g);
    ASSERT_TRUE(found);
    EXPECT_EQ(found->from(), f);
    EXPECT_EQ(found->to(), g);
  }
}

TEST(ChainMapTest, CompositionAndRandomMaps) {
  std::mt19937_64 rng(24);
  EXPECT_TRUE(random_complex({Quiver::linear(2), F2, -2, 2, 0}, rng)->is_zero());
  for (int trial = 0; trial < 1000; ++trial) {
    auto q = trial % 2 ? Quiver::linear(2) : Quiver::one_vertex();
    ComplexPtr x = random_complex({q, F3, -1, 1, 2}, rng), y = random_complex({q, F3, -1, 1, 2}, rng);
    ChainMap f = random_chain_map(x, y, rng);
    EXPECT_EQ(compose(f, ChainMap::identity(x)), f);
    EXPECT_NO_THROW(ChainMap(f.graded()));
  }
}
