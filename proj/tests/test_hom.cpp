#include <gtest/gtest.h>

#include <random>

#include "ntt/hom.hpp"
#include "ntt/linear_system.hpp"
#include "support.hpp"

using namespace ntt;
using namespace ntt::test;

namespace {
const PrimeField F2(2), F3(3);
}

TEST(HomComplexTest, FromZero) {
  ComplexPtr y = sphere(F2, 0, 2);
  HomComplex h(Complex::zero(y->quiver(), F2), y);
  for (int k = -3; k <= 3; ++k) EXPECT_EQ(h.homology_dim(k), 0u);
}

TEST(HomComplexTest, EndomorphismsOfSphere) {
  ComplexPtr s = sphere(F2, 0);
  EXPECT_EQ(HomComplex(s, s).homology_dim(0), 1u);
}

TEST(HomComplexTest, SphereAgainstShiftedSphere) {
  ComplexPtr s = sphere(F3, 0);
  for (int k = -2; k <= 2; ++k) {
    HomComplex h(s, shift(s, k));
    for (int n = -4; n <= 4; ++n) EXPECT_EQ(h.homology_dim(n) != 0, n == k) << "k=" << k << " n=" << n;
  }
}

TEST(HomComplexTest, DifferentialSquaresToZero) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto q = Quiver::linear(2);
    ComplexPtr x = random_complex({q, F3, -1, 1, 2}, rng), y = random_complex({q, F3, -1, 1, 2}, rng);
    HomComplex h(x, y);
    for (int k = h.lo() + 1; k <= h.hi(); ++k)
      EXPECT_TRUE((h.differential(k - 1) * h.differential(k)).is_zero());
  }
}

TEST(HomComplexTest, HomologyMatchesEnumeration) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (auto q : {Quiver::one_vertex(), Quiver::linear(2)})
    for (PrimeField f : {F2, F3})
      for (int trial = 0; trial < 40; ++trial) {
        ComplexPtr x = random_complex({q, f, -1, 0, 2}, rng), y = random_complex({q, f, -1, 0, 2}, rng);
        BruteHom brute(x, y);
        const double budget = f.p() == 2 ? 14 : 9;
        HomComplex h(x, y);
        for (int k = -1; k <= 1; ++k) {
          if (brute.ambient(k) > budget || brute.ambient(k + 1) > budget) continue;
          EXPECT_EQ(h.homology_dim(k), brute.homology_dim(k));
          EXPECT_EQ(homotopy_class_dim(x, y, k), brute.homology_dim(k));
          ++checked;
        }
      }
  EXPECT_GT(checked, 100);
}

TEST(HomComplexTest, CoordinatesRoundTrip) {
  std::mt19937_64 rng(7);
  auto q = Quiver::linear(2);
  ComplexPtr x = random_complex({q, F3, -1, 1, 3}, rng), y = random_complex({q, F3, -1, 1, 3}, rng);
  HomComplex h(x, y);
  for (int k = h.lo(); k <= h.hi(); ++k) {
    Matrix c = random_vector(F3, h.dim(k), rng);
    EXPECT_EQ(h.coordinates(h.element(k, c)), c);
  }
}

TEST(ProjectiveReplacementTest, AugmentationIsQuasiIso) {
  std::mt19937_64 rng(9);
  for (PrimeField f : {F2, F3})
    for (int trial = 0; trial < 20; ++trial) {
      ComplexPtr x = random_complex({Quiver::linear(3), f, -1, 1, 2}, rng);
      ProjectiveReplacement p = projective_replacement(x);
      EXPECT_TRUE(is_quasi_iso(p.augmentation));
    }
}

TEST(DerivedHomTest, DetectsExtensionsThatPlainHomMisses) {
  // 0 -> S2 -> P1 -> S1 -> 0 is exact; Ext^1(S1, S2) is one-dimensional.
  auto q = Quiver::linear(2);
  QuiverRep s1 = a2_rep(F2, 1, 0, Matrix(F2, 0, 1));
  QuiverRep s2 = a2_rep(F2, 0, 1, Matrix(F2, 1, 0));
  ComplexPtr a = Complex::concentrated(s1, 0), b = Complex::concentrated(s2, 0);
  EXPECT_EQ(HomComplex(a, shift(b, 1)).homology_dim(-1), 0u);
  EXPECT_EQ(derived_hom(a, shift(b, 1)).homology_dim(-1), 0u);
  EXPECT_EQ(derived_hom(a, shift(b, 1)).homology_dim(0), 1u);
  EXPECT_EQ(HomComplex(a, shift(b, 1)).homology_dim(0), 0u);
}
