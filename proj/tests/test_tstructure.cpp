#include <gtest/gtest.h>

#include <random>

#include "ntt/hom.hpp"
#include "ntt/tstructure.hpp"
#include "support.hpp"

using namespace ntt;
using namespace ntt::test;

namespace {

const PrimeField F2(2), F3(3);

ComplexPtr heart_object(std::mt19937_64& rng, QuiverPtr q, PrimeField f, int n) {
  ComplexPtr x = random_complex({q, f, n - 1, n + 1, 3}, rng);
  return truncate_ge(truncate_lt(x, TStructure{n + 1}).object, TStructure{n}).object;
}

// Intertwiners g: A -> B with phi o g = 0, counted by enumeration.
std::size_t brute_kernel_of_postcomposition(const QuiverRep& a, const RepMap& phi) {
  const QuiverRep& b = phi.source();
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  std::size_t n = 0;
  for (std::size_t v = 0; v < a.dims().size(); ++v) {
    shapes.emplace_back(b.dim(v), a.dim(v));
    n += b.dim(v) * a.dim(v);
  }
  std::size_t count = 0;
  for_each_vector(a.field().p(), n, [&](const auto& flat) {
    auto g = unflatten(a.field(), shapes, flat);
    if (!commutes(a, b, g)) return;
    for (std::size_t v = 0; v < g.size(); ++v)
      if (!(phi.component(v) * g[v]).is_zero()) return;
    ++count;
  });
  return log_p(count, a.field().p());
}

}  // namespace

TEST(AisleTest, Examples) {
  ComplexPtr zero = Complex::zero(Quiver::one_vertex(), F2);
  ComplexPtr s = sphere(F2, 0);
  ComplexPtr acyclic = chain(F2, 3, {1, 1}, {mat(F2, 1, 1, {1})});
  TStructure t0{0};
  EXPECT_TRUE(in_coaisle(zero, t0) && in_aisle(zero, t0));
  EXPECT_TRUE(in_coaisle(s, t0));
  EXPECT_FALSE(in_aisle(s, t0));
  EXPECT_TRUE(in_coaisle(acyclic, t0) && in_aisle(acyclic, t0));
  EXPECT_EQ(t0.shifted(1), TStructure{1});
}

TEST(TruncateTest, GeExamples) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng() % 5) - 2;
    TStructure t{n};
    ComplexPtr x = random_complex({Quiver::linear(2), F3, -3, 3, 3}, rng);
    Truncation ge = truncate_ge(x, t);
    for (int k = -4; k <= 4; ++k)
      EXPECT_EQ(homology_dims(ge.object, k), (k >= n ? homology_dims(x, k) : std::vector<std::size_t>(2, 0)));
    EXPECT_EQ(is_quasi_iso(ge.map), in_coaisle(x, t));
    EXPECT_TRUE(truncate_ge(Complex::concentrated(random_rep(Quiver::linear(2), F3, 2, rng), n - 1), t).object->is_zero());
  }
}

TEST(TruncateTest, LtExamples) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng() % 5) - 2;
    TStructure t{n};
    ComplexPtr x = random_complex({Quiver::linear(2), F2, -3, 3, 3}, rng);
    Truncation lt = truncate_lt(x, t);
    for (int k = -4; k <= 4; ++k)
      EXPECT_EQ(homology_dims(lt.object, k), (k < n ? homology_dims(x, k) : std::vector<std::size_t>(2, 0)));
    EXPECT_EQ(is_quasi_iso(lt.map), in_aisle(x, t));
    EXPECT_TRUE(is_acyclic(truncate_lt(truncate_ge(x, t).object, t).object));
  }
}

TEST(TruncateTest, FiberSequenceIsPullout) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    TStructure t{static_cast<int>(rng() % 3) - 1};
    ComplexPtr x = random_complex({Quiver::linear(2), F3, -2, 2, 3}, rng);
    Truncation ge = truncate_ge(x, t), lt = truncate_lt(x, t);
    ComplexPtr zero = Complex::zero(x->quiver(), F3);
    ChainMap composite = compose(lt.map, ge.map);
    EXPECT_TRUE(composite.is_zero());
    CommutingSquare sq = CommutingSquare::strict(ge.map, ChainMap::zero(ge.object, zero), lt.map,
                                                 ChainMap::zero(zero, lt.object));
    EXPECT_TRUE(is_pullout(sq));
  }
}

TEST(TruncateMapTest, IdentityZeroAndFunctoriality) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    TStructure t{static_cast<int>(rng() % 3) - 1};
    auto q = Quiver::linear(2);
    ComplexPtr x = random_complex({q, F2, -2, 2, 3}, rng), y = random_complex({q, F2, -2, 2, 3}, rng),
               z = random_complex({q, F2, -2, 2, 3}, rng);
    EXPECT_EQ(truncate_map_ge(ChainMap::identity(x), t), ChainMap::identity(truncate_ge(x, t).object));
    EXPECT_EQ(truncate_map_lt(ChainMap::identity(x), t), ChainMap::identity(truncate_lt(x, t).object));
    EXPECT_TRUE(truncate_map_ge(ChainMap::zero(x, y), t).is_zero());
    EXPECT_TRUE(truncate_map_lt(ChainMap::zero(x, y), t).is_zero());
    ChainMap f = random_chain_map(x, y, rng), g = random_chain_map(y, z, rng);
    EXPECT_EQ(truncate_map_ge(compose(g, f), t), compose(truncate_map_ge(g, t), truncate_map_ge(f, t)));
    EXPECT_EQ(truncate_map_lt(compose(g, f), t), compose(truncate_map_lt(g, t), truncate_map_lt(f, t)));
    // Naturality of the structure maps.
    EXPECT_EQ(compose(truncate_ge(y, t).map, truncate_map_ge(f, t)), compose(f, truncate_ge(x, t).map));
    EXPECT_EQ(compose(truncate_map_lt(f, t), truncate_lt(x, t).map), compose(truncate_lt(y, t).map, f));
  }
}

TEST(HeartTest, Membership) {
  std::mt19937_64 rng(5);
  ComplexPtr s = sphere(F2, 2);
  EXPECT_TRUE(heart_contains(s, TStructure{2}));
  EXPECT_FALSE(heart_contains(shift(s, 1), TStructure{2}));
  for (int trial = 0; trial < 20; ++trial) EXPECT_TRUE(heart_contains(heart_object(rng, Quiver::linear(2), F3, 1), TStructure{1}));
  EXPECT_THROW(HeartMorphism(ChainMap::identity(shift(s, 1)), TStructure{2}), std::invalid_argument);
}

TEST(HeartTest, KernelAndCokernelExamples) {
  std::mt19937_64 rng(6);
  TStructure t{0};
  ComplexPtr a = heart_object(rng, Quiver::linear(2), F3, 0);
  while (a->is_zero() || is_acyclic(a)) a = heart_object(rng, Quiver::linear(2), F3, 0);
  HeartMorphism id(ChainMap::identity(a), t), zero(ChainMap::zero(a, a), t);
  EXPECT_TRUE(is_acyclic(heart_kernel(id).source()));
  EXPECT_TRUE(is_acyclic(heart_cokernel(id).target()));
  EXPECT_TRUE(is_quasi_iso(heart_kernel(zero).map()));
  EXPECT_TRUE(is_quasi_iso(heart_cokernel(zero).map()));
  EXPECT_TRUE(is_acyclic(heart_image(zero).source()));
  EXPECT_TRUE(is_quasi_iso(heart_coimage(id).map()));
}

TEST(HeartTest, KernelsMatchRepresentationLevel) {
  std::mt19937_64 rng(7);
  for (PrimeField f : {F2, F3})
    for (int trial = 0; trial < 30; ++trial) {
      const int n = static_cast<int>(rng() % 3) - 1;
      TStructure t{n};
      ComplexPtr a = heart_object(rng, Quiver::linear(2), f, n), b = heart_object(rng, Quiver::linear(2), f, n);
      HeartMorphism m(random_chain_map(a, b, rng), t);
      RepMap hf = homology_map(m.map(), n);
      EXPECT_EQ(homology_dims(heart_kernel(m).source(), n), rep_kernel(hf).object.dims());
      EXPECT_EQ(homology_dims(heart_cokernel(m).target(), n), rep_cokernel(hf).object.dims());
      HeartComparison c = heart_comparison(m);
      EXPECT_TRUE(c.is_isomorphism());
      EXPECT_TRUE(is_quasi_iso(c.coimage_leg));
      EXPECT_TRUE(is_quasi_iso(c.image_leg));
    }
}

TEST(HeartTest, KernelUniversalProperty) {
  // For every heart object T, maps T -> ker f correspond to maps g: T -> A
  // with f o g = 0. Left side: H_0 of the derived Hom complex. Right side:
  // enumeration of intertwiners on H_n.
  std::mt19937_64 rng(8);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng() % 3) - 1;
    TStructure t{n};
    auto q = Quiver::linear(2);
    ComplexPtr a = heart_object(rng, q, F2, n), b = heart_object(rng, q, F2, n), s = heart_object(rng, q, F2, n);
    HeartMorphism m(random_chain_map(a, b, rng), t);
    HeartMorphism k = heart_kernel(m);
    const QuiverRep hs = homology(s, n);
    const RepMap hf = homology_map(m.map(), n);
    if (hs.total_dim() * homology(a, n).total_dim() > 12) continue;
    EXPECT_EQ(derived_hom(s, k.source()).homology_dim(0), brute_kernel_of_postcomposition(hs, hf));
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(HeartTest, MonoHasCoimageEqualToSource) {
  std::mt19937_64 rng(9);
  TStructure t{0};
  auto q = Quiver::linear(2);
  ComplexPtr a = heart_object(rng, q, F3, 0);
  Pushout sum = homotopy_pushout(ChainMap::zero(Complex::zero(q, F3), a),
                                 ChainMap::zero(Complex::zero(q, F3), heart_object(rng, q, F3, 0)));
  HeartMorphism mono(sum.first, t);
  EXPECT_TRUE(is_quasi_iso(heart_coimage(mono).map()));
}
