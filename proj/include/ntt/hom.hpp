#pragma once

// Hom complexes, homotopy solving, random generators and projective
// replacement.

#include <optional>
#include <random>

#include "ntt/complex.hpp"

namespace ntt {

/// Hom(X, Y) with Hom_k = prod_n Hom_rep(X_n, Y_{n+k}) and differential
/// D(phi) = d o phi - (-1)^k phi o d. Coordinates are taken in the
/// intertwiner bases of each Hom_rep(X_n, Y_{n+k}), concatenated by n.
class HomComplex {
 public:
  HomComplex(ComplexPtr source, ComplexPtr target);

  const ComplexPtr& source() const { return source_; }
  const ComplexPtr& target() const { return target_; }
  /// Degrees with a possibly nonzero term; empty range when lo() > hi().
  int lo() const { return lo_; }
  int hi() const { return hi_; }

  std::size_t dim(int k) const;
  /// D_k : Hom_k -> Hom_{k-1} as a dim(k-1) x dim(k) matrix.
  Matrix differential(int k) const;
  GradedMap element(int k, const Matrix& coords) const;
  Matrix coordinates(const GradedMap& phi) const;
  std::size_t homology_dim(int k) const;
  /// The Hom complex as a complex over the one-vertex quiver.
  ComplexPtr complex() const;

 private:
  const std::vector<HomSpace>& spaces(int k) const { return spaces_[k - lo_]; }

  ComplexPtr source_;
  ComplexPtr target_;
  int lo_ = 0;
  int hi_ = -1;
  std::vector<std::vector<HomSpace>> spaces_;  // [k - lo][n - source.lo]
};

ComplexPtr hom_complex(const ComplexPtr& x, const ComplexPtr& y);

/// A homotopy from f to g, when one exists.
std::optional<Homotopy> homotopic(const ChainMap& f, const ChainMap& g);

struct ComplexParams {
  QuiverPtr quiver;
  PrimeField field;
  int lo = 0;
  int hi = 0;
  std::size_t max_dim = 2;
};

/// Terms are random representations; d_{n+1} is a random intertwiner into
/// ker(d_n), so d o d = 0 by construction.
ComplexPtr random_complex(const ComplexParams& params, std::mt19937_64& rng);
Matrix random_vector(PrimeField field, std::size_t n, std::mt19937_64& rng);
/// Uniform element of the cycles of Hom_0(X, Y).
ChainMap random_chain_map(const ComplexPtr& x, const ComplexPtr& y, std::mt19937_64& rng);
GradedMap random_graded_map(const ComplexPtr& x, const ComplexPtr& y, int degree, std::mt19937_64& rng);

/// Degreewise standard projective resolution 0 -> P1(X) -> P0(X) -> X -> 0
/// of a complex of representations, totalized as cone(delta). The object is
/// a bounded complex of projectives, so chain homotopy classes of maps out
/// of it compute morphisms in the derived category.
struct ProjectiveReplacement {
  ComplexPtr original;
  ComplexPtr p0, p1;
  ChainMap delta;        // P1(X) -> P0(X)
  ChainMap epsilon;      // P0(X) -> X
  Cone cone;             // cone(delta)
  ComplexPtr object;     // cone.object
  ChainMap augmentation; // object -> X, a quasi-isomorphism
};

ProjectiveReplacement projective_replacement(const ComplexPtr& x);
/// The map pX -> pY induced by f; augmentation o p(f) = f o augmentation.
ChainMap replace_map(const ProjectiveReplacement& px, const ProjectiveReplacement& py, const ChainMap& f);

/// Hom(pX, Y), whose homology computes derived morphisms X -> Y[-k].
HomComplex derived_hom(const ComplexPtr& x, const ComplexPtr& y);

}  // namespace ntt
