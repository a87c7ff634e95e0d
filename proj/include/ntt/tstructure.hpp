#pragma once

// Integer shifts t_n of the standard t-structure:
//   C>=0(t_n) = {X : H_k(X) = 0 for k < n},  C<0(t_n) = {X : H_k(X) = 0 for k >= n}.

#include "ntt/complex.hpp"

namespace ntt {

enum class TruncationKind {
  good,
  brutal,  // stupid truncation; only used to inject faults into the suite
};

struct TStructure {
  int n = 0;
  TruncationKind kind = TruncationKind::good;

  TStructure shifted(int k) const { return {n + k, kind}; }
  bool operator==(const TStructure&) const = default;
};

bool in_coaisle(const ComplexPtr& x, const TStructure& t);  // C>=0
bool in_aisle(const ComplexPtr& x, const TStructure& t);    // C<0
bool heart_contains(const ComplexPtr& x, const TStructure& t);

/// A truncation together with the data needed to truncate maps: at the cut
/// degree n, `cut` is the inclusion of ker d_n (ge side) or the section of
/// X_n -> X_n / ker d_n (lt side), and `cut_inverse` its one-sided inverse.
struct Truncation {
  ComplexPtr original;
  ComplexPtr object;
  ChainMap map;  // iota: tau_ge X -> X, or pi: X -> tau_lt X
  TStructure t;
  std::vector<Matrix> cut;
  std::vector<Matrix> cut_inverse;
};

Truncation truncate_ge(const ComplexPtr& x, const TStructure& t);
Truncation truncate_lt(const ComplexPtr& x, const TStructure& t);

ChainMap truncate_map_ge(const Truncation& source, const Truncation& target, const ChainMap& f);
ChainMap truncate_map_lt(const Truncation& source, const Truncation& target, const ChainMap& f);
ChainMap truncate_map_ge(const ChainMap& f, const TStructure& t);
ChainMap truncate_map_lt(const ChainMap& f, const TStructure& t);

class HeartMorphism {
 public:
  /// Throws std::invalid_argument unless both ends lie in the heart of t.
  HeartMorphism(ChainMap map, TStructure t);

  const ChainMap& map() const { return map_; }
  const TStructure& t() const { return t_; }
  const ComplexPtr& source() const { return map_.source(); }
  const ComplexPtr& target() const { return map_.target(); }

 private:
  ChainMap map_;
  TStructure t_;
};

/// tau_>=n fib(f) -> X.
HeartMorphism heart_kernel(const HeartMorphism& f);
/// Y -> tau_<n+1 cofib(f).
HeartMorphism heart_cokernel(const HeartMorphism& f);
/// Kernel of the cokernel, a map into Y.
HeartMorphism heart_image(const HeartMorphism& f);
/// Cokernel of the kernel, a map out of X.
HeartMorphism heart_coimage(const HeartMorphism& f);

/// The canonical comparison between coimage and image. Both are modelled
/// inside N = tau_>=n tau_<n+1, where the comparison is an honest chain map:
///   coim <-(coimage_leg)- N(coim) -(comparison)-> N(fib q) <-(image_leg)- im
/// with q: Y -> coker f. The two legs are quasi-isomorphisms by construction.
struct HeartComparison {
  HeartMorphism coimage;
  HeartMorphism image;
  ChainMap comparison;
  ChainMap coimage_leg;
  ChainMap image_leg;

  bool is_isomorphism() const;
};

HeartComparison heart_comparison(const HeartMorphism& f);

}  // namespace ntt
