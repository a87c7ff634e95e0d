#pragma once

// Bounded chain complexes of quiver representations: the stable model.
//
// Conventions (homological grading):
//   d_n : X_n -> X_{n-1}
//   X[k]_n = X_{n-k}, differential (-1)^k d
//   cone(f: X -> Y)_n = X_{n-1} (+) Y_n,  d(x, y) = (-dx, fx + dy)
//   fib(f) = cone(f)[-1],                 d(x, y) = (dx, -fx - dy)
//   a graded map of degree k sends X_n to Y_{n+k}; its boundary is
//   d o phi - (-1)^k phi o d.
// A homotopy h from f to g satisfies g - f = dh + hd.

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "ntt/linalg.hpp"
#include "ntt/quiver.hpp"

namespace ntt {

class Complex;
using ComplexPtr = std::shared_ptr<const Complex>;

class Complex {
 public:
  /// differentials[k] holds d_{lo+k+1} per vertex. Zero terms at either end
  /// are trimmed, so lo()/hi() always describe the minimal support. Throws
  /// std::invalid_argument when d o d != 0 or a differential is not an
  /// intertwiner.
  Complex(QuiverPtr quiver, PrimeField field, int lo, std::vector<QuiverRep> terms,
          std::vector<std::vector<Matrix>> differentials);

  static ComplexPtr make(QuiverPtr quiver, PrimeField field, int lo, std::vector<QuiverRep> terms,
                         std::vector<std::vector<Matrix>> differentials);
  static ComplexPtr zero(QuiverPtr quiver, PrimeField field);
  static ComplexPtr concentrated(const QuiverRep& rep, int degree);

  const QuiverPtr& quiver() const { return quiver_; }
  const PrimeField& field() const { return field_; }
  std::size_t vertex_count() const { return quiver_->vertex_count(); }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool is_zero() const { return terms_.empty(); }
  bool in_support(int n) const { return n >= lo_ && n <= hi_; }

  const QuiverRep& term(int n) const { return in_support(n) ? terms_[n - lo_] : zero_rep_; }
  std::size_t dim(int n, std::size_t v) const { return in_support(n) ? terms_[n - lo_].dim(v) : 0; }
  std::size_t total_dim() const;
  /// d_n : X_n -> X_{n-1} at vertex v.
  const Matrix& diff(int n, std::size_t v) const;
  RepMap differential(int n) const;

  bool operator==(const Complex& o) const;

 private:
  QuiverPtr quiver_;
  PrimeField field_;
  int lo_ = 0;
  int hi_ = -1;
  std::vector<QuiverRep> terms_;
  std::vector<std::vector<Matrix>> d_;  // d_n for n in [lo, hi+1]
  QuiverRep zero_rep_;
  Matrix zero_matrix_;
};

bool same_complex(const ComplexPtr& a, const ComplexPtr& b);

/// A family of intertwiners X_n -> Y_{n+degree}.
class GradedMap {
 public:
  using Generator = std::function<Matrix(int n, std::size_t v)>;

  /// components[n - source.lo()][v]; validated against term dimensions and
  /// the intertwiner law.
  GradedMap(ComplexPtr source, ComplexPtr target, int degree, std::vector<std::vector<Matrix>> components);

  static GradedMap zero(ComplexPtr source, ComplexPtr target, int degree);
  static GradedMap build(ComplexPtr source, ComplexPtr target, int degree, const Generator& gen);
  /// The differential of x as a degree -1 self-map.
  static GradedMap differential(const ComplexPtr& x);

  const ComplexPtr& source() const { return source_; }
  const ComplexPtr& target() const { return target_; }
  int degree() const { return degree_; }
  Matrix component(int n, std::size_t v) const;

  bool is_zero() const;
  GradedMap boundary() const;
  GradedMap scaled(std::int64_t c) const;
  /// Same matrices, viewed as a map into/out of other complexes with the
  /// same terms up to a degree offset (used to reinterpret maps into shifts).
  GradedMap reinterpret(ComplexPtr source, ComplexPtr target, int degree) const;

  GradedMap operator+(const GradedMap& o) const;
  GradedMap operator-(const GradedMap& o) const;
  GradedMap operator-() const;
  bool operator==(const GradedMap& o) const;

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  int degree_;
  std::vector<std::vector<Matrix>> comps_;
};

GradedMap compose(const GradedMap& g, const GradedMap& f);

class ChainMap {
 public:
  /// Throws std::invalid_argument unless degree 0 and d o f = f o d.
  explicit ChainMap(GradedMap map);

  static ChainMap identity(const ComplexPtr& x);
  static ChainMap zero(const ComplexPtr& source, const ComplexPtr& target);

  const GradedMap& graded() const { return map_; }
  const ComplexPtr& source() const { return map_.source(); }
  const ComplexPtr& target() const { return map_.target(); }
  Matrix component(int n, std::size_t v) const { return map_.component(n, v); }
  RepMap at(int n) const;
  bool is_zero() const { return map_.is_zero(); }

  bool operator==(const ChainMap& o) const { return map_ == o.map_; }

 private:
  GradedMap map_;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap operator+(const ChainMap& a, const ChainMap& b);
ChainMap operator-(const ChainMap& a, const ChainMap& b);
ChainMap operator-(const ChainMap& a);

class Homotopy {
 public:
  /// Throws std::invalid_argument unless to - from = dh + hd.
  Homotopy(ChainMap from, ChainMap to, GradedMap h);

  static Homotopy zero(const ChainMap& f);

  const ChainMap& from() const { return from_; }
  const ChainMap& to() const { return to_; }
  const GradedMap& map() const { return h_; }

 private:
  ChainMap from_;
  ChainMap to_;
  GradedMap h_;
};

/// h o f : from o f => to o f
Homotopy precompose(const Homotopy& h, const ChainMap& f);
/// g o h : g o from => g o to
Homotopy postcompose(const ChainMap& g, const Homotopy& h);
/// f => g => k
Homotopy concatenate(const Homotopy& first, const Homotopy& second);
Homotopy reverse(const Homotopy& h);
/// The zero homotopy when from == to exactly, otherwise a solved one;
/// throws std::logic_error when the maps are not chain homotopic.
Homotopy witness_between(const ChainMap& from, const ChainMap& to);

/// Direct sum of shifted complexes with off-diagonal perturbation terms.
/// Summand i contributes (C_i)[s_i]; a twist from j to i is a graded map
/// C_j -> C_i of degree s_j - s_i - 1 added to the differential.
class TwistedSum {
 public:
  struct Summand {
    ComplexPtr complex;
    int shift;
  };
  struct Twist {
    std::size_t to;
    std::size_t from;
    GradedMap map;
  };

  TwistedSum(std::vector<Summand> summands, std::vector<Twist> twists);

  const ComplexPtr& total() const { return total_; }
  const std::vector<Summand>& summands() const { return summands_; }
  /// C_i -> total, degree s_i.
  GradedMap inject(std::size_t i) const;
  /// total -> C_i, degree -s_i.
  GradedMap project(std::size_t i) const;

 private:
  std::size_t offset(int n, std::size_t v, std::size_t i) const;

  std::vector<Summand> summands_;
  ComplexPtr total_;
};

ComplexPtr shift(const ComplexPtr& x, int k);
ChainMap shift(const ChainMap& f, int k);

struct Cone {
  std::shared_ptr<const TwistedSum> sum;  // summands: (X, 1), (Y, 0)
  ComplexPtr object;
  ChainMap into;       // Y -> cone
  ChainMap outof;      // cone -> X[1]
  Homotopy into_null;  // 0 => into o f
};

struct Fiber {
  std::shared_ptr<const TwistedSum> sum;  // summands: (X, 0), (Y, -1)
  ComplexPtr object;
  ChainMap projection;  // fib -> X
  Homotopy null;        // 0 => f o projection
  ChainMap map;         // the f it is the fiber of
};

Cone cone(const ChainMap& f);
inline Cone cofib(const ChainMap& f) { return cone(f); }
Fiber fib(const ChainMap& f);

/// Given u: A -> X and h: 0 => g o u, the induced A -> fib(g).
ChainMap lift_to_fiber(const Fiber& fiber, const ChainMap& u, const Homotopy& h);
/// Given v: X -> B and h: 0 => v o k, the induced cofib(k) -> B.
ChainMap descend_from_cofiber(const Cone& cofiber, const ChainMap& v, const Homotopy& h);

struct Pullback {
  std::shared_ptr<const TwistedSum> sum;  // summands: (X, 0), (Y, 0), (Z, -1)
  ComplexPtr object;
  ChainMap first;   // W -> X
  ChainMap second;  // W -> Y
  Homotopy witness; // f o first => g o second
  ChainMap f, g;
};

struct Pushout {
  std::shared_ptr<const TwistedSum> sum;  // summands: (W, 1), (X, 0), (Y, 0)
  ComplexPtr object;
  ChainMap first;   // X -> Q
  ChainMap second;  // Y -> Q
  Homotopy witness; // first o a => second o b
  ChainMap a, b;
};

/// W = fib(X (+) Y -> Z, (x, y) -> f x - g y).
Pullback homotopy_pullback(const ChainMap& f, const ChainMap& g);
/// Q = cone(W -> X (+) Y, w -> (a w, -b w)).
Pushout homotopy_pushout(const ChainMap& a, const ChainMap& b);

/// Given u: A -> X, v: A -> Y and h: f o u => g o v, the induced A -> W.
ChainMap pullback_lift(const Pullback& pb, const ChainMap& u, const ChainMap& v, const Homotopy& h);
/// Given u: X -> B, v: Y -> B and h: u o a => v o b, the induced Q -> B.
ChainMap pushout_descend(const Pushout& po, const ChainMap& u, const ChainMap& v, const Homotopy& h);

///   W --top--> X
///   |          |
///  left      right
///   v          v
///   Y -bottom-> Z       witness: right o top => bottom o left
struct CommutingSquare {
  ChainMap top;
  ChainMap left;
  ChainMap right;
  ChainMap bottom;
  Homotopy witness;

  /// Throws std::invalid_argument when shapes or the witness do not match.
  void validate() const;
  /// Strictly commuting square with the zero witness.
  static CommutingSquare strict(ChainMap top, ChainMap left, ChainMap right, ChainMap bottom);
};

/// Outer square of two squares sharing the right edge of `first` as the
/// left edge of `second`.
CommutingSquare paste_horizontal(const CommutingSquare& first, const CommutingSquare& second);

struct PulloutTests {
  bool cartesian;    // W -> homotopy_pullback(right, bottom) is a quasi-iso
  bool cocartesian;  // homotopy_pushout(top, left) -> Z is a quasi-iso
};

PulloutTests pullout_tests(const CommutingSquare& sq);
bool is_pullout(const CommutingSquare& sq);

/// X -> Y -> Z -> X[1] with nullhomotopies of the consecutive composites.
struct Triangle {
  ChainMap f, g, h;
  Homotopy gf_null;  // 0 => g o f
  Homotopy hg_null;  // 0 => h o g
};
Triangle cone_triangle(const ChainMap& f);

QuiverRep homology(const ComplexPtr& x, int n);
RepMap homology_map(const ChainMap& f, int n);
std::vector<std::size_t> homology_dims(const ComplexPtr& x, int n);
bool has_zero_homology(const ComplexPtr& x, int n);
bool is_acyclic(const ComplexPtr& x);
/// Smallest [a, b) containing all nonzero homology; absent if acyclic.
std::optional<std::pair<int, int>> homology_support(const ComplexPtr& x);
bool is_quasi_iso(const ChainMap& f);

}  // namespace ntt
