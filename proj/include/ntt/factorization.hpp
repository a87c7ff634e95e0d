#pragma once

// The torsion theory (E, M) attached to a t-structure, its factorization
// functor, orthogonality, normality and the checks built on top of them.

#include <optional>
#include <utility>
#include <vector>

#include "ntt/complex.hpp"
#include "ntt/tstructure.hpp"

namespace ntt {

/// E = {f : tau_<(f) is a quasi-iso}, M = {f : tau_>=(f) is a quasi-iso}.
struct TorsionTheory {
  TStructure t;

  bool in_E(const ChainMap& f) const;
  bool in_M(const ChainMap& f) const;
  /// 0/E, objects whose terminal arrow lies in E.
  bool in_T(const ComplexPtr& a) const;
  /// M/0, objects whose terminal arrow lies in M.
  bool in_F(const ComplexPtr& b) const;
};

enum class MorphismClass { E, M };

ChainMap initial_arrow(const ComplexPtr& a);   // 0 -> A
ChainMap terminal_arrow(const ComplexPtr& a);  // A -> 0

/// (RX, rho_X) = (tau_< X, pi) and (SX, sigma_X) = (tau_>= X, iota).
Truncation reflection(const ComplexPtr& x, const TorsionTheory& tt);
Truncation coreflection(const ComplexPtr& x, const TorsionTheory& tt);

struct KObject {
  Fiber fiber;          // fib(rho_X)
  ChainMap comparison;  // SX -> KX
};
struct QObject {
  Cone cofiber;         // cofib(sigma_X)
  ChainMap comparison;  // QX -> RX
};
KObject k_object(const ComplexPtr& x, const TorsionTheory& tt);
QObject q_object(const ComplexPtr& x, const TorsionTheory& tt);

struct NormalityReport {
  bool k_in_torsion = false;       // (1)
  bool q_in_torsion_free = false;  // (2)
  bool both = false;               // (3)
  bool q_matches_reflection = false;    // (4)
  bool k_matches_coreflection = false;  // (5)
  bool fiber_sequence = false;          // (6)

  bool all() const;
  bool consistent() const;
};
NormalityReport normality_report(const ComplexPtr& x, const TorsionTheory& tt);

struct Factorization {
  ChainMap f;
  ChainMap e;  // X -> C
  ChainMap m;  // C -> Y
  Homotopy witness;  // m o e => f
  Pullback pullback;  // C = tau_< X x_{tau_< Y} Y
};
Factorization factor(const ChainMap& f, const TorsionTheory& tt);

/// The square (SX -> X, tau_>=(f), e_f, SY -> C) of the factorization diagram.
CommutingSquare factorization_extra_square(const Factorization& fac, const TorsionTheory& tt);

/// H_k of the derived Hom(cofib e, fib m) vanishes for every k >= 0.
bool is_orthogonal(const ChainMap& e, const ChainMap& m);

struct LiftingResult {
  bool exists = false;
  /// Homotopy classes of fillers form an affine space of this dimension.
  std::size_t class_dim = 0;
  /// p^class_dim when a filler exists, 0 otherwise; absent on overflow.
  std::optional<std::uint64_t> class_count;
  std::optional<ChainMap> filler;  // B -> X, precomposed with the resolution of B
};

/// Square with left edge e: A -> B, right edge m: X -> Y, top u: A -> X and
/// bottom v: B -> Y. Solves for a filler, its two triangle homotopies and
/// their coherence on raw matrix entries, then divides out the gauge
/// action; A and B are replaced by projective resolutions first.
LiftingResult solve_lifting(const CommutingSquare& sq);

/// All three 2-out-of-3 implications for the pair (f, g o f).
bool three_for_two_check(MorphismClass cls, const TorsionTheory& tt,
                         const std::vector<std::pair<ChainMap, ChainMap>>& pairs);
bool sator_check(const ComplexPtr& a, const TorsionTheory& tt);

struct SemiexactResult {
  bool comparison_quasi_iso = false;  // SY u_SX X -> RX x_RY Y
  bool unit_in_E = false;             // pulled-back unit RX x_RY Y -> RX
  bool ok() const { return comparison_quasi_iso && unit_in_E; }
};
SemiexactResult semiexact_check(const ChainMap& f, const TorsionTheory& tt);

/// Membership of f in E (resp. M) via truncations agrees with the route
/// through the factorization: f in E iff m_f is invertible, f in M iff e_f is.
bool roundtrip_morphism_check(const ChainMap& f, const TorsionTheory& tt);
/// X in C>=0 iff (0 -> X) in E, and X in C<0 iff (X -> 0) in M.
bool roundtrip_object_check(const ComplexPtr& x, const TorsionTheory& tt);

/// Pushout of e along g lies in E when e does.
bool pushout_closure_check(const ChainMap& e, const ChainMap& g, const TorsionTheory& tt);
/// Pullback of m along g lies in M when m does.
bool pullback_closure_check(const ChainMap& m, const ChainMap& g, const TorsionTheory& tt);
/// For n <= k, f in M(t_n) implies f in M(t_k).
bool antitone_check(const ChainMap& f, int n, int k, TruncationKind kind = TruncationKind::good);

}  // namespace ntt
