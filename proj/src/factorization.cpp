#include "ntt/factorization.hpp"

#include <stdexcept>

#include "ntt/hom.hpp"
#include "ntt/linear_system.hpp"

namespace ntt {

bool TorsionTheory::in_E(const ChainMap& f) const { return is_quasi_iso(truncate_map_lt(f, t)); }
bool TorsionTheory::in_M(const ChainMap& f) const { return is_quasi_iso(truncate_map_ge(f, t)); }
bool TorsionTheory::in_T(const ComplexPtr& a) const { return in_E(terminal_arrow(a)); }
bool TorsionTheory::in_F(const ComplexPtr& b) const { return in_M(terminal_arrow(b)); }

ChainMap initial_arrow(const ComplexPtr& a) { return ChainMap::zero(Complex::zero(a->quiver(), a->field()), a); }
ChainMap terminal_arrow(const ComplexPtr& a) { return ChainMap::zero(a, Complex::zero(a->quiver(), a->field())); }

Truncation reflection(const ComplexPtr& x, const TorsionTheory& tt) { return truncate_lt(x, tt.t); }
Truncation coreflection(const ComplexPtr& x, const TorsionTheory& tt) { return truncate_ge(x, tt.t); }

KObject k_object(const ComplexPtr& x, const TorsionTheory& tt) {
  Truncation r = reflection(x, tt);
  Truncation s = coreflection(x, tt);
  Fiber k = fib(r.map);
  ChainMap rs = compose(r.map, s.map);
  ChainMap cmp = lift_to_fiber(k, s.map, witness_between(ChainMap::zero(rs.source(), rs.target()), rs));
  return {std::move(k), std::move(cmp)};
}

QObject q_object(const ComplexPtr& x, const TorsionTheory& tt) {
  Truncation r = reflection(x, tt);
  Truncation s = coreflection(x, tt);
  Cone q = cofib(s.map);
  ChainMap rs = compose(r.map, s.map);
  ChainMap cmp = descend_from_cofiber(q, r.map, witness_between(ChainMap::zero(rs.source(), rs.target()), rs));
  return {std::move(q), std::move(cmp)};
}

bool NormalityReport::all() const {
  return k_in_torsion && q_in_torsion_free && both && q_matches_reflection && k_matches_coreflection &&
         fiber_sequence;
}

bool NormalityReport::consistent() const {
  const bool first = k_in_torsion;
  return q_in_torsion_free == first && both == first && q_matches_reflection == first &&
         k_matches_coreflection == first && fiber_sequence == first;
}

NormalityReport normality_report(const ComplexPtr& x, const TorsionTheory& tt) {
  NormalityReport r;
  KObject k = k_object(x, tt);
  QObject q = q_object(x, tt);
  r.k_in_torsion = tt.in_T(k.fiber.object);
  r.q_in_torsion_free = tt.in_F(q.cofiber.object);
  r.both = r.k_in_torsion && r.q_in_torsion_free;
  r.q_matches_reflection = is_quasi_iso(q.comparison);
  r.k_matches_coreflection = is_quasi_iso(k.comparison);

  Truncation rx = reflection(x, tt);
  Truncation sx = coreflection(x, tt);
  ComplexPtr zero = Complex::zero(x->quiver(), x->field());
  ChainMap left = ChainMap::zero(sx.object, zero);
  ChainMap bottom = ChainMap::zero(zero, rx.object);
  ChainMap rs = compose(rx.map, sx.map);
  CommutingSquare sq{sx.map, left, rx.map, bottom, witness_between(rs, compose(bottom, left))};
  r.fiber_sequence = is_pullout(sq);
  return r;
}

Factorization factor(const ChainMap& f, const TorsionTheory& tt) {
  Truncation tx = reflection(f.source(), tt);
  Truncation ty = reflection(f.target(), tt);
  ChainMap f_lt = truncate_map_lt(tx, ty, f);
  Pullback pb = homotopy_pullback(f_lt, ty.map);
  ChainMap e = pullback_lift(pb, tx.map, f, witness_between(compose(f_lt, tx.map), compose(ty.map, f)));
  ChainMap m = pb.second;
  Homotopy w = witness_between(compose(m, e), f);
  return {f, std::move(e), std::move(m), std::move(w), std::move(pb)};
}

CommutingSquare factorization_extra_square(const Factorization& fac, const TorsionTheory& tt) {
  Truncation sx = coreflection(fac.f.source(), tt);
  Truncation sy = coreflection(fac.f.target(), tt);
  ChainMap left = truncate_map_ge(sx, sy, fac.f);
  const Pullback& pb = fac.pullback;
  ChainMap zero = ChainMap::zero(sy.object, pb.f.source());
  ChainMap j = pullback_lift(pb, zero, sy.map, witness_between(compose(pb.f, zero), compose(pb.g, sy.map)));
  ChainMap top = sx.map;
  Homotopy w = witness_between(compose(fac.e, top), compose(j, left));
  CommutingSquare sq{std::move(top), std::move(left), fac.e, std::move(j), std::move(w)};
  sq.validate();
  return sq;
}

bool is_orthogonal(const ChainMap& e, const ChainMap& m) {
  HomComplex h = derived_hom(cofib(e).object, fib(m).object);
  for (int k = std::max(0, h.lo()); k <= h.hi(); ++k)
    if (h.homology_dim(k) != 0) return false;
  return true;
}

LiftingResult solve_lifting(const CommutingSquare& sq) {
  sq.validate();
  const PrimeField f = sq.top.source()->field();
  ProjectiveReplacement pa = projective_replacement(sq.left.source());
  ProjectiveReplacement pb = projective_replacement(sq.left.target());
  const ChainMap e = replace_map(pa, pb, sq.left);
  const ChainMap& m = sq.right;
  const ChainMap u = compose(sq.top, pa.augmentation);
  const ChainMap v = compose(sq.bottom, pb.augmentation);
  const Homotopy h = precompose(sq.witness, pa.augmentation);
  const ComplexPtr &A = pa.object, &B = pb.object, &X = m.source(), &Y = m.target();

  // Unknowns: filler l, triangle homotopies K1 (l e => u), K2 (m l => v) and
  // a coherence L between H + m K1 - K2 e and zero.
  LinearSystem sys(f);
  GradedUnknown l = add_graded_unknown(sys, B, X, 0);
  GradedUnknown k1 = add_graded_unknown(sys, A, X, 1);
  GradedUnknown k2 = add_graded_unknown(sys, B, Y, 1);
  GradedUnknown ll = add_graded_unknown(sys, A, Y, 2);

  GradedEquation e1 = add_graded_equation(sys, B, X, -1);
  add_graded_boundary(sys, e1, l);
  GradedEquation e2 = add_graded_equation(sys, A, X, 0);
  add_graded_term(sys, e2, nullptr, l, &e.graded());
  add_graded_boundary(sys, e2, k1);
  add_graded_constant(sys, e2, u.graded());
  GradedEquation e3 = add_graded_equation(sys, B, Y, 0);
  add_graded_term(sys, e3, &m.graded(), l, nullptr);
  add_graded_boundary(sys, e3, k2);
  add_graded_constant(sys, e3, v.graded());
  GradedEquation e4 = add_graded_equation(sys, A, Y, 1);
  add_graded_term(sys, e4, nullptr, k2, &e.graded(), -1);
  add_graded_term(sys, e4, &m.graded(), k1, nullptr);
  add_graded_boundary(sys, e4, ll, -1);
  add_graded_constant(sys, e4, -h.map());

  const Matrix a = sys.matrix();
  LiftingResult out;
  auto sol = solve(a, sys.rhs());
  if (!sol) {
    out.class_count = 0;
    return out;
  }
  out.exists = true;
  out.filler = ChainMap(graded_value(sys, l, sol->particular));

  // Gauge: M (B -> X, deg 1), N1 (A -> X, deg 2), N2 (B -> Y, deg 2), P (A -> Y, deg 3).
  LinearSystem constraints(f);
  add_graded_unknown(constraints, B, X, 1);
  add_graded_unknown(constraints, A, X, 2);
  add_graded_unknown(constraints, B, Y, 2);
  add_graded_unknown(constraints, A, Y, 3);
  Matrix gauge_params = kernel_basis(constraints.matrix());

  LinearSystem action(f);
  GradedUnknown gm = add_graded_unknown(action, B, X, 1, false);
  GradedUnknown gn1 = add_graded_unknown(action, A, X, 2, false);
  GradedUnknown gn2 = add_graded_unknown(action, B, Y, 2, false);
  GradedUnknown gp = add_graded_unknown(action, A, Y, 3, false);
  GradedEquation dl = add_graded_equation(action, B, X, 0);
  add_graded_boundary(action, dl, gm);
  GradedEquation dk1 = add_graded_equation(action, A, X, 1);
  add_graded_term(action, dk1, nullptr, gm, &e.graded(), -1);
  add_graded_boundary(action, dk1, gn1);
  GradedEquation dk2 = add_graded_equation(action, B, Y, 1);
  add_graded_term(action, dk2, &m.graded(), gm, nullptr, -1);
  add_graded_boundary(action, dk2, gn2);
  GradedEquation dll = add_graded_equation(action, A, Y, 2);
  add_graded_term(action, dll, &m.graded(), gn1, nullptr);
  add_graded_term(action, dll, nullptr, gn2, &e.graded(), -1);
  add_graded_boundary(action, dll, gp);

  Matrix gauge = action.matrix() * gauge_params;
  if (!(a * gauge).is_zero()) throw std::logic_error("gauge action does not preserve the lifting equations");
  out.class_dim = sol->kernel.cols() - rank(gauge);
  std::uint64_t count = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < out.class_dim && !overflow; ++i) {
    if (count > (std::uint64_t(1) << 47)) overflow = true;
    count *= f.p();
  }
  if (!overflow) out.class_count = count;
  return out;
}

bool three_for_two_check(MorphismClass cls, const TorsionTheory& tt,
                         const std::vector<std::pair<ChainMap, ChainMap>>& pairs) {
  auto in = [&](const ChainMap& x) { return cls == MorphismClass::E ? tt.in_E(x) : tt.in_M(x); };
  for (const auto& [f, g] : pairs) {
    const bool a = in(f), b = in(g), c = in(compose(g, f));
    if (a && b && !c) return false;
    if (a && c && !b) return false;
    if (b && c && !a) return false;
  }
  return true;
}

bool sator_check(const ComplexPtr& a, const TorsionTheory& tt) {
  ChainMap i = initial_arrow(a), t = terminal_arrow(a);
  return tt.in_E(i) == tt.in_E(t) && tt.in_M(i) == tt.in_M(t);
}

SemiexactResult semiexact_check(const ChainMap& f, const TorsionTheory& tt) {
  Truncation rx = reflection(f.source(), tt), ry = reflection(f.target(), tt);
  Truncation sx = coreflection(f.source(), tt), sy = coreflection(f.target(), tt);
  ChainMap rf = truncate_map_lt(rx, ry, f);
  ChainMap sf = truncate_map_ge(sx, sy, f);
  Pullback p = homotopy_pullback(rf, ry.map);
  Pushout q = homotopy_pushout(sf, sx.map);

  ChainMap zero = ChainMap::zero(sy.object, rx.object);
  ChainMap to_rx = pushout_descend(q, zero, rx.map, witness_between(compose(zero, sf), compose(rx.map, sx.map)));
  ChainMap to_y = pushout_descend(q, sy.map, f, witness_between(compose(sy.map, sf), compose(f, sx.map)));
  ChainMap w = pullback_lift(p, to_rx, to_y, witness_between(compose(rf, to_rx), compose(ry.map, to_y)));

  SemiexactResult r;
  r.comparison_quasi_iso = is_quasi_iso(w);
  r.unit_in_E = tt.in_E(p.first);
  return r;
}

bool roundtrip_morphism_check(const ChainMap& f, const TorsionTheory& tt) {
  Factorization fac = factor(f, tt);
  return tt.in_E(f) == is_quasi_iso(fac.m) && tt.in_M(f) == is_quasi_iso(fac.e);
}

bool roundtrip_object_check(const ComplexPtr& x, const TorsionTheory& tt) {
  return in_coaisle(x, tt.t) == tt.in_E(initial_arrow(x)) && in_aisle(x, tt.t) == tt.in_M(terminal_arrow(x));
}

bool pushout_closure_check(const ChainMap& e, const ChainMap& g, const TorsionTheory& tt) {
  if (!tt.in_E(e)) return true;
  Pushout po = homotopy_pushout(e, g);
  return tt.in_E(po.second);
}

bool pullback_closure_check(const ChainMap& m, const ChainMap& g, const TorsionTheory& tt) {
  if (!tt.in_M(m)) return true;
  Pullback pb = homotopy_pullback(m, g);
  return tt.in_M(pb.second);
}

bool antitone_check(const ChainMap& f, int n, int k, TruncationKind kind) {
  if (n > k) std::swap(n, k);
  TorsionTheory a{{n, kind}}, b{{k, kind}};
  return !a.in_M(f) || b.in_M(f);
}

}  // namespace ntt
