#include "ntt/tstructure.hpp"

#include <algorithm>
#include <stdexcept>

#include "ntt/hom.hpp"

namespace ntt {

bool in_coaisle(const ComplexPtr& x, const TStructure& t) {
  for (int k = x->lo(); k < std::min(t.n, x->hi() + 1); ++k)
    if (!has_zero_homology(x, k)) return false;
  return true;
}

bool in_aisle(const ComplexPtr& x, const TStructure& t) {
  for (int k = std::max(t.n, x->lo()); k <= x->hi(); ++k)
    if (!has_zero_homology(x, k)) return false;
  return true;
}

bool heart_contains(const ComplexPtr& x, const TStructure& t) {
  return in_coaisle(x, t) && in_aisle(x, t.shifted(1));
}

namespace {

std::vector<Matrix> identities(const ComplexPtr& x, int n) {
  std::vector<Matrix> out;
  for (std::size_t v = 0; v < x->vertex_count(); ++v) out.push_back(Matrix::identity(x->field(), x->dim(n, v)));
  return out;
}

// Complex with the terms of x in [from, to], with the term at `cut`
// replaced by `cut_rep` and the adjacent differentials pre/post-composed.
ComplexPtr rebuild(const ComplexPtr& x, int from, int to, int cut, const QuiverRep& cut_rep,
                   const std::vector<Matrix>& into_cut, const std::vector<Matrix>& out_of_cut) {
  if (from > to) return Complex::zero(x->quiver(), x->field());
  std::vector<QuiverRep> terms;
  std::vector<std::vector<Matrix>> diffs;
  for (int k = from; k <= to; ++k) {
    terms.push_back(k == cut ? cut_rep : x->term(k));
    if (k == from) continue;
    std::vector<Matrix> d;
    for (std::size_t v = 0; v < x->vertex_count(); ++v) {
      Matrix m = x->diff(k, v);
      if (k == cut) m = m * out_of_cut[v];
      if (k - 1 == cut) m = into_cut[v] * m;
      d.push_back(std::move(m));
    }
    diffs.push_back(std::move(d));
  }
  return Complex::make(x->quiver(), x->field(), from, std::move(terms), std::move(diffs));
}

}  // namespace

Truncation truncate_ge(const ComplexPtr& x, const TStructure& t) {
  const int n = t.n;
  std::vector<Matrix> cut, inv;
  ComplexPtr obj;
  if (t.kind == TruncationKind::brutal || x->is_zero() || n < x->lo() || n > x->hi()) {
    // No cut needed: the good and brutal truncations agree with a plain range.
    cut = identities(x, n);
    inv = cut;
    obj = rebuild(x, std::max(n, x->lo()), x->hi(), n, x->term(n), cut, cut);
  } else {
    RepKernel ker = rep_kernel(x->differential(n));
    cut = ker.inclusion.components();
    for (const auto& c : cut) inv.push_back(left_inverse(c));
    obj = rebuild(x, n, x->hi(), n, ker.object, inv, cut);
  }
  ChainMap iota(GradedMap::build(obj, x, 0, [&](int k, std::size_t v) {
    return k == n ? cut[v] : Matrix::identity(x->field(), x->dim(k, v));
  }));
  return {x, obj, std::move(iota), t, std::move(cut), std::move(inv)};
}

Truncation truncate_lt(const ComplexPtr& x, const TStructure& t) {
  const int n = t.n;
  std::vector<Matrix> sect, proj;
  ComplexPtr obj;
  if (t.kind == TruncationKind::brutal || x->is_zero() || n < x->lo() || n > x->hi()) {
    const int top = t.kind == TruncationKind::brutal ? n - 1 : n;
    sect = identities(x, n);
    proj = sect;
    obj = rebuild(x, x->lo(), std::min(top, x->hi()), n, x->term(n), sect, sect);
  } else {
    RepKernel ker = rep_kernel(x->differential(n));
    std::vector<Matrix> bases = ker.inclusion.components();
    QuotientRep qr = quotient_rep(x->term(n), bases);
    sect = qr.section;
    proj = qr.projection;
    obj = rebuild(x, x->lo(), n, n, qr.rep, proj, sect);
  }
  ChainMap pi(GradedMap::build(x, obj, 0, [&](int k, std::size_t v) {
    if (k == n) return obj->in_support(n) ? proj[v] : Matrix(x->field(), 0, x->dim(k, v));
    return obj->in_support(k) ? Matrix::identity(x->field(), x->dim(k, v)) : Matrix(x->field(), 0, x->dim(k, v));
  }));
  return {x, obj, std::move(pi), t, std::move(sect), std::move(proj)};
}

ChainMap truncate_map_ge(const Truncation& s, const Truncation& tt, const ChainMap& f) {
  if (!same_complex(s.original, f.source()) || !same_complex(tt.original, f.target()))
    throw std::invalid_argument("truncations do not match the map");
  const int n = s.t.n;
  return ChainMap(GradedMap::build(s.object, tt.object, 0, [&](int k, std::size_t v) {
    if (k == n) return tt.cut_inverse[v] * f.component(k, v) * s.cut[v];
    return f.component(k, v);
  }));
}

ChainMap truncate_map_lt(const Truncation& s, const Truncation& tt, const ChainMap& f) {
  if (!same_complex(s.original, f.source()) || !same_complex(tt.original, f.target()))
    throw std::invalid_argument("truncations do not match the map");
  const int n = s.t.n;
  return ChainMap(GradedMap::build(s.object, tt.object, 0, [&](int k, std::size_t v) {
    if (k == n) return tt.cut_inverse[v] * f.component(k, v) * s.cut[v];
    return f.component(k, v);
  }));
}

ChainMap truncate_map_ge(const ChainMap& f, const TStructure& t) {
  return truncate_map_ge(truncate_ge(f.source(), t), truncate_ge(f.target(), t), f);
}

ChainMap truncate_map_lt(const ChainMap& f, const TStructure& t) {
  return truncate_map_lt(truncate_lt(f.source(), t), truncate_lt(f.target(), t), f);
}

// ---------------------------------------------------------------------------

HeartMorphism::HeartMorphism(ChainMap map, TStructure t) : map_(std::move(map)), t_(t) {
  if (!heart_contains(map_.source(), t_) || !heart_contains(map_.target(), t_))
    throw std::invalid_argument("heart morphism endpoints must lie in the heart");
}

HeartMorphism heart_kernel(const HeartMorphism& f) {
  Fiber fb = fib(f.map());
  Truncation tr = truncate_ge(fb.object, f.t());
  return HeartMorphism(compose(fb.projection, tr.map), f.t());
}

HeartMorphism heart_cokernel(const HeartMorphism& f) {
  Cone c = cofib(f.map());
  Truncation tr = truncate_lt(c.object, f.t().shifted(1));
  return HeartMorphism(compose(tr.map, c.into), f.t());
}

HeartMorphism heart_image(const HeartMorphism& f) { return heart_kernel(heart_cokernel(f)); }

HeartMorphism heart_coimage(const HeartMorphism& f) { return heart_cokernel(heart_kernel(f)); }

bool HeartComparison::is_isomorphism() const {
  return is_quasi_iso(comparison) && is_quasi_iso(coimage_leg) && is_quasi_iso(image_leg);
}

HeartComparison heart_comparison(const HeartMorphism& f) {
  const TStructure t = f.t();
  const TStructure t1 = t.shifted(1);

  // Kernel k = p o iota : tau_>=n fib(f) -> X, and its cofiber.
  Fiber ff = fib(f.map());
  Truncation kt = truncate_ge(ff.object, t);
  ChainMap k = compose(ff.projection, kt.map);
  Cone ck = cofib(k);
  Truncation coim = truncate_lt(ck.object, t1);
  HeartMorphism coimage(compose(coim.map, ck.into), t);

  // Cokernel q : Y -> tau_<n+1 cofib(f), and its fiber.
  Cone cf = cofib(f.map());
  Truncation cok = truncate_lt(cf.object, t1);
  ChainMap q = compose(cok.map, cf.into);
  Fiber fq = fib(q);
  Truncation imt = truncate_ge(fq.object, t);
  HeartMorphism image(compose(fq.projection, imt.map), t);

  // u : cofib(k) -> Y induced by f, then lifted through fib(q).
  Homotopy fk_null = precompose(ff.null, kt.map);
  ChainMap u = descend_from_cofiber(ck, f.map(), fk_null);
  Homotopy qu_null = witness_between(ChainMap::zero(u.source(), q.target()), compose(q, u));
  ChainMap phi = lift_to_fiber(fq, u, qu_null);

  // Normalize both ends with N = tau_>=n tau_<n+1.
  Truncation src_lt = coim;  // tau_<n+1 cofib(k)
  Truncation tgt_lt = truncate_lt(fq.object, t1);
  ChainMap phi_lt = truncate_map_lt(src_lt, tgt_lt, phi);
  Truncation src_n = truncate_ge(src_lt.object, t);
  Truncation tgt_n = truncate_ge(tgt_lt.object, t);
  ChainMap comparison = truncate_map_ge(src_n, tgt_n, phi_lt);
  ChainMap coimage_leg = src_n.map;
  ChainMap image_leg = truncate_map_ge(imt, tgt_n, tgt_lt.map);

  return {std::move(coimage), std::move(image), std::move(comparison), std::move(coimage_leg), std::move(image_leg)};
}

}  // namespace ntt
