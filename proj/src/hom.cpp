#include "ntt/hom.hpp"

#include <algorithm>
#include <stdexcept>

namespace ntt {

namespace {

std::vector<Matrix> unflatten(const HomSpace& h, const Matrix& flat, const QuiverRep& a, const QuiverRep& b) {
  std::vector<Matrix> out;
  for (std::size_t v = 0; v < a.dims().size(); ++v) {
    Matrix m(a.field(), b.dim(v), a.dim(v));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = flat(h.offsets[v] + r * m.cols() + c, 0);
    out.push_back(std::move(m));
  }
  return out;
}

Matrix flatten(const HomSpace& h, const std::vector<Matrix>& comps, PrimeField f) {
  Matrix flat(f, h.ambient, 1);
  for (std::size_t v = 0; v < comps.size(); ++v)
    for (std::size_t r = 0; r < comps[v].rows(); ++r)
      for (std::size_t c = 0; c < comps[v].cols(); ++c) flat(h.offsets[v] + r * comps[v].cols() + c, 0) = comps[v](r, c);
  return flat;
}

}  // namespace

HomComplex::HomComplex(ComplexPtr source, ComplexPtr target) : source_(std::move(source)), target_(std::move(target)) {
  if (!same_quiver(source_->quiver(), target_->quiver()) || source_->field() != target_->field())
    throw std::invalid_argument("hom complex between complexes over different quivers or fields");
  if (source_->is_zero() || target_->is_zero()) return;
  lo_ = target_->lo() - source_->hi();
  hi_ = target_->hi() - source_->lo();
  for (int k = lo_; k <= hi_; ++k) {
    std::vector<HomSpace> row;
    for (int n = source_->lo(); n <= source_->hi(); ++n) row.push_back(hom_space(source_->term(n), target_->term(n + k)));
    spaces_.push_back(std::move(row));
  }
}

std::size_t HomComplex::dim(int k) const {
  if (k < lo_ || k > hi_) return 0;
  std::size_t d = 0;
  for (const auto& h : spaces(k)) d += h.dim();
  return d;
}

GradedMap HomComplex::element(int k, const Matrix& coords) const {
  if (coords.rows() != dim(k) || coords.cols() != 1) throw std::invalid_argument("hom complex coordinate shape mismatch");
  if (k < lo_ || k > hi_) return GradedMap::zero(source_, target_, k);
  std::vector<std::vector<Matrix>> comps;
  std::size_t off = 0;
  for (int n = source_->lo(); n <= source_->hi(); ++n) {
    const HomSpace& h = spaces(k)[n - source_->lo()];
    Matrix seg = coords.block(off, 0, h.dim(), 1);
    off += h.dim();
    comps.push_back(unflatten(h, h.basis * seg, source_->term(n), target_->term(n + k)));
  }
  return GradedMap(source_, target_, k, std::move(comps));
}

Matrix HomComplex::coordinates(const GradedMap& phi) const {
  if (!same_complex(phi.source(), source_) || !same_complex(phi.target(), target_))
    throw std::invalid_argument("graded map is not an element of this hom complex");
  const int k = phi.degree();
  Matrix out(source_->field(), dim(k), 1);
  if (k < lo_ || k > hi_) return out;
  std::size_t off = 0;
  for (int n = source_->lo(); n <= source_->hi(); ++n) {
    const HomSpace& h = spaces(k)[n - source_->lo()];
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < source_->vertex_count(); ++v) comps.push_back(phi.component(n, v));
    out.set_block(off, 0, h.coordinates * flatten(h, comps, source_->field()));
    off += h.dim();
  }
  return out;
}

Matrix HomComplex::differential(int k) const {
  Matrix d(source_->field(), dim(k - 1), dim(k));
  for (std::size_t j = 0; j < d.cols(); ++j) {
    Matrix e(source_->field(), d.cols(), 1);
    e(j, 0) = 1;
    d.set_block(0, j, coordinates(element(k, e).boundary()));
  }
  return d;
}

std::size_t HomComplex::homology_dim(int k) const {
  return dim(k) - rank(differential(k)) - rank(differential(k + 1));
}

ComplexPtr HomComplex::complex() const {
  QuiverPtr point = Quiver::one_vertex();
  const PrimeField f = source_->field();
  std::vector<QuiverRep> terms;
  std::vector<std::vector<Matrix>> diffs;
  for (int k = lo_; k <= hi_; ++k) {
    terms.emplace_back(point, f, std::vector<std::size_t>{dim(k)}, std::vector<Matrix>{});
    if (k > lo_) diffs.push_back({differential(k)});
  }
  return Complex::make(point, f, lo_, std::move(terms), std::move(diffs));
}

ComplexPtr hom_complex(const ComplexPtr& x, const ComplexPtr& y) { return HomComplex(x, y).complex(); }

std::optional<Homotopy> homotopic(const ChainMap& f, const ChainMap& g) {
  if (f == g) return Homotopy::zero(f);
  HomComplex h(f.source(), f.target());
  auto sol = solve(h.differential(1), h.coordinates((g - f).graded()));
  if (!sol) return std::nullopt;
  return Homotopy(f, g, h.element(1, sol->particular));
}

Homotopy witness_between(const ChainMap& from, const ChainMap& to) {
  auto h = homotopic(from, to);
  if (!h) throw std::logic_error("maps are not chain homotopic");
  return *h;
}

// ---------------------------------------------------------------------------

Matrix random_vector(PrimeField field, std::size_t n, std::mt19937_64& rng) { return random_matrix(field, n, 1, rng); }

namespace {

RepMap random_intertwiner(const QuiverRep& a, const QuiverRep& b, std::mt19937_64& rng) {
  HomSpace h = hom_space(a, b);
  Matrix flat = h.basis * random_vector(a.field(), h.dim(), rng);
  return RepMap(a, b, unflatten(h, flat, a, b));
}

}  // namespace

ComplexPtr random_complex(const ComplexParams& params, std::mt19937_64& rng) {
  if (params.hi < params.lo) return Complex::zero(params.quiver, params.field);
  std::vector<QuiverRep> terms;
  for (int n = params.lo; n <= params.hi; ++n) terms.push_back(random_rep(params.quiver, params.field, params.max_dim, rng));
  std::vector<std::vector<Matrix>> diffs;
  for (std::size_t k = 1; k < terms.size(); ++k) {
    if (k == 1) {
      diffs.push_back(random_intertwiner(terms[1], terms[0], rng).components());
      continue;
    }
    RepMap prev(terms[k - 1], terms[k - 2], diffs.back());
    RepKernel ker = rep_kernel(prev);
    RepMap into = random_intertwiner(terms[k], ker.object, rng);
    diffs.push_back(compose(ker.inclusion, into).components());
  }
  return Complex::make(params.quiver, params.field, params.lo, std::move(terms), std::move(diffs));
}

ChainMap random_chain_map(const ComplexPtr& x, const ComplexPtr& y, std::mt19937_64& rng) {
  HomComplex h(x, y);
  Matrix cycles = kernel_basis(h.differential(0));
  return ChainMap(h.element(0, cycles * random_vector(x->field(), cycles.cols(), rng)));
}

GradedMap random_graded_map(const ComplexPtr& x, const ComplexPtr& y, int degree, std::mt19937_64& rng) {
  HomComplex h(x, y);
  return h.element(degree, random_vector(x->field(), h.dim(degree), rng));
}

// ---------------------------------------------------------------------------

namespace {

std::size_t path_index(const Quiver& q, std::size_t u, std::size_t w, const std::vector<std::size_t>& path) {
  const auto& ps = q.paths(u, w);
  auto it = std::find(ps.begin(), ps.end(), path);
  if (it == ps.end()) throw std::logic_error("path lookup failed");
  return static_cast<std::size_t>(it - ps.begin());
}

// Index layouts for P0(M) = (+)_v P_v (x) M_v and P1(M) = (+)_a P_t(a) (x) M_s(a),
// with P_u(w) spanned by the paths u -> w.
struct Layout {
  std::vector<std::vector<std::size_t>> offset;  // [w][generator]
  std::vector<std::size_t> dims;                 // [w]
};

Layout p0_layout(const Quiver& q, const std::vector<std::size_t>& mdims) {
  Layout l;
  for (std::size_t w = 0; w < q.vertex_count(); ++w) {
    std::vector<std::size_t> off;
    std::size_t d = 0;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      off.push_back(d);
      d += q.paths(v, w).size() * mdims[v];
    }
    l.offset.push_back(std::move(off));
    l.dims.push_back(d);
  }
  return l;
}

Layout p1_layout(const Quiver& q, const std::vector<std::size_t>& mdims) {
  Layout l;
  for (std::size_t w = 0; w < q.vertex_count(); ++w) {
    std::vector<std::size_t> off;
    std::size_t d = 0;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      off.push_back(d);
      d += q.paths(q.arrow(a).target, w).size() * mdims[q.arrow(a).source];
    }
    l.offset.push_back(std::move(off));
    l.dims.push_back(d);
  }
  return l;
}

// Generator g of either layout is a vertex (P0) or an arrow (P1); `base`
// gives the vertex the paths start at and `mvert` the vertex of M.
template <class Base, class MVert>
QuiverRep free_rep(const QuiverPtr& qp, PrimeField f, const Layout& l, std::size_t gens, Base base, MVert mvert,
                   const std::vector<std::size_t>& mdims) {
  const Quiver& q = *qp;
  std::vector<Matrix> maps;
  for (std::size_t b = 0; b < q.arrow_count(); ++b) {
    const std::size_t w = q.arrow(b).source, w2 = q.arrow(b).target;
    Matrix m(f, l.dims[w2], l.dims[w]);
    for (std::size_t g = 0; g < gens; ++g) {
      const std::size_t u = base(g), md = mdims[mvert(g)];
      const auto& ps = q.paths(u, w);
      for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        auto ext = ps[pi];
        ext.push_back(b);
        std::size_t qi = path_index(q, u, w2, ext);
        for (std::size_t i = 0; i < md; ++i) m(l.offset[w2][g] + qi * md + i, l.offset[w][g] + pi * md + i) = 1;
      }
    }
    maps.push_back(std::move(m));
  }
  return QuiverRep(qp, f, l.dims, std::move(maps));
}

QuiverRep p0_rep(const QuiverRep& m) {
  const Quiver& q = *m.quiver();
  Layout l = p0_layout(q, m.dims());
  return free_rep(m.quiver(), m.field(), l, q.vertex_count(), [](std::size_t v) { return v; },
                  [](std::size_t v) { return v; }, m.dims());
}

QuiverRep p1_rep(const QuiverRep& m) {
  const Quiver& q = *m.quiver();
  Layout l = p1_layout(q, m.dims());
  return free_rep(m.quiver(), m.field(), l, q.arrow_count(), [&](std::size_t a) { return q.arrow(a).target; },
                  [&](std::size_t a) { return q.arrow(a).source; }, m.dims());
}

// P0(phi) and P1(phi) for per-vertex linear maps phi: M -> N.
std::vector<Matrix> p0_map(const QuiverRep& m, const QuiverRep& n, const std::vector<Matrix>& phi) {
  const Quiver& q = *m.quiver();
  Layout lm = p0_layout(q, m.dims()), ln = p0_layout(q, n.dims());
  std::vector<Matrix> out;
  for (std::size_t w = 0; w < q.vertex_count(); ++w) {
    Matrix r(m.field(), ln.dims[w], lm.dims[w]);
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
      for (std::size_t p = 0; p < q.paths(v, w).size(); ++p)
        r.set_block(ln.offset[w][v] + p * n.dim(v), lm.offset[w][v] + p * m.dim(v), phi[v]);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Matrix> p1_map(const QuiverRep& m, const QuiverRep& n, const std::vector<Matrix>& phi) {
  const Quiver& q = *m.quiver();
  Layout lm = p1_layout(q, m.dims()), ln = p1_layout(q, n.dims());
  std::vector<Matrix> out;
  for (std::size_t w = 0; w < q.vertex_count(); ++w) {
    Matrix r(m.field(), ln.dims[w], lm.dims[w]);
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const std::size_t s = q.arrow(a).source;
      for (std::size_t p = 0; p < q.paths(q.arrow(a).target, w).size(); ++p)
        r.set_block(ln.offset[w][a] + p * n.dim(s), lm.offset[w][a] + p * m.dim(s), phi[s]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Matrix> delta_map(const QuiverRep& m) {
  const Quiver& q = *m.quiver();
  Layout l0 = p0_layout(q, m.dims()), l1 = p1_layout(q, m.dims());
  std::vector<Matrix> out;
  for (std::size_t w = 0; w < q.vertex_count(); ++w) {
    Matrix r(m.field(), l0.dims[w], l1.dims[w]);
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const std::size_t s = q.arrow(a).source, t = q.arrow(a).target;
      const auto& qs = q.paths(t, w);
      for (std::size_t qi = 0; qi < qs.size(); ++qi) {
        std::vector<std::size_t> ext{a};
        ext.insert(ext.end(), qs[qi].begin(), qs[qi].end());
        const std::size_t ei = path_index(q, s, w, ext);
        for (std::size_t i = 0; i < m.dim(s); ++i) {
          const std::size_t col = l1.offset[w][a] + qi * m.dim(s) + i;
          r(l0.offset[w][s] + ei * m.dim(s) + i, col) = 1;
          for (std::size_t j = 0; j < m.dim(t); ++j)
            r(l0.offset[w][t] + qi * m.dim(t) + j, col) =
                m.field().sub(r(l0.offset[w][t] + qi * m.dim(t) + j, col), m.arrow_map(a)(j, i));
        }
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Matrix> epsilon_map(const QuiverRep& m) {
  const Quiver& q = *m.quiver();
  Layout l0 = p0_layout(q, m.dims());
  std::vector<Matrix> out;
  for (std::size_t w = 0; w < q.vertex_count(); ++w) {
    Matrix r(m.field(), m.dim(w), l0.dims[w]);
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      const auto& ps = q.paths(v, w);
      for (std::size_t p = 0; p < ps.size(); ++p) r.set_block(0, l0.offset[w][v] + p * m.dim(v), m.path_map(ps[p], v));
    }
    out.push_back(std::move(r));
  }
  return out;
}

template <class RepFn, class MapFn>
ComplexPtr apply_functor(const ComplexPtr& x, RepFn rep, MapFn map) {
  std::vector<QuiverRep> terms;
  std::vector<std::vector<Matrix>> diffs;
  for (int n = x->lo(); n <= x->hi(); ++n) {
    terms.push_back(rep(x->term(n)));
    if (n > x->lo()) {
      std::vector<Matrix> d;
      for (std::size_t v = 0; v < x->vertex_count(); ++v) d.push_back(x->diff(n, v));
      diffs.push_back(map(x->term(n), x->term(n - 1), d));
    }
  }
  return Complex::make(x->quiver(), x->field(), x->lo(), std::move(terms), std::move(diffs));
}

std::vector<Matrix> chain_components(const ChainMap& f, int n) {
  std::vector<Matrix> c;
  for (std::size_t v = 0; v < f.source()->vertex_count(); ++v) c.push_back(f.component(n, v));
  return c;
}

}  // namespace

ProjectiveReplacement projective_replacement(const ComplexPtr& x) {
  ComplexPtr p0 = apply_functor(x, p0_rep, p0_map);
  ComplexPtr p1 = apply_functor(x, p1_rep, p1_map);
  ChainMap delta(GradedMap::build(p1, p0, 0, [&](int n, std::size_t v) { return delta_map(x->term(n))[v]; }));
  ChainMap eps(GradedMap::build(p0, x, 0, [&](int n, std::size_t v) { return epsilon_map(x->term(n))[v]; }));
  Cone c = cone(delta);
  ChainMap aug = descend_from_cofiber(c, eps, Homotopy::zero(compose(eps, delta)));
  ComplexPtr obj = c.object;
  return {x, p0, p1, delta, eps, std::move(c), obj, std::move(aug)};
}

ChainMap replace_map(const ProjectiveReplacement& px, const ProjectiveReplacement& py, const ChainMap& f) {
  ChainMap f0(GradedMap::build(px.p0, py.p0, 0, [&](int n, std::size_t v) {
    return p0_map(f.source()->term(n), f.target()->term(n), chain_components(f, n))[v];
  }));
  ChainMap f1(GradedMap::build(px.p1, py.p1, 0, [&](int n, std::size_t v) {
    return p1_map(f.source()->term(n), f.target()->term(n), chain_components(f, n))[v];
  }));
  const auto& sx = *px.cone.sum;
  const auto& sy = *py.cone.sum;
  return ChainMap(compose(sy.inject(0), compose(f1.graded(), sx.project(0))) +
                  compose(sy.inject(1), compose(f0.graded(), sx.project(1))));
}

HomComplex derived_hom(const ComplexPtr& x, const ComplexPtr& y) {
  return HomComplex(projective_replacement(x).object, y);
}

}  // namespace ntt
