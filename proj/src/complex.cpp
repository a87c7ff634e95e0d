#include "ntt/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace ntt {

namespace {

std::int64_t sign(int k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

Complex::Complex(QuiverPtr quiver, PrimeField field, int lo, std::vector<QuiverRep> terms,
                 std::vector<std::vector<Matrix>> differentials)
    : quiver_(std::move(quiver)),
      field_(field),
      lo_(lo),
      terms_(std::move(terms)),
      zero_rep_(QuiverRep::zero(quiver_, field)),
      zero_matrix_(field, 0, 0) {
  const std::size_t nv = quiver_->vertex_count();
  if (!terms_.empty() && differentials.size() + 1 != terms_.size())
    throw std::invalid_argument("complex needs one differential between consecutive terms");
  if (terms_.empty() && !differentials.empty()) throw std::invalid_argument("differentials given for an empty complex");
  for (const auto& t : terms_) {
    if (!same_quiver(t.quiver(), quiver_)) throw std::invalid_argument("complex term over a different quiver");
    if (t.field() != field_) throw std::invalid_argument("complex term over a different field");
  }
  for (std::size_t k = 0; k < differentials.size(); ++k) {
    const auto& dk = differentials[k];
    if (dk.size() != nv) throw std::invalid_argument("differential vertex count mismatch");
    for (std::size_t v = 0; v < nv; ++v)
      if (dk[v].rows() != terms_[k].dim(v) || dk[v].cols() != terms_[k + 1].dim(v) || dk[v].field() != field_)
        throw std::invalid_argument("differential shape mismatch in degree " + std::to_string(lo + int(k) + 1));
    if (!is_intertwiner(terms_[k + 1], terms_[k], dk))
      throw std::invalid_argument("differential is not an intertwiner in degree " + std::to_string(lo + int(k) + 1));
  }
  while (!terms_.empty() && terms_.front().is_zero()) {
    terms_.erase(terms_.begin());
    if (!differentials.empty()) differentials.erase(differentials.begin());
    ++lo_;
  }
  while (!terms_.empty() && terms_.back().is_zero()) {
    terms_.pop_back();
    if (!differentials.empty()) differentials.pop_back();
  }
  if (terms_.empty()) lo_ = 0;
  hi_ = lo_ + static_cast<int>(terms_.size()) - 1;

  d_.reserve(terms_.size() + 1);
  for (int n = lo_; n <= hi_ + 1; ++n) {
    if (n == lo_ || n == hi_ + 1) {
      std::vector<Matrix> row;
      for (std::size_t v = 0; v < nv; ++v) row.emplace_back(field_, dim(n - 1, v), dim(n, v));
      d_.push_back(std::move(row));
    } else {
      d_.push_back(std::move(differentials[n - lo_ - 1]));
    }
  }
  for (int n = lo_ + 2; n <= hi_; ++n)
    for (std::size_t v = 0; v < nv; ++v)
      if (!(diff(n - 1, v) * diff(n, v)).is_zero())
        throw std::invalid_argument("d-squared is nonzero in degree " + std::to_string(n));
}

ComplexPtr Complex::make(QuiverPtr quiver, PrimeField field, int lo, std::vector<QuiverRep> terms,
                         std::vector<std::vector<Matrix>> differentials) {
  return std::make_shared<const Complex>(std::move(quiver), field, lo, std::move(terms), std::move(differentials));
}

ComplexPtr Complex::zero(QuiverPtr quiver, PrimeField field) { return make(std::move(quiver), field, 0, {}, {}); }

ComplexPtr Complex::concentrated(const QuiverRep& rep, int degree) {
  return make(rep.quiver(), rep.field(), degree, {rep}, {});
}

std::size_t Complex::total_dim() const {
  std::size_t t = 0;
  for (const auto& r : terms_) t += r.total_dim();
  return t;
}

const Matrix& Complex::diff(int n, std::size_t v) const {
  if (n < lo_ || n > hi_ + 1) return zero_matrix_;
  return d_[n - lo_][v];
}

RepMap Complex::differential(int n) const { return RepMap(term(n), term(n - 1), n < lo_ || n > hi_ + 1 ? std::vector<Matrix>(vertex_count(), zero_matrix_) : d_[n - lo_]); }

bool Complex::operator==(const Complex& o) const {
  return same_quiver(quiver_, o.quiver_) && field_ == o.field_ && lo_ == o.lo_ && hi_ == o.hi_ &&
         terms_ == o.terms_ && d_ == o.d_;
}

bool same_complex(const ComplexPtr& a, const ComplexPtr& b) { return a == b || (a && b && *a == *b); }

// ---------------------------------------------------------------------------

GradedMap::GradedMap(ComplexPtr source, ComplexPtr target, int degree, std::vector<std::vector<Matrix>> components)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree), comps_(std::move(components)) {
  if (!same_quiver(source_->quiver(), target_->quiver())) throw std::invalid_argument("graded map between different quivers");
  if (source_->field() != target_->field()) throw std::invalid_argument("graded map between different fields");
  const std::size_t expected = source_->is_zero() ? 0 : std::size_t(source_->hi() - source_->lo() + 1);
  if (comps_.size() != expected) throw std::invalid_argument("graded map degree count mismatch");
  const std::size_t nv = source_->vertex_count();
  for (int n = source_->lo(); n <= source_->hi(); ++n) {
    const auto& c = comps_[n - source_->lo()];
    if (c.size() != nv) throw std::invalid_argument("graded map vertex count mismatch");
    for (std::size_t v = 0; v < nv; ++v)
      if (c[v].rows() != target_->dim(n + degree_, v) || c[v].cols() != source_->dim(n, v))
        throw std::invalid_argument("graded map component shape mismatch in degree " + std::to_string(n));
    if (!is_intertwiner(source_->term(n), target_->term(n + degree_), c))
      throw std::invalid_argument("graded map component is not an intertwiner in degree " + std::to_string(n));
  }
}

GradedMap GradedMap::zero(ComplexPtr source, ComplexPtr target, int degree) {
  std::vector<std::vector<Matrix>> comps;
  for (int n = source->lo(); n <= source->hi(); ++n) {
    std::vector<Matrix> row;
    for (std::size_t v = 0; v < source->vertex_count(); ++v)
      row.emplace_back(source->field(), target->dim(n + degree, v), source->dim(n, v));
    comps.push_back(std::move(row));
  }
  return GradedMap(std::move(source), std::move(target), degree, std::move(comps));
}

GradedMap GradedMap::build(ComplexPtr source, ComplexPtr target, int degree, const Generator& gen) {
  std::vector<std::vector<Matrix>> comps;
  for (int n = source->lo(); n <= source->hi(); ++n) {
    std::vector<Matrix> row;
    for (std::size_t v = 0; v < source->vertex_count(); ++v) row.push_back(gen(n, v));
    comps.push_back(std::move(row));
  }
  return GradedMap(std::move(source), std::move(target), degree, std::move(comps));
}

GradedMap GradedMap::differential(const ComplexPtr& x) {
  return build(x, x, -1, [&](int n, std::size_t v) { return x->diff(n, v); });
}

Matrix GradedMap::component(int n, std::size_t v) const {
  if (source_->in_support(n)) return comps_[n - source_->lo()][v];
  return Matrix(source_->field(), target_->dim(n + degree_, v), 0);
}

bool GradedMap::is_zero() const {
  for (const auto& row : comps_)
    for (const auto& m : row)
      if (!m.is_zero()) return false;
  return true;
}

GradedMap GradedMap::boundary() const {
  const std::int64_t s = sign(degree_);
  return build(source_, target_, degree_ - 1, [&](int n, std::size_t v) {
    Matrix a = target_->diff(n + degree_, v) * component(n, v);
    Matrix b = component(n - 1, v) * source_->diff(n, v);
    return s > 0 ? a - b : a + b;
  });
}

GradedMap GradedMap::scaled(std::int64_t c) const {
  return build(source_, target_, degree_, [&](int n, std::size_t v) { return component(n, v).scaled(c); });
}

GradedMap GradedMap::reinterpret(ComplexPtr source, ComplexPtr target, int degree) const {
  // Component at degree n of the new source is the old component at n - offset,
  // where the offset is read off the source supports.
  const int offset = source->is_zero() || source_->is_zero() ? 0 : source->lo() - source_->lo();
  return build(std::move(source), std::move(target), degree,
               [&](int n, std::size_t v) { return component(n - offset, v); });
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
  if (degree_ != o.degree_ || !same_complex(source_, o.source_) || !same_complex(target_, o.target_))
    throw std::invalid_argument("sum of graded maps with different shapes");
  return build(source_, target_, degree_, [&](int n, std::size_t v) { return component(n, v) + o.component(n, v); });
}

GradedMap GradedMap::operator-(const GradedMap& o) const { return *this + (-o); }

GradedMap GradedMap::operator-() const { return scaled(-1); }

bool GradedMap::operator==(const GradedMap& o) const {
  return degree_ == o.degree_ && same_complex(source_, o.source_) && same_complex(target_, o.target_) &&
         comps_ == o.comps_;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
  if (!same_complex(f.target(), g.source())) throw std::invalid_argument("compose: graded maps not composable");
  return GradedMap::build(f.source(), g.target(), f.degree() + g.degree(), [&](int n, std::size_t v) {
    return g.component(n + f.degree(), v) * f.component(n, v);
  });
}

// ---------------------------------------------------------------------------

ChainMap::ChainMap(GradedMap map) : map_(std::move(map)) {
  if (map_.degree() != 0) throw std::invalid_argument("chain map must have degree 0");
  if (!map_.boundary().is_zero()) throw std::invalid_argument("chain-map law violated: d f != f d");
}

ChainMap ChainMap::identity(const ComplexPtr& x) {
  return ChainMap(GradedMap::build(x, x, 0, [&](int n, std::size_t v) {
    return Matrix::identity(x->field(), x->dim(n, v));
  }));
}

ChainMap ChainMap::zero(const ComplexPtr& source, const ComplexPtr& target) {
  return ChainMap(GradedMap::zero(source, target, 0));
}

RepMap ChainMap::at(int n) const {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < source()->vertex_count(); ++v) comps.push_back(component(n, v));
  return RepMap(source()->term(n), target()->term(n), std::move(comps));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) { return ChainMap(compose(g.graded(), f.graded())); }
ChainMap operator+(const ChainMap& a, const ChainMap& b) { return ChainMap(a.graded() + b.graded()); }
ChainMap operator-(const ChainMap& a, const ChainMap& b) { return ChainMap(a.graded() - b.graded()); }
ChainMap operator-(const ChainMap& a) { return ChainMap(-a.graded()); }

Homotopy::Homotopy(ChainMap from, ChainMap to, GradedMap h) : from_(std::move(from)), to_(std::move(to)), h_(std::move(h)) {
  if (h_.degree() != 1) throw std::invalid_argument("homotopy must have degree 1");
  if (!same_complex(from_.source(), to_.source()) || !same_complex(from_.target(), to_.target()) ||
      !same_complex(h_.source(), from_.source()) || !same_complex(h_.target(), from_.target()))
    throw std::invalid_argument("homotopy endpoints have different shapes");
  if (!((to_.graded() - from_.graded()) == h_.boundary()))
    throw std::invalid_argument("homotopy law violated: to - from != dh + hd");
}

Homotopy Homotopy::zero(const ChainMap& f) { return Homotopy(f, f, GradedMap::zero(f.source(), f.target(), 1)); }

Homotopy precompose(const Homotopy& h, const ChainMap& f) {
  return Homotopy(compose(h.from(), f), compose(h.to(), f), compose(h.map(), f.graded()));
}

Homotopy postcompose(const ChainMap& g, const Homotopy& h) {
  return Homotopy(compose(g, h.from()), compose(g, h.to()), compose(g.graded(), h.map()));
}

Homotopy concatenate(const Homotopy& first, const Homotopy& second) {
  if (!(first.to() == second.from())) throw std::invalid_argument("homotopies do not concatenate");
  return Homotopy(first.from(), second.to(), first.map() + second.map());
}

Homotopy reverse(const Homotopy& h) { return Homotopy(h.to(), h.from(), -h.map()); }

// ---------------------------------------------------------------------------

TwistedSum::TwistedSum(std::vector<Summand> summands, std::vector<Twist> twists) : summands_(std::move(summands)) {
  if (summands_.empty()) throw std::invalid_argument("twisted sum needs a summand");
  const QuiverPtr& quiver = summands_.front().complex->quiver();
  const PrimeField field = summands_.front().complex->field();
  const std::size_t nv = quiver->vertex_count();
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& s : summands_) {
    if (!same_quiver(s.complex->quiver(), quiver) || s.complex->field() != field)
      throw std::invalid_argument("twisted sum summands over different quivers or fields");
    if (s.complex->is_zero()) continue;
    if (!any) {
      lo = s.complex->lo() + s.shift;
      hi = s.complex->hi() + s.shift;
      any = true;
    } else {
      lo = std::min(lo, s.complex->lo() + s.shift);
      hi = std::max(hi, s.complex->hi() + s.shift);
    }
  }
  for (const auto& t : twists) {
    if (t.to >= summands_.size() || t.from >= summands_.size()) throw std::invalid_argument("twist index out of range");
    if (!same_complex(t.map.source(), summands_[t.from].complex) || !same_complex(t.map.target(), summands_[t.to].complex))
      throw std::invalid_argument("twist map does not connect its summands");
    if (t.map.degree() != summands_[t.from].shift - summands_[t.to].shift - 1)
      throw std::invalid_argument("twist map has the wrong degree");
  }
  if (!any) {
    total_ = Complex::zero(quiver, field);
    return;
  }

  auto dim_at = [&](int n, std::size_t v) {
    std::size_t d = 0;
    for (const auto& s : summands_) d += s.complex->dim(n - s.shift, v);
    return d;
  };
  auto off = [&](int n, std::size_t v, std::size_t i) {
    std::size_t d = 0;
    for (std::size_t j = 0; j < i; ++j) d += summands_[j].complex->dim(n - summands_[j].shift, v);
    return d;
  };

  std::vector<QuiverRep> terms;
  for (int n = lo; n <= hi; ++n) {
    std::vector<std::size_t> dims(nv);
    for (std::size_t v = 0; v < nv; ++v) dims[v] = dim_at(n, v);
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < quiver->arrow_count(); ++a) {
      const Arrow& ar = quiver->arrow(a);
      Matrix m(field, dims[ar.target], dims[ar.source]);
      for (std::size_t i = 0; i < summands_.size(); ++i) {
        const auto& s = summands_[i];
        m.set_block(off(n, ar.target, i), off(n, ar.source, i), s.complex->term(n - s.shift).arrow_map(a));
      }
      maps.push_back(std::move(m));
    }
    terms.emplace_back(quiver, field, std::move(dims), std::move(maps));
  }
  std::vector<std::vector<Matrix>> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    std::vector<Matrix> per_vertex;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix d(field, dim_at(n - 1, v), dim_at(n, v));
      for (std::size_t i = 0; i < summands_.size(); ++i) {
        const auto& s = summands_[i];
        d.set_block(off(n - 1, v, i), off(n, v, i), s.complex->diff(n - s.shift, v).scaled(sign(s.shift)));
      }
      for (const auto& t : twists) {
        int m = n - summands_[t.from].shift;
        Matrix block = t.map.component(m, v);
        Matrix existing = d.block(off(n - 1, v, t.to), off(n, v, t.from), block.rows(), block.cols());
        d.set_block(off(n - 1, v, t.to), off(n, v, t.from), existing + block);
      }
      per_vertex.push_back(std::move(d));
    }
    diffs.push_back(std::move(per_vertex));
  }
  total_ = Complex::make(quiver, field, lo, std::move(terms), std::move(diffs));
}

std::size_t TwistedSum::offset(int n, std::size_t v, std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < i; ++j) d += summands_[j].complex->dim(n - summands_[j].shift, v);
  return d;
}

GradedMap TwistedSum::inject(std::size_t i) const {
  const auto& s = summands_.at(i);
  return GradedMap::build(s.complex, total_, s.shift, [&](int n, std::size_t v) {
    Matrix m(total_->field(), total_->dim(n + s.shift, v), s.complex->dim(n, v));
    const std::size_t o = offset(n + s.shift, v, i);
    for (std::size_t k = 0; k < m.cols(); ++k) m(o + k, k) = 1;
    return m;
  });
}

GradedMap TwistedSum::project(std::size_t i) const {
  const auto& s = summands_.at(i);
  return GradedMap::build(total_, s.complex, -s.shift, [&](int n, std::size_t v) {
    Matrix m(total_->field(), s.complex->dim(n - s.shift, v), total_->dim(n, v));
    const std::size_t o = offset(n, v, i);
    for (std::size_t k = 0; k < m.rows(); ++k) m(k, o + k) = 1;
    return m;
  });
}

// ---------------------------------------------------------------------------

ComplexPtr shift(const ComplexPtr& x, int k) {
  if (x->is_zero()) return x;
  std::vector<QuiverRep> terms;
  std::vector<std::vector<Matrix>> diffs;
  for (int n = x->lo(); n <= x->hi(); ++n) {
    terms.push_back(x->term(n));
    if (n > x->lo()) {
      std::vector<Matrix> d;
      for (std::size_t v = 0; v < x->vertex_count(); ++v) d.push_back(x->diff(n, v).scaled(sign(k)));
      diffs.push_back(std::move(d));
    }
  }
  return Complex::make(x->quiver(), x->field(), x->lo() + k, std::move(terms), std::move(diffs));
}

ChainMap shift(const ChainMap& f, int k) {
  return ChainMap(f.graded().reinterpret(shift(f.source(), k), shift(f.target(), k), 0));
}

Cone cone(const ChainMap& f) {
  auto sum = std::make_shared<const TwistedSum>(
      std::vector<TwistedSum::Summand>{{f.source(), 1}, {f.target(), 0}},
      std::vector<TwistedSum::Twist>{{1, 0, f.graded()}});
  const ComplexPtr& z = sum->total();
  ChainMap into(sum->inject(1));
  ComplexPtr x1 = shift(f.source(), 1);
  GradedMap out = GradedMap::build(z, x1, 0, [&](int n, std::size_t v) { return sum->project(0).component(n, v); });
  ChainMap outof(std::move(out));
  Homotopy null(ChainMap::zero(f.source(), z), compose(into, f), sum->inject(0));
  return {sum, z, std::move(into), std::move(outof), std::move(null)};
}

Fiber fib(const ChainMap& f) {
  auto sum = std::make_shared<const TwistedSum>(
      std::vector<TwistedSum::Summand>{{f.source(), 0}, {f.target(), -1}},
      std::vector<TwistedSum::Twist>{{1, 0, -f.graded()}});
  const ComplexPtr& w = sum->total();
  ChainMap p(sum->project(0));
  Homotopy null(ChainMap::zero(w, f.target()), compose(f, p), -sum->project(1));
  return {sum, w, std::move(p), std::move(null), f};
}

ChainMap lift_to_fiber(const Fiber& fiber, const ChainMap& u, const Homotopy& h) {
  if (!h.from().is_zero() || !(h.to() == compose(fiber.map, u)))
    throw std::invalid_argument("lift_to_fiber: witness is not a nullhomotopy of g o u");
  return ChainMap(compose(fiber.sum->inject(0), u.graded()) - compose(fiber.sum->inject(1), h.map()));
}

ChainMap descend_from_cofiber(const Cone& cofiber, const ChainMap& v, const Homotopy& h) {
  if (!h.from().is_zero() || !same_complex(h.to().target(), v.target()))
    throw std::invalid_argument("descend_from_cofiber: witness is not a nullhomotopy");
  return ChainMap(compose(v.graded(), cofiber.sum->project(1)) + compose(h.map(), cofiber.sum->project(0)));
}

Pullback homotopy_pullback(const ChainMap& f, const ChainMap& g) {
  if (!same_complex(f.target(), g.target())) throw std::invalid_argument("homotopy_pullback: maps need a common target");
  auto sum = std::make_shared<const TwistedSum>(
      std::vector<TwistedSum::Summand>{{f.source(), 0}, {g.source(), 0}, {f.target(), -1}},
      std::vector<TwistedSum::Twist>{{2, 0, -f.graded()}, {2, 1, g.graded()}});
  const ComplexPtr& w = sum->total();
  ChainMap first(sum->project(0)), second(sum->project(1));
  Homotopy witness(compose(f, first), compose(g, second), sum->project(2));
  return {sum, w, std::move(first), std::move(second), std::move(witness), f, g};
}

Pushout homotopy_pushout(const ChainMap& a, const ChainMap& b) {
  if (!same_complex(a.source(), b.source())) throw std::invalid_argument("homotopy_pushout: maps need a common source");
  auto sum = std::make_shared<const TwistedSum>(
      std::vector<TwistedSum::Summand>{{a.source(), 1}, {a.target(), 0}, {b.target(), 0}},
      std::vector<TwistedSum::Twist>{{1, 0, a.graded()}, {2, 0, -b.graded()}});
  const ComplexPtr& q = sum->total();
  ChainMap first(sum->inject(1)), second(sum->inject(2));
  Homotopy witness(compose(first, a), compose(second, b), -sum->inject(0));
  return {sum, q, std::move(first), std::move(second), std::move(witness), a, b};
}

ChainMap pullback_lift(const Pullback& pb, const ChainMap& u, const ChainMap& v, const Homotopy& h) {
  if (!(h.from() == compose(pb.f, u)) || !(h.to() == compose(pb.g, v)))
    throw std::invalid_argument("pullback_lift: witness does not connect f o u and g o v");
  return ChainMap(compose(pb.sum->inject(0), u.graded()) + compose(pb.sum->inject(1), v.graded()) +
                  compose(pb.sum->inject(2), h.map()));
}

ChainMap pushout_descend(const Pushout& po, const ChainMap& u, const ChainMap& v, const Homotopy& h) {
  if (!(h.from() == compose(u, po.a)) || !(h.to() == compose(v, po.b)))
    throw std::invalid_argument("pushout_descend: witness does not connect u o a and v o b");
  return ChainMap(compose(u.graded(), po.sum->project(1)) + compose(v.graded(), po.sum->project(2)) -
                  compose(h.map(), po.sum->project(0)));
}

void CommutingSquare::validate() const {
  if (!same_complex(top.source(), left.source()) || !same_complex(top.target(), right.source()) ||
      !same_complex(left.target(), bottom.source()) || !same_complex(right.target(), bottom.target()))
    throw std::invalid_argument("square edges do not fit together");
  if (!(witness.from() == compose(right, top)) || !(witness.to() == compose(bottom, left)))
    throw std::invalid_argument("square witness does not connect the two composites");
}

CommutingSquare CommutingSquare::strict(ChainMap top, ChainMap left, ChainMap right, ChainMap bottom) {
  ChainMap a = compose(right, top);
  ChainMap b = compose(bottom, left);
  if (!(a == b)) throw std::invalid_argument("square does not commute strictly");
  Homotopy w = Homotopy::zero(a);
  CommutingSquare sq{std::move(top), std::move(left), std::move(right), std::move(bottom), std::move(w)};
  return sq;
}

CommutingSquare paste_horizontal(const CommutingSquare& first, const CommutingSquare& second) {
  if (!(second.left == first.right)) throw std::invalid_argument("squares do not share an edge");
  Homotopy h = concatenate(precompose(second.witness, first.top), postcompose(second.bottom, first.witness));
  CommutingSquare sq{compose(second.top, first.top), first.left, second.right, compose(second.bottom, first.bottom),
                     std::move(h)};
  sq.validate();
  return sq;
}

PulloutTests pullout_tests(const CommutingSquare& sq) {
  sq.validate();
  Pullback pb = homotopy_pullback(sq.right, sq.bottom);
  ChainMap to_pullback = pullback_lift(pb, sq.top, sq.left, sq.witness);
  Pushout po = homotopy_pushout(sq.top, sq.left);
  ChainMap from_pushout = pushout_descend(po, sq.right, sq.bottom, sq.witness);
  return {is_quasi_iso(to_pullback), is_quasi_iso(from_pushout)};
}

bool is_pullout(const CommutingSquare& sq) {
  PulloutTests t = pullout_tests(sq);
  return t.cartesian && t.cocartesian;
}

Triangle cone_triangle(const ChainMap& f) {
  Cone c = cone(f);
  ChainMap hg = compose(c.outof, c.into);
  Homotopy hg_null(ChainMap::zero(hg.source(), hg.target()), hg, GradedMap::zero(hg.source(), hg.target(), 1));
  return {f, c.into, c.outof, c.into_null, std::move(hg_null)};
}

// ---------------------------------------------------------------------------

namespace {

struct HomologyData {
  std::vector<Matrix> cycles, cycles_inv, projection, section;
  QuiverRep rep;
};

HomologyData homology_data(const ComplexPtr& x, int n) {
  const auto& q = *x->quiver();
  const PrimeField f = x->field();
  std::vector<Matrix> z, zinv, proj, sect;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Matrix zv = kernel_basis(x->diff(n, v));
    Matrix ziv = left_inverse(zv);
    Matrix bc = ziv * x->diff(n + 1, v);
    Quotient qt = quotient(f, zv.cols(), image_basis(bc));
    dims.push_back(qt.section.cols());
    z.push_back(std::move(zv));
    zinv.push_back(std::move(ziv));
    proj.push_back(std::move(qt.projection));
    sect.push_back(std::move(qt.section));
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    maps.push_back(proj[ar.target] * zinv[ar.target] * x->term(n).arrow_map(a) * z[ar.source] * sect[ar.source]);
  }
  QuiverRep rep(x->quiver(), f, std::move(dims), std::move(maps));
  return {std::move(z), std::move(zinv), std::move(proj), std::move(sect), std::move(rep)};
}

}  // namespace

QuiverRep homology(const ComplexPtr& x, int n) { return homology_data(x, n).rep; }

RepMap homology_map(const ChainMap& f, int n) {
  HomologyData s = homology_data(f.source(), n);
  HomologyData t = homology_data(f.target(), n);
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < f.source()->vertex_count(); ++v)
    comps.push_back(t.projection[v] * t.cycles_inv[v] * f.component(n, v) * s.cycles[v] * s.section[v]);
  return RepMap(s.rep, t.rep, std::move(comps));
}

std::vector<std::size_t> homology_dims(const ComplexPtr& x, int n) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < x->vertex_count(); ++v)
    out.push_back(x->dim(n, v) - rank(x->diff(n, v)) - rank(x->diff(n + 1, v)));
  return out;
}

bool has_zero_homology(const ComplexPtr& x, int n) {
  for (auto d : homology_dims(x, n))
    if (d != 0) return false;
  return true;
}

bool is_acyclic(const ComplexPtr& x) {
  if (x->is_zero()) return true;
  const std::size_t nv = x->vertex_count();
  std::vector<std::size_t> prev(nv, 0);  // rank of d_{n} computed on the previous pass
  for (std::size_t v = 0; v < nv; ++v) prev[v] = rank(x->diff(x->hi() + 1, v));
  for (int n = x->hi(); n >= x->lo(); --n) {
    for (std::size_t v = 0; v < nv; ++v) {
      std::size_t r = rank(x->diff(n, v));
      if (x->dim(n, v) != r + prev[v]) return false;
      prev[v] = r;
    }
  }
  return true;
}

std::optional<std::pair<int, int>> homology_support(const ComplexPtr& x) {
  std::optional<int> a, b;
  for (int n = x->lo(); n <= x->hi(); ++n)
    if (!has_zero_homology(x, n)) {
      if (!a) a = n;
      b = n + 1;
    }
  if (!a) return std::nullopt;
  return std::make_pair(*a, *b);
}

bool is_quasi_iso(const ChainMap& f) { return is_acyclic(cone(f).object); }

}  // namespace ntt
