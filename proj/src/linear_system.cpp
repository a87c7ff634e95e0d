#include "ntt/linear_system.hpp"

#include <stdexcept>

namespace ntt {

std::size_t LinearSystem::add_unknown(std::size_t rows, std::size_t cols) {
  unknowns_.push_back({unknown_total_, rows, cols});
  unknown_total_ += rows * cols;
  return unknowns_.size() - 1;
}

std::size_t LinearSystem::add_equation(std::size_t rows, std::size_t cols) {
  equations_.push_back({equation_total_, rows, cols});
  equation_total_ += rows * cols;
  return equations_.size() - 1;
}

void LinearSystem::add_term(std::size_t eq, const Matrix& left, std::size_t unknown, const Matrix& right,
                            std::int64_t coeff) {
  const Block& e = equations_.at(eq);
  const Block& u = unknowns_.at(unknown);
  if (left.rows() != e.rows || left.cols() != u.rows || right.rows() != u.cols || right.cols() != e.cols)
    throw std::invalid_argument("linear system term shape mismatch");
  const std::uint32_t c = field_.reduce(coeff);
  // Entry (i, j) of L X R has coefficient L(i, a) R(b, j) on X(a, b).
  for (std::size_t i = 0; i < e.rows; ++i)
    for (std::size_t a = 0; a < u.rows; ++a) {
      const std::uint32_t l = field_.mul(c, left(i, a));
      if (l == 0) continue;
      for (std::size_t b = 0; b < u.cols; ++b)
        for (std::size_t j = 0; j < e.cols; ++j) {
          const std::uint32_t r = right(b, j);
          if (r == 0) continue;
          entries_.push_back({e.offset + i * e.cols + j, u.offset + a * u.cols + b, field_.mul(l, r)});
        }
    }
}

void LinearSystem::add_constant(std::size_t eq, const Matrix& c) {
  const Block& e = equations_.at(eq);
  if (c.rows() != e.rows || c.cols() != e.cols) throw std::invalid_argument("linear system constant shape mismatch");
  for (std::size_t i = 0; i < e.rows; ++i)
    for (std::size_t j = 0; j < e.cols; ++j)
      if (c(i, j) != 0) constants_.push_back({e.offset + i * e.cols + j, 0, c(i, j)});
}

Matrix LinearSystem::matrix() const {
  Matrix m(field_, equation_total_, unknown_total_);
  for (const auto& e : entries_) m(e.row, e.col) = field_.add(m(e.row, e.col), e.value);
  return m;
}

Matrix LinearSystem::rhs() const {
  Matrix m(field_, equation_total_, 1);
  for (const auto& e : constants_) m(e.row, 0) = field_.add(m(e.row, 0), e.value);
  return m;
}

Matrix LinearSystem::value(std::size_t unknown, const Matrix& solution) const {
  const Block& u = unknowns_.at(unknown);
  Matrix m(field_, u.rows, u.cols);
  for (std::size_t a = 0; a < u.rows; ++a)
    for (std::size_t b = 0; b < u.cols; ++b) m(a, b) = solution(u.offset + a * u.cols + b, 0);
  return m;
}

// ---------------------------------------------------------------------------

GradedUnknown add_graded_unknown(LinearSystem& sys, ComplexPtr source, ComplexPtr target, int degree,
                                 bool intertwiner) {
  GradedUnknown x{source, target, degree, {}};
  const Quiver& q = *source->quiver();
  const PrimeField f = sys.field();
  for (int n = source->lo(); n <= source->hi(); ++n) {
    std::vector<std::size_t> row;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
      row.push_back(sys.add_unknown(target->dim(n + degree, v), source->dim(n, v)));
    if (intertwiner) {
      const QuiverRep& a = source->term(n);
      const QuiverRep& b = target->term(n + degree);
      for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
        const Arrow& ar = q.arrow(ai);
        std::size_t eq = sys.add_equation(b.dim(ar.target), a.dim(ar.source));
        sys.add_term(eq, b.arrow_map(ai), row[ar.source], Matrix::identity(f, a.dim(ar.source)));
        sys.add_term(eq, Matrix::identity(f, b.dim(ar.target)), row[ar.target], a.arrow_map(ai), -1);
      }
    }
    x.ids.push_back(std::move(row));
  }
  return x;
}

GradedEquation add_graded_equation(LinearSystem& sys, ComplexPtr source, ComplexPtr target, int degree) {
  GradedEquation e{source, target, degree, {}};
  for (int n = source->lo(); n <= source->hi(); ++n) {
    std::vector<std::size_t> row;
    for (std::size_t v = 0; v < source->vertex_count(); ++v)
      row.push_back(sys.add_equation(target->dim(n + degree, v), source->dim(n, v)));
    e.ids.push_back(std::move(row));
  }
  return e;
}

void add_graded_term(LinearSystem& sys, const GradedEquation& eq, const GradedMap* left, const GradedUnknown& x,
                     const GradedMap* right, std::int64_t coeff) {
  const int r = right ? right->degree() : 0;
  const int l = left ? left->degree() : 0;
  if (l + x.degree + r != eq.degree) throw std::invalid_argument("graded term has the wrong degree");
  const ComplexPtr& mid_src = right ? right->target() : eq.source;
  const ComplexPtr& mid_tgt = left ? left->source() : eq.target;
  if (!same_complex(mid_src, x.source) || !same_complex(mid_tgt, x.target) ||
      (right && !same_complex(right->source(), eq.source)) || (left && !same_complex(left->target(), eq.target)))
    throw std::invalid_argument("graded term does not fit the equation");
  const PrimeField f = sys.field();
  for (int n = eq.source->lo(); n <= eq.source->hi(); ++n) {
    const int m = n + r;
    if (!x.source->in_support(m)) continue;
    for (std::size_t v = 0; v < eq.source->vertex_count(); ++v) {
      Matrix rm = right ? right->component(n, v) : Matrix::identity(f, eq.source->dim(n, v));
      Matrix lm = left ? left->component(m + x.degree, v) : Matrix::identity(f, eq.target->dim(n + eq.degree, v));
      sys.add_term(eq.ids[n - eq.source->lo()][v], lm, x.ids[m - x.source->lo()][v], rm, coeff);
    }
  }
}

void add_graded_boundary(LinearSystem& sys, const GradedEquation& eq, const GradedUnknown& x, std::int64_t coeff) {
  GradedMap dt = GradedMap::differential(x.target);
  GradedMap ds = GradedMap::differential(x.source);
  add_graded_term(sys, eq, &dt, x, nullptr, coeff);
  add_graded_term(sys, eq, nullptr, x, &ds, (x.degree % 2 == 0) ? -coeff : coeff);
}

void add_graded_constant(LinearSystem& sys, const GradedEquation& eq, const GradedMap& c) {
  if (c.degree() != eq.degree || !same_complex(c.source(), eq.source) || !same_complex(c.target(), eq.target))
    throw std::invalid_argument("graded constant does not fit the equation");
  for (int n = eq.source->lo(); n <= eq.source->hi(); ++n)
    for (std::size_t v = 0; v < eq.source->vertex_count(); ++v)
      sys.add_constant(eq.ids[n - eq.source->lo()][v], c.component(n, v));
}

GradedMap graded_value(const LinearSystem& sys, const GradedUnknown& x, const Matrix& solution) {
  return GradedMap::build(x.source, x.target, x.degree,
                          [&](int n, std::size_t v) { return sys.value(x.ids[n - x.source->lo()][v], solution); });
}

std::size_t homotopy_class_dim(const ComplexPtr& x, const ComplexPtr& y, int n) {
  ComplexPtr xs = shift(x, n);
  const PrimeField f = x->field();

  // Chain maps: intertwiners with d f - f d = 0.
  LinearSystem maps(f);
  GradedUnknown fu = add_graded_unknown(maps, xs, y, 0);
  GradedEquation law = add_graded_equation(maps, xs, y, -1);
  add_graded_boundary(maps, law, fu);
  const std::size_t cycles = maps.unknown_count() - rank(maps.matrix());

  // Null-homotopic maps: image of intertwining h under h -> dh + hd.
  LinearSystem hs(f);
  add_graded_unknown(hs, xs, y, 1);
  Matrix h_space = kernel_basis(hs.matrix());
  LinearSystem image(f);
  GradedUnknown hu = add_graded_unknown(image, xs, y, 1, false);
  GradedEquation out = add_graded_equation(image, xs, y, 0);
  add_graded_boundary(image, out, hu);
  Matrix boundaries = image.matrix() * h_space;
  return cycles - rank(boundaries);
}

}  // namespace ntt
