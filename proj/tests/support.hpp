#pragma once

// Builders and brute-force oracles shared by the unit tests. The oracles use
// only matrix multiplication and exhaustive enumeration over F_p; nothing
// here calls the library's elimination routines.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ntt/complex.hpp"

namespace ntt::test {

inline Matrix mat(PrimeField f, std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, entries.at(i * cols + j));
  return m;
}

inline QuiverRep vec_rep(PrimeField f, std::size_t dim) { return QuiverRep(Quiver::one_vertex(), f, {dim}, {}); }

/// One-vertex complex with terms of the given dimensions starting at `lo`;
/// diffs[k] is d_{lo+k+1}.
inline ComplexPtr chain(PrimeField f, int lo, const std::vector<std::size_t>& dims, std::vector<Matrix> diffs) {
  std::vector<QuiverRep> terms;
  for (auto d : dims) terms.push_back(vec_rep(f, d));
  std::vector<std::vector<Matrix>> ds;
  for (auto& m : diffs) ds.push_back({std::move(m)});
  return Complex::make(Quiver::one_vertex(), f, lo, std::move(terms), std::move(ds));
}

inline ComplexPtr sphere(PrimeField f, int degree, std::size_t dim = 1) {
  return Complex::concentrated(vec_rep(f, dim), degree);
}

/// A2 = (1 -> 2) representations.
inline QuiverRep a2_rep(PrimeField f, std::size_t d1, std::size_t d2, const Matrix& arrow) {
  return QuiverRep(Quiver::linear(2), f, {d1, d2}, {arrow});
}

/// Calls visit(v) for every vector of F_p^n.
inline void for_each_vector(std::uint32_t p, std::size_t n, const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::uint32_t> v(n, 0);
  for (;;) {
    visit(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) return;
  }
}

/// Exact log base p of a count that is known to be a power of p.
inline std::size_t log_p(std::size_t count, std::uint32_t p) {
  std::size_t k = 0;
  while (count > 1) {
    if (count % p != 0) throw std::logic_error("count is not a power of p");
    count /= p;
    ++k;
  }
  return k;
}

inline Matrix column_of(PrimeField f, const std::vector<std::uint32_t>& v) {
  Matrix m(f, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

inline std::size_t brute_kernel_dim(const Matrix& m) {
  std::size_t count = 0;
  for_each_vector(m.field().p(), m.cols(), [&](const auto& v) { count += (m * column_of(m.field(), v)).is_zero(); });
  return log_p(count, m.field().p());
}

/// Matrices of a fixed shape list, filled from one flat coordinate vector.
inline std::vector<Matrix> unflatten(PrimeField f, const std::vector<std::pair<std::size_t, std::size_t>>& shapes,
                                     const std::vector<std::uint32_t>& flat) {
  std::vector<Matrix> out;
  std::size_t pos = 0;
  for (auto [r, c] : shapes) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = flat[pos++];
    out.push_back(std::move(m));
  }
  return out;
}

inline bool commutes(const QuiverRep& a, const QuiverRep& b, const std::vector<Matrix>& comps) {
  const auto& q = *a.quiver();
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& ar = q.arrow(k);
    if (!(b.arrow_map(k) * comps[ar.source] == comps[ar.target] * a.arrow_map(k))) return false;
  }
  return true;
}

inline std::size_t brute_intertwiner_dim(const QuiverRep& a, const QuiverRep& b) {
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  std::size_t n = 0;
  for (std::size_t v = 0; v < a.dims().size(); ++v) {
    shapes.emplace_back(b.dim(v), a.dim(v));
    n += b.dim(v) * a.dim(v);
  }
  std::size_t count = 0;
  for_each_vector(a.field().p(), n, [&](const auto& flat) { count += commutes(a, b, unflatten(a.field(), shapes, flat)); });
  return log_p(count, a.field().p());
}

/// Degree-k graded intertwiners X -> Y, stored per (source degree, vertex).
struct BruteGraded {
  int k;
  std::map<std::pair<int, std::size_t>, Matrix> comps;
};

class BruteHom {
 public:
  BruteHom(ComplexPtr x, ComplexPtr y) : x_(std::move(x)), y_(std::move(y)) {}

  std::size_t ambient(int k) const {
    std::size_t n = 0;
    for (int i = x_->lo(); i <= x_->hi(); ++i)
      for (std::size_t v = 0; v < x_->vertex_count(); ++v) n += y_->dim(i + k, v) * x_->dim(i, v);
    return n;
  }

  /// Visits every degree-k family of per-vertex matrices that intertwines
  /// the quiver action in each degree.
  void for_each(int k, const std::function<void(const BruteGraded&)>& visit) const {
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    for (int i = x_->lo(); i <= x_->hi(); ++i)
      for (std::size_t v = 0; v < x_->vertex_count(); ++v) shapes.emplace_back(y_->dim(i + k, v), x_->dim(i, v));
    const PrimeField f = x_->field();
    for_each_vector(f.p(), ambient(k), [&](const auto& flat) {
      std::vector<Matrix> ms = unflatten(f, shapes, flat);
      BruteGraded g{k, {}};
      std::size_t pos = 0;
      for (int i = x_->lo(); i <= x_->hi(); ++i) {
        std::vector<Matrix> at;
        for (std::size_t v = 0; v < x_->vertex_count(); ++v) at.push_back(ms[pos++]);
        if (!commutes(x_->term(i), y_->term(i + k), at)) return;
        for (std::size_t v = 0; v < at.size(); ++v) g.comps.emplace(std::make_pair(i, v), at[v]);
      }
      visit(g);
    });
  }

  Matrix component(const BruteGraded& g, int i, std::size_t v) const {
    auto it = g.comps.find({i, v});
    if (it != g.comps.end()) return it->second;
    return Matrix(x_->field(), y_->dim(i + g.k, v), x_->dim(i, v));
  }

  /// D(g) = d g - (-1)^k g d, as a flat key over source degrees lo..hi+1.
  std::vector<std::uint32_t> boundary_key(const BruteGraded& g) const {
    std::vector<std::uint32_t> key;
    const std::int64_t sign = (g.k % 2 == 0) ? 1 : -1;
    for (int i = x_->lo(); i <= x_->hi() + 1; ++i)
      for (std::size_t v = 0; v < x_->vertex_count(); ++v) {
        Matrix a = y_->diff(i + g.k, v) * component(g, i, v);
        Matrix b = component(g, i - 1, v) * x_->diff(i, v);
        Matrix d = a - b.scaled(sign);
        key.insert(key.end(), d.data().begin(), d.data().end());
      }
    return key;
  }

  std::vector<std::uint32_t> flat_key(const BruteGraded& g) const {
    std::vector<std::uint32_t> key;
    for (const auto& [pos, m] : g.comps) key.insert(key.end(), m.data().begin(), m.data().end());
    return key;
  }

  /// log_p of (#cycles of degree k) / (#boundaries of degree k+1 elements).
  std::size_t homology_dim(int k) const {
    std::size_t cycles = 0;
    for_each(k, [&](const BruteGraded& g) {
      const auto key = boundary_key(g);
      cycles += std::all_of(key.begin(), key.end(), [](std::uint32_t e) { return e == 0; });
    });
    std::set<std::vector<std::uint32_t>> boundaries;
    for_each(k + 1, [&](const BruteGraded& h) { boundaries.insert(boundary_key(h)); });
    const std::uint32_t p = x_->field().p();
    return log_p(cycles, p) - log_p(boundaries.size(), p);
  }

 private:
  ComplexPtr x_, y_;
};

/// Homology of a complex by enumerating cycles and boundaries.
inline std::size_t brute_homology_dim(const ComplexPtr& x, int n) {
  const PrimeField f = x->field();
  std::size_t total = 0;
  for (std::size_t v = 0; v < x->vertex_count(); ++v) {
    const Matrix& dn = x->diff(n, v);
    const Matrix& dn1 = x->diff(n + 1, v);
    std::size_t cycles = 0;
    for_each_vector(f.p(), x->dim(n, v), [&](const auto& c) { cycles += (dn * column_of(f, c)).is_zero(); });
    std::set<std::vector<std::uint32_t>> bounds;
    for_each_vector(f.p(), x->dim(n + 1, v), [&](const auto& c) { bounds.insert((dn1 * column_of(f, c)).data()); });
    total += log_p(cycles, f.p()) - log_p(bounds.size(), f.p());
  }
  return total;
}

}  // namespace ntt::test
