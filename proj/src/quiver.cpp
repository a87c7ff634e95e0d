#include "ntt/quiver.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace ntt {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  const std::size_t n = vertices_.size();
  std::set<std::string> names(vertices_.begin(), vertices_.end());
  if (names.size() != n) throw std::invalid_argument("quiver has duplicate vertex names");
  for (const auto& a : arrows_)
    if (a.source >= n || a.target >= n) throw std::invalid_argument("quiver arrow endpoint out of range");

  // Kahn's algorithm; leftover vertices sit on a cycle.
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& a : arrows_) ++indegree[a.target];
  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& a : arrows_)
      if (a.source == order[i] && --indegree[a.target] == 0) order.push_back(a.target);
  if (order.size() != n) throw std::invalid_argument("quiver has a directed cycle");

  paths_.assign(n * n, {});
  for (std::size_t u = 0; u < n; ++u) {
    paths_[u * n + u].push_back({});
    // Extend in topological order so every prefix is complete first.
    for (std::size_t v : order)
      for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].source == v)
          for (const auto& p : paths_[u * n + v]) {
            auto q = p;
            q.push_back(a);
            paths_[u * n + arrows_[a].target].push_back(std::move(q));
          }
  }
}

std::shared_ptr<const Quiver> Quiver::one_vertex() { return std::make_shared<const Quiver>(std::vector<std::string>{"v"}, std::vector<Arrow>{}); }

std::shared_ptr<const Quiver> Quiver::linear(std::size_t n) {
  std::vector<std::string> names;
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
  for (std::size_t i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
  return std::make_shared<const Quiver>(std::move(names), std::move(arrows));
}

std::size_t Quiver::vertex_index(const std::string& name) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v] == name) return v;
  throw std::out_of_range("unknown quiver vertex '" + name + "'");
}

bool same_quiver(const QuiverPtr& a, const QuiverPtr& b) { return a == b || (a && b && *a == *b); }

QuiverRep::QuiverRep(QuiverPtr quiver, PrimeField field, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps)
    : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)), arrow_maps_(std::move(arrow_maps)) {
  if (!quiver_) throw std::invalid_argument("representation without a quiver");
  if (dims_.size() != quiver_->vertex_count()) throw std::invalid_argument("dimension vector length mismatch");
  if (arrow_maps_.size() != quiver_->arrow_count()) throw std::invalid_argument("arrow map count mismatch");
  for (std::size_t a = 0; a < arrow_maps_.size(); ++a) {
    const Arrow& ar = quiver_->arrow(a);
    const Matrix& m = arrow_maps_[a];
    if (m.field() != field_) throw std::invalid_argument("arrow map over a different field");
    if (m.rows() != dims_[ar.target] || m.cols() != dims_[ar.source])
      throw std::invalid_argument("arrow map shape does not match vertex dimensions");
  }
}

QuiverRep QuiverRep::zero(QuiverPtr quiver, PrimeField field) {
  std::vector<Matrix> maps(quiver->arrow_count(), Matrix(field, 0, 0));
  std::vector<std::size_t> dims(quiver->vertex_count(), 0);
  return QuiverRep(std::move(quiver), field, std::move(dims), std::move(maps));
}

std::size_t QuiverRep::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

Matrix QuiverRep::path_map(const std::vector<std::size_t>& path, std::size_t start) const {
  Matrix m = Matrix::identity(field_, dims_[start]);
  for (std::size_t a : path) m = arrow_maps_[a] * m;
  return m;
}

bool QuiverRep::operator==(const QuiverRep& o) const {
  return same_quiver(quiver_, o.quiver_) && field_ == o.field_ && dims_ == o.dims_ && arrow_maps_ == o.arrow_maps_;
}

bool is_intertwiner(const QuiverRep& source, const QuiverRep& target, const std::vector<Matrix>& components) {
  const auto& q = *source.quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (!(target.arrow_map(a) * components[ar.source] == components[ar.target] * source.arrow_map(a))) return false;
  }
  return true;
}

RepMap::RepMap(QuiverRep source, QuiverRep target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!same_quiver(source_.quiver(), target_.quiver())) throw std::invalid_argument("rep map between different quivers");
  if (components_.size() != source_.quiver()->vertex_count()) throw std::invalid_argument("rep map component count mismatch");
  for (std::size_t v = 0; v < components_.size(); ++v)
    if (components_[v].rows() != target_.dim(v) || components_[v].cols() != source_.dim(v))
      throw std::invalid_argument("rep map component shape mismatch");
  if (!is_intertwiner(source_, target_, components_)) throw std::invalid_argument("intertwiner law violated");
}

RepMap RepMap::zero(const QuiverRep& source, const QuiverRep& target) {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < source.dims().size(); ++v)
    comps.emplace_back(source.field(), target.dim(v), source.dim(v));
  return RepMap(source, target, std::move(comps));
}

RepMap RepMap::identity(const QuiverRep& rep) {
  std::vector<Matrix> comps;
  for (auto d : rep.dims()) comps.push_back(Matrix::identity(rep.field(), d));
  return RepMap(rep, rep, std::move(comps));
}

bool RepMap::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

RepMap compose(const RepMap& g, const RepMap& f) {
  if (!(f.target() == g.source())) throw std::invalid_argument("compose: rep maps not composable");
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < f.components().size(); ++v) comps.push_back(g.component(v) * f.component(v));
  return RepMap(f.source(), g.target(), std::move(comps));
}

RepMap operator+(const RepMap& a, const RepMap& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) throw std::invalid_argument("sum of unrelated rep maps");
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < a.components().size(); ++v) comps.push_back(a.component(v) + b.component(v));
  return RepMap(a.source(), a.target(), std::move(comps));
}

RepMap operator-(const RepMap& a, const RepMap& b) {
  std::vector<Matrix> neg;
  for (const auto& c : b.components()) neg.push_back(-c);
  return a + RepMap(b.source(), b.target(), std::move(neg));
}

HomSpace hom_space(const QuiverRep& a, const QuiverRep& b) {
  if (!same_quiver(a.quiver(), b.quiver())) throw std::invalid_argument("hom space between different quivers");
  const auto& q = *a.quiver();
  const PrimeField f = a.field();
  HomSpace h{{}, 0, Matrix(f, 0, 0), Matrix(f, 0, 0)};
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    h.offsets.push_back(h.ambient);
    h.ambient += b.dim(v) * a.dim(v);
  }
  std::size_t rows = 0;
  for (const auto& ar : q.arrows()) rows += b.dim(ar.target) * a.dim(ar.source);
  // Constraint B_a phi_s - phi_t A_a = 0, one row per entry.
  Matrix c(f, rows, h.ambient);
  std::size_t r0 = 0;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const Arrow& ar = q.arrow(ai);
    const Matrix& am = a.arrow_map(ai);
    const Matrix& bm = b.arrow_map(ai);
    const std::size_t s = ar.source, t = ar.target;
    const std::size_t as = a.dim(s), at = a.dim(t), bt = b.dim(t);
    for (std::size_t i = 0; i < bt; ++i)
      for (std::size_t j = 0; j < as; ++j) {
        std::size_t row = r0 + i * as + j;
        for (std::size_t k = 0; k < b.dim(s); ++k) c(row, h.offsets[s] + k * as + j) = f.add(c(row, h.offsets[s] + k * as + j), bm(i, k));
        for (std::size_t k = 0; k < at; ++k)
          c(row, h.offsets[t] + i * at + k) = f.sub(c(row, h.offsets[t] + i * at + k), am(k, j));
      }
    r0 += bt * as;
  }
  h.basis = kernel_basis(c);
  h.coordinates = left_inverse(h.basis);
  return h;
}

std::vector<RepMap> rep_hom_space(const QuiverRep& a, const QuiverRep& b) {
  HomSpace h = hom_space(a, b);
  std::vector<RepMap> out;
  for (std::size_t j = 0; j < h.dim(); ++j) {
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < a.dims().size(); ++v) {
      Matrix m(a.field(), b.dim(v), a.dim(v));
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = h.basis(h.offsets[v] + r * m.cols() + c, j);
      comps.push_back(std::move(m));
    }
    out.emplace_back(a, b, std::move(comps));
  }
  return out;
}

SubRep sub_rep(const QuiverRep& ambient, std::vector<Matrix> bases) {
  const auto& q = *ambient.quiver();
  std::vector<Matrix> retraction;
  std::vector<std::size_t> dims;
  for (const auto& b : bases) {
    retraction.push_back(left_inverse(b));
    dims.push_back(b.cols());
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix image = ambient.arrow_map(a) * bases[ar.source];
    Matrix induced = retraction[ar.target] * image;
    if (!(bases[ar.target] * induced == image)) throw std::invalid_argument("subspace is not a subrepresentation");
    maps.push_back(std::move(induced));
  }
  return {QuiverRep(ambient.quiver(), ambient.field(), std::move(dims), std::move(maps)), std::move(bases),
          std::move(retraction)};
}

QuotientRep quotient_rep(const QuiverRep& ambient, const std::vector<Matrix>& sub_bases) {
  const auto& q = *ambient.quiver();
  std::vector<Matrix> proj, sect;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Quotient qt = quotient(ambient.field(), ambient.dim(v), sub_bases[v]);
    dims.push_back(qt.section.cols());
    proj.push_back(std::move(qt.projection));
    sect.push_back(std::move(qt.section));
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    maps.push_back(proj[ar.target] * ambient.arrow_map(a) * sect[ar.source]);
  }
  return {QuiverRep(ambient.quiver(), ambient.field(), std::move(dims), std::move(maps)), std::move(proj),
          std::move(sect)};
}

RepKernel rep_kernel(const RepMap& phi) {
  std::vector<Matrix> bases;
  for (const auto& c : phi.components()) bases.push_back(kernel_basis(c));
  SubRep s = sub_rep(phi.source(), std::move(bases));
  RepMap inc(s.rep, phi.source(), s.inclusion);
  return {s.rep, std::move(inc)};
}

RepCokernel rep_cokernel(const RepMap& phi) {
  std::vector<Matrix> bases;
  for (const auto& c : phi.components()) bases.push_back(image_basis(c));
  QuotientRep qr = quotient_rep(phi.target(), bases);
  RepMap proj(phi.target(), qr.rep, qr.projection);
  return {qr.rep, std::move(proj)};
}

DirectSum direct_sum(const QuiverRep& a, const QuiverRep& b) {
  if (!same_quiver(a.quiver(), b.quiver())) throw std::invalid_argument("direct sum over different quivers");
  if (a.field() != b.field()) throw std::invalid_argument("direct sum over different fields");
  const PrimeField f = a.field();
  const std::size_t nv = a.dims().size();
  std::vector<std::size_t> dims(nv);
  for (std::size_t v = 0; v < nv; ++v) dims[v] = a.dim(v) + b.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < a.arrow_maps().size(); ++i) maps.push_back(block_diag(a.arrow_map(i), b.arrow_map(i)));
  QuiverRep sum(a.quiver(), f, dims, std::move(maps));
  std::vector<Matrix> i1, i2, p1, p2;
  for (std::size_t v = 0; v < nv; ++v) {
    Matrix ia(f, dims[v], a.dim(v)), ib(f, dims[v], b.dim(v));
    for (std::size_t k = 0; k < a.dim(v); ++k) ia(k, k) = 1;
    for (std::size_t k = 0; k < b.dim(v); ++k) ib(a.dim(v) + k, k) = 1;
    p1.push_back(ia.transpose());
    p2.push_back(ib.transpose());
    i1.push_back(std::move(ia));
    i2.push_back(std::move(ib));
  }
  return {sum, RepMap(a, sum, i1), RepMap(b, sum, i2), RepMap(sum, a, p1), RepMap(sum, b, p2)};
}

Matrix random_matrix(PrimeField field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, field.p() - 1);
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

QuiverRep random_rep(const QuiverPtr& quiver, PrimeField field, std::size_t max_dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dd(0, max_dim);
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < quiver->vertex_count(); ++v) dims.push_back(dd(rng));
  std::vector<Matrix> maps;
  for (const auto& ar : quiver->arrows()) maps.push_back(random_matrix(field, dims[ar.target], dims[ar.source], rng));
  return QuiverRep(quiver, field, std::move(dims), std::move(maps));
}

}  // namespace ntt
