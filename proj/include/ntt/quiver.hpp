#pragma once

// Finite acyclic quivers and their representations over F_p.

#include <cstddef>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ntt/linalg.hpp"

namespace ntt {

struct Arrow {
  std::size_t source;
  std::size_t target;
  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  /// Throws std::invalid_argument on unknown endpoints, duplicate vertex
  /// names or a directed cycle.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  static std::shared_ptr<const Quiver> one_vertex();
  /// The A_n quiver 1 -> 2 -> ... -> n.
  static std::shared_ptr<const Quiver> linear(std::size_t n);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_[a]; }
  /// Throws std::out_of_range for an unknown name.
  std::size_t vertex_index(const std::string& name) const;

  /// Paths from u to w as arrow sequences (first arrow first). The trivial
  /// path at u is the empty sequence.
  const std::vector<std::vector<std::size_t>>& paths(std::size_t u, std::size_t w) const {
    return paths_[u * vertices_.size() + w];
  }

  bool operator==(const Quiver& o) const { return vertices_ == o.vertices_ && arrows_ == o.arrows_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::vector<std::size_t>>> paths_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

bool same_quiver(const QuiverPtr& a, const QuiverPtr& b);

class QuiverRep {
 public:
  /// Validates matrix shapes against the dimension vector.
  QuiverRep(QuiverPtr quiver, PrimeField field, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps);

  static QuiverRep zero(QuiverPtr quiver, PrimeField field);

  const QuiverPtr& quiver() const { return quiver_; }
  const PrimeField& field() const { return field_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const std::vector<Matrix>& arrow_maps() const { return arrow_maps_; }
  const Matrix& arrow_map(std::size_t a) const { return arrow_maps_[a]; }
  /// Composite of arrow maps along a path.
  Matrix path_map(const std::vector<std::size_t>& path, std::size_t start) const;

  bool operator==(const QuiverRep& o) const;

 private:
  QuiverPtr quiver_;
  PrimeField field_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> arrow_maps_;
};

/// Intertwiner; the constructor checks the commutation law exactly.
class RepMap {
 public:
  RepMap(QuiverRep source, QuiverRep target, std::vector<Matrix> components);

  static RepMap zero(const QuiverRep& source, const QuiverRep& target);
  static RepMap identity(const QuiverRep& rep);

  const QuiverRep& source() const { return source_; }
  const QuiverRep& target() const { return target_; }
  const std::vector<Matrix>& components() const { return components_; }
  const Matrix& component(std::size_t v) const { return components_[v]; }
  bool is_zero() const;

  bool operator==(const RepMap& o) const = default;

 private:
  QuiverRep source_;
  QuiverRep target_;
  std::vector<Matrix> components_;
};

RepMap compose(const RepMap& g, const RepMap& f);
RepMap operator+(const RepMap& a, const RepMap& b);
RepMap operator-(const RepMap& a, const RepMap& b);

/// True when the per-vertex matrices commute with every arrow.
bool is_intertwiner(const QuiverRep& source, const QuiverRep& target, const std::vector<Matrix>& components);

/// Space of intertwiners A -> B. Elements are flattened per vertex in
/// vertex order, each vertex block row-major (rows = dim B_v).
struct HomSpace {
  std::vector<std::size_t> offsets;  // start of each vertex block in a flat vector
  std::size_t ambient = 0;           // sum of dim B_v * dim A_v
  Matrix basis;                      // ambient x dim, columns are intertwiners
  Matrix coordinates;                // dim x ambient, left inverse of basis
  std::size_t dim() const { return basis.cols(); }
};

HomSpace hom_space(const QuiverRep& a, const QuiverRep& b);
std::vector<RepMap> rep_hom_space(const QuiverRep& a, const QuiverRep& b);

/// Induced representation on per-vertex subspaces (columns) stable under
/// the arrows, with their left inverses.
struct SubRep {
  QuiverRep rep;
  std::vector<Matrix> inclusion;  // dim A_v x dim S_v
  std::vector<Matrix> retraction; // left inverses of inclusion
};
SubRep sub_rep(const QuiverRep& ambient, std::vector<Matrix> bases);

struct QuotientRep {
  QuiverRep rep;
  std::vector<Matrix> projection;
  std::vector<Matrix> section;
};
QuotientRep quotient_rep(const QuiverRep& ambient, const std::vector<Matrix>& sub_bases);

struct RepKernel {
  QuiverRep object;
  RepMap inclusion;
};
struct RepCokernel {
  QuiverRep object;
  RepMap projection;
};

RepKernel rep_kernel(const RepMap& phi);
RepCokernel rep_cokernel(const RepMap& phi);

struct DirectSum {
  QuiverRep object;
  RepMap inject_first, inject_second;
  RepMap project_first, project_second;
};
/// Throws std::invalid_argument on a quiver or field mismatch.
DirectSum direct_sum(const QuiverRep& a, const QuiverRep& b);

QuiverRep random_rep(const QuiverPtr& quiver, PrimeField field, std::size_t max_dim, std::mt19937_64& rng);
Matrix random_matrix(PrimeField field, std::size_t rows, std::size_t cols, std::mt19937_64& rng);

}  // namespace ntt
