#pragma once

// Assembling linear systems whose unknowns are matrices, from terms of
// the form L * X * R. Used by the brute-force lifting and homotopy-class
// oracles, which work on raw matrix entries instead of Hom-complex bases.

#include <cstdint>
#include <vector>

#include "ntt/complex.hpp"

namespace ntt {

class LinearSystem {
 public:
  explicit LinearSystem(PrimeField field) : field_(field) {}

  std::size_t add_unknown(std::size_t rows, std::size_t cols);
  std::size_t add_equation(std::size_t rows, std::size_t cols);
  /// Adds coeff * L * X * R to the left-hand side of an equation.
  void add_term(std::size_t eq, const Matrix& left, std::size_t unknown, const Matrix& right, std::int64_t coeff = 1);
  /// Adds c to the right-hand side of an equation.
  void add_constant(std::size_t eq, const Matrix& c);

  const PrimeField& field() const { return field_; }
  std::size_t unknown_count() const { return unknown_total_; }
  std::size_t equation_count() const { return equation_total_; }
  Matrix matrix() const;
  Matrix rhs() const;
  /// Reads the value of one unknown out of a solution column.
  Matrix value(std::size_t unknown, const Matrix& solution) const;

 private:
  struct Block {
    std::size_t offset, rows, cols;
  };
  struct Entry {
    std::size_t row, col;
    std::uint32_t value;
  };

  PrimeField field_;
  std::vector<Block> unknowns_;
  std::vector<Block> equations_;
  std::size_t unknown_total_ = 0;
  std::size_t equation_total_ = 0;
  std::vector<Entry> entries_;
  std::vector<Entry> constants_;
};

/// A graded map X -> Y of fixed degree whose matrix entries are unknowns,
/// one block per source degree and vertex.
struct GradedUnknown {
  ComplexPtr source, target;
  int degree = 0;
  std::vector<std::vector<std::size_t>> ids;  // [n - source.lo][v]
};

/// One block of equations per source degree and vertex.
struct GradedEquation {
  ComplexPtr source, target;
  int degree = 0;
  std::vector<std::vector<std::size_t>> ids;
};

/// With `intertwiner` set, the intertwiner law is added as equations.
GradedUnknown add_graded_unknown(LinearSystem& sys, ComplexPtr source, ComplexPtr target, int degree,
                                 bool intertwiner = true);
GradedEquation add_graded_equation(LinearSystem& sys, ComplexPtr source, ComplexPtr target, int degree);
/// coeff * left o X o right, where absent maps stand for identities.
void add_graded_term(LinearSystem& sys, const GradedEquation& eq, const GradedMap* left, const GradedUnknown& x,
                     const GradedMap* right, std::int64_t coeff = 1);
/// coeff * (d X - (-1)^deg X d).
void add_graded_boundary(LinearSystem& sys, const GradedEquation& eq, const GradedUnknown& x, std::int64_t coeff = 1);
void add_graded_constant(LinearSystem& sys, const GradedEquation& eq, const GradedMap& c);
GradedMap graded_value(const LinearSystem& sys, const GradedUnknown& x, const Matrix& solution);

/// Dimension of the space of chain-homotopy classes of chain maps X[n] -> Y,
/// computed from raw entries: dim(chain maps) - dim(null-homotopic maps).
std::size_t homotopy_class_dim(const ComplexPtr& x, const ComplexPtr& y, int n);

}  // namespace ntt
