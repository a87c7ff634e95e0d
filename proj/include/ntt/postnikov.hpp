#pragma once

// Postnikov towers of bounded morphisms for the standard t-structure.

#include <optional>
#include <vector>

#include "ntt/complex.hpp"

namespace ntt {

/// Homology of fib(f) lives in [a, b).
struct BoundWindow {
  int a = 0;
  int b = 0;
  int width() const { return b - a; }
  bool operator==(const BoundWindow&) const = default;
};

/// Minimal window of fib(f); absent when f is a quasi-isomorphism.
std::optional<BoundWindow> boundedness_window(const ChainMap& f);

/// X = Z_0 -> Z_1 -> ... -> Z_{b-a} = Y. Stage k has fiber concentrated in
/// degree degrees[k]; stages are built from the top of the window down, so
/// degrees run b-1, b-2, ..., a. A quasi-isomorphism gets the empty tower.
struct Tower {
  std::optional<BoundWindow> window;
  std::vector<ComplexPtr> objects;
  std::vector<ChainMap> maps;
  std::vector<int> degrees;
  std::optional<Homotopy> witness;  // composite => f

  std::size_t length() const { return maps.size(); }
};

Tower postnikov_tower(const ChainMap& f);

/// Composite homotopic to f, each stage fiber concentrated in its declared
/// degree with the homology of fib(f) there, and the degrees enumerating
/// the minimal window exactly once each.
bool verify_tower(const ChainMap& f, const Tower& tower);

/// The composite Z_0 -> Z_{b-a}; identity of the source for the empty tower.
ChainMap tower_composite(const Tower& tower, const ChainMap& f);

}  // namespace ntt
