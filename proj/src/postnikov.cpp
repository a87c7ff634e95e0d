#include "ntt/postnikov.hpp"

#include <algorithm>
#include <set>

#include "ntt/hom.hpp"
#include "ntt/tstructure.hpp"

namespace ntt {

std::optional<BoundWindow> boundedness_window(const ChainMap& f) {
  auto support = homology_support(fib(f).object);
  if (!support) return std::nullopt;
  return BoundWindow{support->first, support->second};
}

Tower postnikov_tower(const ChainMap& f) {
  Tower tower;
  tower.window = boundedness_window(f);
  if (!tower.window) return tower;
  const int a = tower.window->a, b = tower.window->b;

  tower.objects.push_back(f.source());
  if (b - a == 1) {
    tower.objects.push_back(f.target());
    tower.maps.push_back(f);
  } else {
    // W_{b+1} = cofib(f), W_c = tau_<c W_{c+1}; Z(c) = fib(Y -> W_c).
    Cone cf = cofib(f);
    ChainMap g = cf.into;
    Homotopy g_null = cf.into_null;  // 0 => g o f
    std::optional<Fiber> prev;
    for (int c = b; c >= a + 2; --c) {
      Truncation tr = truncate_lt(g.target(), TStructure{c});
      ChainMap gc = compose(tr.map, g);
      Fiber z = fib(gc);
      if (!prev) {
        tower.maps.push_back(lift_to_fiber(z, f, postcompose(tr.map, g_null)));
      } else {
        tower.maps.push_back(lift_to_fiber(z, prev->projection, postcompose(tr.map, prev->null)));
      }
      tower.objects.push_back(z.object);
      g = gc;
      prev = z;
    }
    tower.maps.push_back(prev->projection);
    tower.objects.push_back(f.target());
  }
  for (int k = 0; k < b - a; ++k) tower.degrees.push_back(b - 1 - k);
  tower.witness = witness_between(tower_composite(tower, f), f);
  return tower;
}

ChainMap tower_composite(const Tower& tower, const ChainMap& f) {
  if (tower.maps.empty()) return ChainMap::identity(f.source());
  ChainMap c = tower.maps.front();
  for (std::size_t k = 1; k < tower.maps.size(); ++k) c = compose(tower.maps[k], c);
  return c;
}

bool verify_tower(const ChainMap& f, const Tower& tower) {
  auto window = boundedness_window(f);
  if (!window) return tower.maps.empty() && is_quasi_iso(f);
  if (tower.maps.size() != static_cast<std::size_t>(window->width())) return false;
  if (tower.degrees.size() != tower.maps.size()) return false;
  if (!same_complex(tower.maps.front().source(), f.source()) || !same_complex(tower.maps.back().target(), f.target()))
    return false;
  for (std::size_t k = 1; k < tower.maps.size(); ++k)
    if (!same_complex(tower.maps[k - 1].target(), tower.maps[k].source())) return false;

  std::set<int> seen;
  for (int d : tower.degrees) {
    if (d < window->a || d >= window->b || !seen.insert(d).second) return false;
  }

  ComplexPtr ff = fib(f).object;
  for (std::size_t k = 0; k < tower.maps.size(); ++k) {
    ComplexPtr stage = fib(tower.maps[k]).object;
    const int d = tower.degrees[k];
    auto support = homology_support(stage);
    if (support && (support->first != d || support->second != d + 1)) return false;
    if (homology_dims(stage, d) != homology_dims(ff, d)) return false;
  }
  return homotopic(tower_composite(tower, f), f).has_value();
}

}  // namespace ntt
