// Generators and checkers for the suite properties.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "ntt/factorization.hpp"
#include "ntt/hom.hpp"
#include "ntt/linear_system.hpp"
#include "ntt/postnikov.hpp"
#include "ntt/suite.hpp"

namespace ntt {

namespace {

constexpr int kSpan = 4;          // longest support of a generated complex
constexpr int kSmallSpan = 2;     // supports used for lifting squares
constexpr std::size_t kSmallDim = 2;
constexpr std::size_t kOracleTotalDim = 8;
constexpr std::size_t kOracleInstances = 200;
constexpr std::uint64_t kOracleSeed = 0x0dd5eed;

struct Gen {
  const SuiteConfig& cfg;
  QuiverPtr quiver;
  PrimeField field;
  std::mt19937_64 rng;

  ComplexPtr complex(std::size_t max_dim, int span) {
    const int width = cfg.window_hi - cfg.window_lo + 1;
    span = std::min(span, width);
    int len = std::uniform_int_distribution<int>(1, span)(rng);
    int lo = std::uniform_int_distribution<int>(cfg.window_lo, cfg.window_hi - len + 1)(rng);
    return random_complex({quiver, field, lo, lo + len - 1, max_dim}, rng);
  }
  ComplexPtr complex() { return complex(cfg.max_dim, kSpan); }
  ComplexPtr small() { return complex(std::min(cfg.max_dim, kSmallDim), kSmallSpan); }
  ChainMap map(const ComplexPtr& x, const ComplexPtr& y) { return random_chain_map(x, y, rng); }
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
  /// A nonzero representation placed in a single degree.
  ComplexPtr sphere(int degree, std::size_t max_dim) {
    for (;;) {
      QuiverRep r = random_rep(quiver, field, std::max<std::size_t>(max_dim, 1), rng);
      if (!r.is_zero()) return Complex::concentrated(r, degree);
    }
  }
  /// tau_>=n tau_<n+1 of a random complex, an object of the heart of t_n.
  ComplexPtr heart(int n) {
    ComplexPtr x = random_complex({quiver, field, n - 1, n + 1, cfg.max_dim}, rng);
    return truncate_ge(truncate_lt(x, TStructure{n + 1}).object, TStructure{n}).object;
  }
};

struct Property {
  PropertyInfo info;
  bool per_shift;  // one batch of cases for every configured shift
  std::function<std::size_t(const SuiteConfig&)> count;
  std::function<void(Gen&, Document&, std::size_t)> generate;
  std::function<CheckResult(const Document&)> check;
};

TStructure t_of(const Document& doc) {
  TStructure t{doc.params.value("shift", 0), TruncationKind::good};
  if (doc.params.value("truncation", std::string("good")) == "brutal") t.kind = TruncationKind::brutal;
  return t;
}

int kind_of(const Document& doc) { return doc.params.value("kind", 0); }

CheckResult fail(const std::string& why) { return {false, why}; }
CheckResult pass() { return {true, ""}; }

// Collects named boolean checks; the first failure becomes the detail.
struct Checks {
  CheckResult result;
  void require(bool ok, const std::string& what) {
    if (!ok && result.ok) result = fail(what);
  }
};

CommutingSquare fiber_square(const ChainMap& f) {
  Fiber fb = fib(f);
  ComplexPtr zero = Complex::zero(f.source()->quiver(), f.source()->field());
  return {fb.projection, ChainMap::zero(fb.object, zero), f, ChainMap::zero(zero, f.target()), reverse(fb.null)};
}

CommutingSquare zero_square(const Document& d) {
  const auto &w = d.complex("W"), &x = d.complex("X"), &y = d.complex("Y"), &z = d.complex("Z");
  return CommutingSquare::strict(ChainMap::zero(w, x), ChainMap::zero(w, y), ChainMap::zero(x, z), ChainMap::zero(y, z));
}

std::size_t plain(const SuiteConfig& c) { return c.cases; }

// ---------------------------------------------------------------------------

Property pullout_property() {
  return {{"pullout", 1, "cartesian and cocartesian tests agree; fiber squares are pullouts"}, false, plain,
          [](Gen& g, Document& d, std::size_t i) {
            const int kind = static_cast<int>(i % 4);
            d.params["kind"] = kind;
            if (kind == 0) {
              auto x = g.complex(), y = g.complex();
              d.add_complex("X", x);
              d.add_complex("Y", y);
              d.add_map("f", "X", "Y", g.map(x, y));
            } else if (kind == 1) {
              auto x = g.complex(), y = g.complex(), z = g.complex();
              d.add_complex("X", x);
              d.add_complex("Y", y);
              d.add_complex("Z", z);
              d.add_map("f", "X", "Z", g.map(x, z));
              d.add_map("g", "Y", "Z", g.map(y, z));
            } else if (kind == 2) {
              auto w = g.complex(), x = g.complex(), y = g.complex();
              d.add_complex("W", w);
              d.add_complex("X", x);
              d.add_complex("Y", y);
              d.add_map("a", "W", "X", g.map(w, x));
              d.add_map("b", "W", "Y", g.map(w, y));
            } else {
              for (const char* n : {"W", "X", "Y", "Z"}) d.add_complex(n, g.complex());
            }
          },
          [](const Document& d) {
            const int kind = kind_of(d);
            CommutingSquare sq = [&] {
              if (kind == 0) return fiber_square(d.map("f").map);
              if (kind == 1) {
                Pullback pb = homotopy_pullback(d.map("f").map, d.map("g").map);
                return CommutingSquare{pb.first, pb.second, pb.f, pb.g, pb.witness};
              }
              if (kind == 2) {
                Pushout po = homotopy_pushout(d.map("a").map, d.map("b").map);
                return CommutingSquare{po.a, po.b, po.first, po.second, po.witness};
              }
              return zero_square(d);
            }();
            PulloutTests t = pullout_tests(sq);
            Checks c;
            c.require(t.cartesian == t.cocartesian, "cartesian and cocartesian tests disagree");
            if (kind == 0) c.require(t.cartesian && t.cocartesian, "fiber square is not a pullout");
            return c.result;
          }};
}

Property tstructure_property() {
  return {{"t-structure", 2, "orthogonality, shift stability and the truncation fiber sequence"}, true, plain,
          [](Gen& g, Document& d, std::size_t) {
            d.add_complex("X", g.complex());
            d.add_complex("Y", g.complex());
          },
          [](const Document& d) {
            const TStructure t = t_of(d);
            ComplexPtr a = truncate_ge(d.complex("X"), t).object;
            ComplexPtr b = truncate_lt(d.complex("Y"), t).object;
            Checks c;
            c.require(in_coaisle(a, t), "tau_>= X is not in the coaisle");
            c.require(in_aisle(b, t), "tau_< Y is not in the aisle");
            HomComplex h = derived_hom(a, b);
            for (int k = std::max(0, h.lo()); k <= h.hi(); ++k)
              c.require(h.homology_dim(k) == 0, "H_" + std::to_string(k) + " of Hom(tau_>= X, tau_< Y) is nonzero");
            c.require(in_coaisle(shift(a, 1), t), "coaisle is not closed under [1]");
            c.require(in_aisle(shift(b, -1), t), "aisle is not closed under [-1]");
            const ComplexPtr& x = d.complex("X");
            Truncation s = truncate_ge(x, t), r = truncate_lt(x, t);
            ComplexPtr zero = Complex::zero(x->quiver(), x->field());
            ChainMap rs = compose(r.map, s.map);
            ChainMap left = ChainMap::zero(s.object, zero), bottom = ChainMap::zero(zero, r.object);
            CommutingSquare sq{s.map, left, r.map, bottom, witness_between(rs, compose(bottom, left))};
            c.require(is_pullout(sq), "tau_>= X -> X -> tau_< X is not a fiber sequence");
            return c.result;
          }};
}

Property factorization_property() {
  return {{"factorization", 3, "factor(f) gives e in E, m in M, m e ~ f, with Eilenberg-Moore idempotence"}, false,
          plain,
          [](Gen& g, Document& d, std::size_t) {
            auto x = g.complex(), y = g.complex();
            d.add_complex("X", x);
            d.add_complex("Y", y);
            d.add_map("f", "X", "Y", g.map(x, y));
          },
          [](const Document& d) {
            TorsionTheory tt{t_of(d)};
            const ChainMap& f = d.map("f").map;
            Factorization fac = factor(f, tt);
            Checks c;
            c.require(tt.in_E(fac.e), "e_f is not in E");
            c.require(tt.in_M(fac.m), "m_f is not in M");
            c.require(homotopic(compose(fac.m, fac.e), f).has_value(), "m_f o e_f is not homotopic to f");
            c.require(is_quasi_iso(factor(fac.e, tt).m), "m of e_f is not invertible");
            c.require(is_quasi_iso(factor(fac.m, tt).e), "e of m_f is not invertible");
            c.require(is_pullout(factorization_extra_square(fac, tt)), "the extra square is not a pullout");
            return c.result;
          }};
}

std::size_t orth_count(const SuiteConfig& c) { return std::max<std::size_t>(1, c.cases / 2); }
std::size_t nonorth_count(const SuiteConfig& c) { return std::max<std::size_t>(1, c.cases / 5); }

Property orthogonality_property() {
  return {{"orthogonality", 4, "is_orthogonal and the lifting oracle agree on E x M and on constructed failures"},
          false, [](const SuiteConfig& c) { return orth_count(c) + nonorth_count(c); },
          [](Gen& g, Document& d, std::size_t i) {
            const bool orth = i < orth_count(g.cfg);
            d.params["kind"] = orth ? 0 : 1;
            if (orth) {
              auto a = g.small(), b = g.small(), dd = g.small();
              d.add_complex("A", a);
              d.add_complex("B", b);
              d.add_complex("D", dd);
              d.add_map("phi", "A", "B", g.map(a, b));
              d.add_map("g", "B", "D", g.map(b, dd));
            } else {
              d.add_complex("S", g.sphere(d.params.value("shift", 0), kSmallDim));
            }
          },
          [](const Document& d) {
            TorsionTheory tt{t_of(d)};
            Checks c;
            if (kind_of(d) == 0) {
              const ChainMap& phi = d.map("phi").map;
              const ChainMap& gm = d.map("g").map;
              Factorization fp = factor(phi, tt), fg = factor(gm, tt);
              CommutingSquare sq = CommutingSquare::strict(compose(fg.e, phi), fp.e, fg.m, compose(gm, fp.m));
              c.require(is_orthogonal(fp.e, fg.m), "is_orthogonal rejects a pair from E x M");
              LiftingResult l = solve_lifting(sq);
              c.require(l.exists && l.class_dim == 0,
                        "lifting oracle found " + (l.exists ? std::to_string(l.class_dim) + "-dimensional" : "no") +
                            " filler classes");
            } else {
              const ComplexPtr& s = d.complex("S");
              ChainMap e = initial_arrow(s), m = terminal_arrow(s);
              CommutingSquare sq = CommutingSquare::strict(ChainMap::zero(e.source(), s), e, m,
                                                           ChainMap::zero(s, m.target()));
              LiftingResult l = solve_lifting(sq);
              const bool unique = l.exists && l.class_dim == 0;
              c.require(!is_orthogonal(e, m), "is_orthogonal accepts 0 -> S against S -> 0");
              c.require(!unique, "lifting oracle reports a unique filler for 0 -> S against S -> 0");
            }
            return c.result;
          }};
}

Property normality_property() {
  return {{"normality", 5, "all six normality conditions hold"}, true, plain,
          [](Gen& g, Document& d, std::size_t) { d.add_complex("X", g.complex()); },
          [](const Document& d) {
            NormalityReport r = normality_report(d.complex("X"), TorsionTheory{t_of(d)});
            Checks c;
            c.require(r.consistent(), "normality conditions disagree");
            c.require(r.k_in_torsion, "(1) K(X) is not torsion");
            c.require(r.q_in_torsion_free, "(2) Q(X) is not torsion-free");
            c.require(r.both, "(3) fails");
            c.require(r.q_matches_reflection, "(4) Q(X) -> RX is not invertible");
            c.require(r.k_matches_coreflection, "(5) SX -> K(X) is not invertible");
            c.require(r.fiber_sequence, "(6) SX -> X -> RX is not a fiber sequence");
            return c.result;
          }};
}

Property semiexact_property() {
  return {{"semiexact", 6, "SY u_SX X -> RX x_RY Y is a quasi-isomorphism"}, false, plain,
          [](Gen& g, Document& d, std::size_t) {
            auto x = g.complex(), y = g.complex();
            d.add_complex("X", x);
            d.add_complex("Y", y);
            d.add_map("f", "X", "Y", g.map(x, y));
          },
          [](const Document& d) {
            SemiexactResult r = semiexact_check(d.map("f").map, TorsionTheory{t_of(d)});
            Checks c;
            c.require(r.comparison_quasi_iso, "comparison map is not a quasi-isomorphism");
            c.require(r.unit_in_E, "pulled-back unit is not in E");
            return c.result;
          }};
}

std::size_t constructed_qi(const SuiteConfig& c) { return std::max<std::size_t>(1, c.cases / 5); }

Property e_cap_m_property() {
  return {{"e-cap-m", 7, "E n M is exactly the quasi-isomorphisms"}, false,
          [](const SuiteConfig& c) { return c.cases + constructed_qi(c); },
          [](Gen& g, Document& d, std::size_t i) {
            const bool constructed = i >= g.cfg.cases;
            auto x = g.complex();
            d.add_complex("X", x);
            if (!constructed) {
              d.params["kind"] = 0;
              auto y = g.complex();
              d.add_complex("Y", y);
              d.add_map("f", "X", "Y", g.map(x, y));
              return;
            }
            const int kind = 1 + static_cast<int>(i % 3);
            d.params["kind"] = kind;
            if (kind == 1) {
              ProjectiveReplacement p = projective_replacement(x);
              d.add_complex("P", p.object);
              d.add_map("f", "P", "X", p.augmentation);
            } else if (kind == 2) {
              KObject k = k_object(x, TorsionTheory{t_of(d)});
              d.add_complex("S", k.comparison.source());
              d.add_complex("K", k.comparison.target());
              d.add_map("f", "S", "K", k.comparison);
            } else {
              auto w = g.complex();
              d.add_complex("W", w);
              Pushout po = homotopy_pushout(ChainMap::identity(w), g.map(w, x));
              d.add_complex("Q", po.object);
              d.add_map("f", "X", "Q", po.second);
            }
          },
          [](const Document& d) {
            TorsionTheory tt{t_of(d)};
            const ChainMap& f = d.map("f").map;
            const bool both = tt.in_E(f) && tt.in_M(f);
            const bool qi = is_quasi_iso(f);
            Checks c;
            if (kind_of(d) != 0) c.require(qi, "constructed map is not a quasi-isomorphism");
            c.require(both == qi, qi ? "quasi-isomorphism outside E n M" : "map in E n M is not a quasi-isomorphism");
            return c.result;
          }};
}

Property three_for_two_property() {
  return {{"three-for-two", 8, "3-for-2 for E and M, the Sator lemma, and closure under (co)base change"}, false,
          plain,
          [](Gen& g, Document& d, std::size_t i) {
            const int kind = static_cast<int>(i % 4);
            d.params["kind"] = kind;
            TorsionTheory tt{t_of(d)};
            auto x = g.complex(), y = g.complex();
            ChainMap h = g.map(x, y);
            ChainMap f = h, gg = h;
            if (kind == 0) {
              auto z = g.complex();
              gg = g.map(y, z);
            } else if (kind == 1) {
              Factorization fac = factor(h, tt);
              f = fac.e;
              gg = fac.m;
            } else if (kind == 2) {
              Factorization fac = factor(h, tt);
              f = fac.e;
              gg = factor(fac.m, tt).e;
            } else {
              Factorization fac = factor(h, tt);
              f = factor(fac.e, tt).m;
              gg = fac.m;
            }
            d.add_complex("X", f.source());
            d.add_complex("Y", f.target());
            if (!d.find_complex(gg.target())) d.add_complex("Z", gg.target());
            d.add_map("f", "X", "Y", f);
            d.add_map("g", "Y", *d.find_complex(gg.target()), gg);
            auto w = g.complex(), v = g.complex();
            d.add_complex("W", w);
            d.add_complex("V", v);
            d.add_map("u", "X", "W", g.map(f.source(), w));
            d.add_map("v", "V", *d.find_complex(gg.target()), g.map(v, gg.target()));
          },
          [](const Document& d) {
            TorsionTheory tt{t_of(d)};
            const ChainMap& f = d.map("f").map;
            const ChainMap& g = d.map("g").map;
            std::vector<std::pair<ChainMap, ChainMap>> pairs{{f, g}};
            Checks c;
            c.require(three_for_two_check(MorphismClass::E, tt, pairs), "3-for-2 fails for E");
            c.require(three_for_two_check(MorphismClass::M, tt, pairs), "3-for-2 fails for M");
            for (const auto& name : {"X", "Y", "W", "V"})
              c.require(sator_check(d.complex(name), tt), std::string("Sator check fails for ") + name);
            c.require(pushout_closure_check(f, d.map("u").map, tt), "pushout of an E map leaves E");
            c.require(pullback_closure_check(g, d.map("v").map, tt), "pullback of an M map leaves M");
            return c.result;
          }};
}

Property roundtrip_property() {
  return {{"roundtrip", 9, "both roundtrips of the correspondence, and the antitone order"}, true, plain,
          [](Gen& g, Document& d, std::size_t) {
            auto x = g.complex(), y = g.complex();
            d.add_complex("X", x);
            d.add_complex("Y", y);
            d.add_map("f", "X", "Y", g.map(x, y));
            d.params["other_shift"] = g.cfg.shifts[g.pick(g.cfg.shifts.size())];
          },
          [](const Document& d) {
            const TStructure t = t_of(d);
            TorsionTheory tt{t};
            const ChainMap& f = d.map("f").map;
            Checks c;
            c.require(roundtrip_object_check(d.complex("X"), tt), "object roundtrip fails for X");
            c.require(roundtrip_object_check(d.complex("Y"), tt), "object roundtrip fails for Y");
            c.require(roundtrip_morphism_check(f, tt), "morphism roundtrip fails");
            c.require(antitone_check(f, t.n, d.params.value("other_shift", t.n), t.kind), "antitone order fails");
            return c.result;
          }};
}

Property heart_property() {
  return {{"heart", 10, "coim -> im is invertible; heart (co)kernels match the representation level"}, false,
          plain,
          [](Gen& g, Document& d, std::size_t) {
            const int n = d.params.value("shift", 0);
            auto a = g.heart(n), b = g.heart(n);
            d.add_complex("A", a);
            d.add_complex("B", b);
            d.add_map("f", "A", "B", g.map(a, b));
          },
          [](const Document& d) {
            const TStructure t = t_of(d);
            HeartMorphism f(d.map("f").map, t);
            Checks c;
            c.require(heart_comparison(f).is_isomorphism(), "coim -> im is not a quasi-isomorphism");
            RepMap hf = homology_map(f.map(), t.n);
            HeartMorphism k = heart_kernel(f);
            HeartMorphism q = heart_cokernel(f);
            c.require(homology_dims(k.source(), t.n) == rep_kernel(hf).object.dims(), "kernel dimensions differ");
            c.require(homology_dims(q.target(), t.n) == rep_cokernel(hf).object.dims(), "cokernel dimensions differ");
            return c.result;
          }};
}

Property postnikov_property() {
  return {{"postnikov", 11, "towers verify, have the window width as length and enumerate the window"}, false,
          plain,
          [](Gen& g, Document& d, std::size_t) {
            auto x = g.complex(), y = g.complex();
            d.add_complex("X", x);
            d.add_complex("Y", y);
            d.add_map("f", "X", "Y", g.map(x, y));
          },
          [](const Document& d) {
            const ChainMap& f = d.map("f").map;
            Tower tw = postnikov_tower(f);
            auto window = boundedness_window(f);
            Checks c;
            c.require(verify_tower(f, tw), "tower does not verify");
            if (window) {
              c.require(tw.length() == static_cast<std::size_t>(window->width()), "tower length differs from window");
              std::vector<int> ds = tw.degrees;
              std::sort(ds.begin(), ds.end());
              bool exact = ds.size() == static_cast<std::size_t>(window->width());
              for (std::size_t k = 0; exact && k < ds.size(); ++k) exact = ds[k] == window->a + static_cast<int>(k);
              c.require(exact, "stage degrees do not enumerate the window");
              c.require(boundedness_window(tower_composite(tw, f)) == window, "composite has a different window");
            } else {
              c.require(tw.length() == 0, "quasi-isomorphism has a nonempty tower");
            }
            return c.result;
          }};
}

Property oracle_property() {
  return {{"oracle", 12, "Hom-complex homology matches solve-based homotopy-class counts"}, false,
          [](const SuiteConfig& c) { return std::max(kOracleInstances, c.cases); },
          [](Gen& g, Document& d, std::size_t i) {
            // Fixed enumeration: independent of the suite seed.
            std::mt19937_64 rng(case_seed(kOracleSeed, "oracle", i));
            std::uniform_int_distribution<int> lo(-1, 0), len(1, 2);
            for (;;) {
              int l1 = lo(rng), l2 = lo(rng);
              auto x = random_complex({g.quiver, g.field, l1, l1 + len(rng) - 1, 2}, rng);
              auto y = random_complex({g.quiver, g.field, l2, l2 + len(rng) - 1, 2}, rng);
              if (x->total_dim() + y->total_dim() > kOracleTotalDim) continue;
              d.add_complex("X", x);
              d.add_complex("Y", y);
              return;
            }
          },
          [](const Document& d) {
            const ComplexPtr &x = d.complex("X"), &y = d.complex("Y");
            HomComplex h(x, y);
            for (int n = h.lo(); n <= h.hi(); ++n) {
              const std::size_t a = h.homology_dim(n), b = homotopy_class_dim(x, y, n);
              if (a != b)
                return fail("degree " + std::to_string(n) + ": H_n has dimension " + std::to_string(a) +
                            ", the solve-based count is " + std::to_string(b));
            }
            return pass();
          }};
}

const std::vector<Property>& properties() {
  static const std::vector<Property> all{pullout_property(),   tstructure_property(), factorization_property(),
                                         orthogonality_property(), normality_property(), semiexact_property(),
                                         e_cap_m_property(),   three_for_two_property(), roundtrip_property(),
                                         heart_property(),     postnikov_property(),  oracle_property()};
  return all;
}

const Property& find(const std::string& name) {
  for (const auto& p : properties())
    if (p.info.name == name) return p;
  throw std::invalid_argument("unknown property '" + name + "'");
}

}  // namespace

const std::vector<PropertyInfo>& property_list() {
  static const std::vector<PropertyInfo> list = [] {
    std::vector<PropertyInfo> out;
    for (const auto& p : properties()) out.push_back(p.info);
    return out;
  }();
  return list;
}

std::size_t instance_count(const std::string& property, const SuiteConfig& config) {
  const Property& p = find(property);
  return p.count(config) * (p.per_shift ? config.shifts.size() : 1);
}

Document generate_instance(const std::string& property, const SuiteConfig& config, std::size_t index) {
  const Property& p = find(property);
  const std::size_t per = p.count(config);
  const std::size_t local = p.per_shift ? index % per : index;
  const int shift = p.per_shift ? config.shifts[index / per] : config.shifts[index % config.shifts.size()];
  Gen g{config, config.resolve_quiver(), PrimeField(config.prime), std::mt19937_64(case_seed(config.seed, property, index))};
  Document d(g.field, g.quiver);
  d.params["property"] = property;
  d.params["shift"] = shift;
  d.params["truncation"] = config.fault == "brutal-truncation" ? "brutal" : "good";
  p.generate(g, d, local);
  return d;
}

CheckResult check_instance(const std::string& property, const Document& doc) {
  const Property& p = find(property);
  try {
    return p.check(doc);
  } catch (const std::exception& e) {
    return fail(std::string("exception: ") + e.what());
  }
}

}  // namespace ntt
