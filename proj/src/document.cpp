#include "ntt/document.hpp"

#include <algorithm>

namespace ntt {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& msg) { throw DocumentError(DocumentError::Kind::schema, msg); }

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) schema(where + ": missing \"" + key + "\"");
  return j.at(key);
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where + ": expected an integer");
  return j.get<int>();
}

std::vector<std::size_t> as_dims(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) schema(where + ": expected " + std::to_string(n) + " dimensions");
  std::vector<std::size_t> d;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0) schema(where + ": dimensions must be nonnegative integers");
    d.push_back(x.get<std::size_t>());
  }
  return d;
}

template <class F>
auto guarded(const std::string& where, F&& fn) {
  try {
    return fn();
  } catch (const DocumentError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw DocumentError(DocumentError::Kind::invariant, where + ": " + e.what());
  }
}

QuiverRep rep_from_json(const json& j, const Document& doc, const std::string& where) {
  const auto& q = *doc.quiver;
  std::vector<std::size_t> dims = as_dims(require(j, "dims", where), q.vertex_count(), where + ".dims");
  std::vector<Matrix> maps;
  const json empty = json::array();
  const json& arrows = j.contains("arrows") ? j.at("arrows") : empty;
  if (!arrows.is_array() || (arrows.size() != q.arrow_count() && !(arrows.empty() && q.arrow_count() == 0)))
    schema(where + ".arrows: expected one matrix per arrow");
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    maps.push_back(matrix_from_json(arrows[a], doc.field, dims[q.arrow(a).target], dims[q.arrow(a).source],
                                    where + ".arrows[" + std::to_string(a) + "]"));
  return guarded(where, [&] { return QuiverRep(doc.quiver, doc.field, dims, std::move(maps)); });
}

json rep_to_json(const QuiverRep& r) {
  json arrows = json::array();
  for (const auto& m : r.arrow_maps()) arrows.push_back(matrix_to_json(m));
  return {{"dims", r.dims()}, {"arrows", arrows}};
}

std::vector<Matrix> matrices_from_json(const json& j, const Document& doc, const std::vector<std::size_t>& rows,
                                       const std::vector<std::size_t>& cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows.size()) schema(where + ": expected one matrix per vertex");
  std::vector<Matrix> out;
  for (std::size_t v = 0; v < rows.size(); ++v)
    out.push_back(matrix_from_json(j[v], doc.field, rows[v], cols[v], where + "[" + std::to_string(v) + "]"));
  return out;
}

json matrices_to_json(const std::vector<Matrix>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(matrix_to_json(m));
  return a;
}

ComplexPtr complex_from_json(const json& j, const Document& doc, const std::string& where) {
  const json& terms_j = require(j, "terms", where);
  if (!terms_j.is_array()) schema(where + ".terms: expected an array");
  std::map<int, QuiverRep> terms;
  for (std::size_t i = 0; i < terms_j.size(); ++i) {
    const std::string w = where + ".terms[" + std::to_string(i) + "]";
    const json& t = terms_j[i];
    int deg = as_int(require(t, "degree", w), w + ".degree");
    if (terms.count(deg)) schema(w + ": duplicate degree " + std::to_string(deg));
    if (t.contains("rep")) {
      const std::string name = t.at("rep").get<std::string>();
      auto it = doc.reps.find(name);
      if (it == doc.reps.end()) throw DocumentError(DocumentError::Kind::reference, w + ": unknown rep '" + name + "'");
      terms.emplace(deg, it->second);
    } else {
      terms.emplace(deg, rep_from_json(t, doc, w));
    }
  }
  if (terms.empty()) return Complex::zero(doc.quiver, doc.field);
  const int lo = terms.begin()->first, hi = terms.rbegin()->first;
  QuiverRep zero = QuiverRep::zero(doc.quiver, doc.field);
  std::vector<QuiverRep> seq;
  for (int n = lo; n <= hi; ++n) seq.push_back(terms.count(n) ? terms.at(n) : zero);
  const std::size_t nv = doc.quiver->vertex_count();
  std::vector<std::vector<Matrix>> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    std::vector<Matrix> d;
    for (std::size_t v = 0; v < nv; ++v) d.emplace_back(doc.field, seq[n - 1 - lo].dim(v), seq[n - lo].dim(v));
    diffs.push_back(std::move(d));
  }
  if (j.contains("differentials")) {
    const json& dj = j.at("differentials");
    if (!dj.is_array()) schema(where + ".differentials: expected an array");
    for (std::size_t i = 0; i < dj.size(); ++i) {
      const std::string w = where + ".differentials[" + std::to_string(i) + "]";
      int deg = as_int(require(dj[i], "degree", w), w + ".degree");
      if (deg <= lo || deg > hi) schema(w + ": differential degree " + std::to_string(deg) + " outside the support");
      std::vector<std::size_t> rows, cols;
      for (std::size_t v = 0; v < nv; ++v) {
        rows.push_back(seq[deg - 1 - lo].dim(v));
        cols.push_back(seq[deg - lo].dim(v));
      }
      diffs[deg - lo - 1] = matrices_from_json(require(dj[i], "matrices", w), doc, rows, cols, w + ".matrices");
    }
  }
  return guarded(where, [&] { return Complex::make(doc.quiver, doc.field, lo, std::move(seq), std::move(diffs)); });
}

json complex_to_json(const Complex& c) {
  json terms = json::array(), diffs = json::array();
  for (int n = c.lo(); n <= c.hi(); ++n) {
    json t = rep_to_json(c.term(n));
    t["degree"] = n;
    terms.push_back(t);
    if (n > c.lo()) {
      std::vector<Matrix> d;
      for (std::size_t v = 0; v < c.vertex_count(); ++v) d.push_back(c.diff(n, v));
      diffs.push_back({{"degree", n}, {"matrices", matrices_to_json(d)}});
    }
  }
  return {{"terms", terms}, {"differentials", diffs}};
}

GradedMap graded_from_json(const json& j, const Document& doc, const ComplexPtr& src, const ComplexPtr& tgt,
                           int degree, const std::string& where) {
  const std::size_t nv = doc.quiver->vertex_count();
  std::map<int, std::vector<Matrix>> given;
  if (j.contains("components")) {
    const json& cj = j.at("components");
    if (!cj.is_array()) schema(where + ".components: expected an array");
    for (std::size_t i = 0; i < cj.size(); ++i) {
      const std::string w = where + ".components[" + std::to_string(i) + "]";
      int deg = as_int(require(cj[i], "degree", w), w + ".degree");
      if (!src->in_support(deg)) schema(w + ": degree " + std::to_string(deg) + " outside the source support");
      std::vector<std::size_t> rows, cols;
      for (std::size_t v = 0; v < nv; ++v) {
        rows.push_back(tgt->dim(deg + degree, v));
        cols.push_back(src->dim(deg, v));
      }
      given[deg] = matrices_from_json(require(cj[i], "matrices", w), doc, rows, cols, w + ".matrices");
    }
  }
  return guarded(where, [&] {
    return GradedMap::build(src, tgt, degree, [&](int n, std::size_t v) {
      auto it = given.find(n);
      return it != given.end() ? it->second[v] : Matrix(doc.field, tgt->dim(n + degree, v), src->dim(n, v));
    });
  });
}

json graded_to_json(const GradedMap& g) {
  json comps = json::array();
  for (int n = g.source()->lo(); n <= g.source()->hi(); ++n) {
    std::vector<Matrix> ms;
    for (std::size_t v = 0; v < g.source()->vertex_count(); ++v) ms.push_back(g.component(n, v));
    comps.push_back({{"degree", n}, {"matrices", matrices_to_json(ms)}});
  }
  return comps;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const json& j, PrimeField field, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    schema(where + ": expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      schema(where + ": expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number_integer()) schema(where + ": matrix entries must be integers");
      m.set(r, c, j[r][c].get<std::int64_t>());
    }
  }
  return m;
}

const ComplexPtr& Document::complex(const std::string& name) const {
  auto it = complexes.find(name);
  if (it == complexes.end()) throw DocumentError(DocumentError::Kind::reference, "unknown complex '" + name + "'");
  return it->second;
}

const NamedMap& Document::map(const std::string& name) const {
  auto it = maps.find(name);
  if (it == maps.end()) throw DocumentError(DocumentError::Kind::reference, "unknown map '" + name + "'");
  return it->second;
}

void Document::add_complex(const std::string& name, ComplexPtr c) { complexes[name] = std::move(c); }

void Document::add_map(const std::string& name, const std::string& source, const std::string& target, ChainMap f) {
  if (!same_complex(complex(source), f.source()) || !same_complex(complex(target), f.target()))
    throw std::invalid_argument("map '" + name + "' does not match its named endpoints");
  maps.insert_or_assign(name, NamedMap{source, target, std::move(f)});
}

std::optional<std::string> Document::find_complex(const ComplexPtr& c) const {
  for (const auto& [name, x] : complexes)
    if (same_complex(x, c)) return name;
  return std::nullopt;
}

void Document::add_map_with_ends(const std::string& name, ChainMap f) {
  auto ensure = [&](const ComplexPtr& c, const std::string& fallback) {
    if (auto n = find_complex(c)) return *n;
    add_complex(fallback, c);
    return fallback;
  };
  std::string s = ensure(f.source(), name + ".source");
  std::string t = ensure(f.target(), name + ".target");
  add_map(name, s, t, std::move(f));
}

void Document::add_homotopy(const std::string& name, const std::string& from, const std::string& to, Homotopy h) {
  if (!(map(from).map == h.from()) || !(map(to).map == h.to()))
    throw std::invalid_argument("homotopy '" + name + "' does not match its named endpoints");
  homotopies.insert_or_assign(name, NamedHomotopy{from, to, std::move(h)});
}

Document document_from_json(const json& j) {
  if (!j.is_object()) schema("document: expected an object");
  if (j.contains("format_version") && j.at("format_version") != 1)
    schema("document: unsupported format_version " + j.at("format_version").dump());
  std::uint32_t p = 2;
  if (j.contains("prime")) {
    if (!j.at("prime").is_number_unsigned()) schema("prime: expected a positive integer");
    p = j.at("prime").get<std::uint32_t>();
  }
  if (!is_prime(p) || p >= (1u << 16)) schema("prime: " + std::to_string(p) + " is not a supported prime");
  Document doc(PrimeField(p), Quiver::one_vertex());

  if (j.contains("quiver")) {
    const json& q = j.at("quiver");
    const json& vs = require(q, "vertices", "quiver");
    if (!vs.is_array()) schema("quiver.vertices: expected an array of names");
    std::vector<std::string> names;
    for (const auto& v : vs) {
      if (!v.is_string()) schema("quiver.vertices: expected an array of names");
      names.push_back(v.get<std::string>());
    }
    std::vector<Arrow> arrows;
    if (q.contains("arrows")) {
      for (const auto& a : q.at("arrows")) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
          schema("quiver.arrows: expected [source, target] name pairs");
        auto idx = [&](const std::string& n) {
          auto it = std::find(names.begin(), names.end(), n);
          if (it == names.end()) throw DocumentError(DocumentError::Kind::reference, "quiver.arrows: unknown vertex '" + n + "'");
          return static_cast<std::size_t>(it - names.begin());
        };
        arrows.push_back({idx(a[0]), idx(a[1])});
      }
    }
    doc.quiver = guarded("quiver", [&] { return std::make_shared<const Quiver>(names, arrows); });
  }

  if (j.contains("reps"))
    for (const auto& [name, r] : j.at("reps").items()) doc.reps.emplace(name, rep_from_json(r, doc, "reps." + name));
  if (j.contains("complexes"))
    for (const auto& [name, c] : j.at("complexes").items())
      doc.complexes[name] = complex_from_json(c, doc, "complexes." + name);
  if (j.contains("maps"))
    for (const auto& [name, m] : j.at("maps").items()) {
      const std::string w = "maps." + name;
      const std::string s = require(m, "source", w).get<std::string>();
      const std::string t = require(m, "target", w).get<std::string>();
      ComplexPtr src = doc.complex(s), tgt = doc.complex(t);
      GradedMap g = graded_from_json(m, doc, src, tgt, 0, w);
      ChainMap f = guarded(w, [&] { return ChainMap(g); });
      doc.maps.insert_or_assign(name, NamedMap{s, t, std::move(f)});
    }
  if (j.contains("homotopies"))
    for (const auto& [name, h] : j.at("homotopies").items()) {
      const std::string w = "homotopies." + name;
      const std::string from = require(h, "from", w).get<std::string>();
      const std::string to = require(h, "to", w).get<std::string>();
      const ChainMap& f = doc.map(from).map;
      const ChainMap& g = doc.map(to).map;
      GradedMap hm = graded_from_json(h, doc, f.source(), f.target(), 1, w);
      Homotopy hh = guarded(w, [&] { return Homotopy(f, g, hm); });
      doc.homotopies.insert_or_assign(name, NamedHomotopy{from, to, std::move(hh)});
    }
  if (j.contains("params")) doc.params = j.at("params");
  return doc;
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw DocumentError(DocumentError::Kind::syntax,
                        "syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  try {
    return document_from_json(j);
  } catch (const json::exception& e) {
    throw DocumentError(DocumentError::Kind::schema, std::string("malformed document: ") + e.what());
  }
}

json document_to_json(const Document& doc) {
  json j;
  j["format_version"] = 1;
  j["prime"] = doc.field.p();
  json arrows = json::array();
  for (const auto& a : doc.quiver->arrows())
    arrows.push_back({doc.quiver->vertices()[a.source], doc.quiver->vertices()[a.target]});
  j["quiver"] = {{"vertices", doc.quiver->vertices()}, {"arrows", arrows}};
  j["reps"] = json::object();
  for (const auto& [name, r] : doc.reps) j["reps"][name] = rep_to_json(r);
  j["complexes"] = json::object();
  for (const auto& [name, c] : doc.complexes) j["complexes"][name] = complex_to_json(*c);
  j["maps"] = json::object();
  for (const auto& [name, m] : doc.maps)
    j["maps"][name] = {{"source", m.source}, {"target", m.target}, {"components", graded_to_json(m.map.graded())}};
  j["homotopies"] = json::object();
  for (const auto& [name, h] : doc.homotopies)
    j["homotopies"][name] = {{"from", h.from}, {"to", h.to}, {"components", graded_to_json(h.homotopy.map())}};
  j["params"] = doc.params;
  return j;
}

namespace {

// Two-space indentation, except that arrays of scalars (matrix rows, dims,
// vertex lists) stay on one line.
void write_pretty(std::string& out, const json& j, int indent) {
  auto scalar = [](const json& e) { return !e.is_structured(); };
  const std::string pad(indent + 2, ' ');
  if (j.is_array()) {
    if (j.empty() || std::all_of(j.begin(), j.end(), scalar)) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write_pretty(out, j[i], indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      out += pad + json(k).dump() + ": ";
      write_pretty(out, v, indent + 2);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string serialize_document(const Document& doc) {
  std::string out;
  write_pretty(out, document_to_json(doc), 0);
  return out + "\n";
}

}  // namespace ntt
