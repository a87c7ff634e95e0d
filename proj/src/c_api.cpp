#include "ntt/ntt.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ntt/factorization.hpp"
#include "ntt/postnikov.hpp"
#include "ntt/suite.hpp"

struct ntt_document {
  ntt::Document doc;
};

struct ntt_report {
  ntt::Report report;
};

namespace {

thread_local std::string last_error;

ntt_status set_error(ntt_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
ntt_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return NTT_OK;
  } catch (const ntt::DocumentError& e) {
    switch (e.kind()) {
      case ntt::DocumentError::Kind::syntax:
        return set_error(NTT_ERR_SYNTAX, e.what());
      case ntt::DocumentError::Kind::schema:
        return set_error(NTT_ERR_SCHEMA, e.what());
      case ntt::DocumentError::Kind::invariant:
        return set_error(NTT_ERR_INVARIANT, e.what());
      case ntt::DocumentError::Kind::reference:
        return set_error(NTT_ERR_REFERENCE, e.what());
    }
    return set_error(NTT_ERR_INTERNAL, e.what());
  } catch (const nlohmann::json::parse_error& e) {
    return set_error(NTT_ERR_SYNTAX, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(NTT_ERR_ARGUMENT, e.what());
  } catch (const std::ios_base::failure& e) {
    return set_error(NTT_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return set_error(NTT_ERR_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure(std::string("cannot read '") + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A new document over the same field and quiver as `from`.
ntt::Document derived_document(const ntt::Document& from) { return ntt::Document(from.field, from.quiver); }

void copy_complex(ntt::Document& to, const ntt::Document& from, const std::string& name) {
  to.add_complex(name, from.complex(name));
}

void copy_map(ntt::Document& to, const ntt::Document& from, const std::string& name) {
  const ntt::NamedMap& m = from.map(name);
  if (!to.complexes.count(m.source)) copy_complex(to, from, m.source);
  if (!to.complexes.count(m.target)) copy_complex(to, from, m.target);
  to.add_map(name, m.source, m.target, m.map);
}

}  // namespace

extern "C" {

const char* ntt_version(void) { return "1.0.0"; }

const char* ntt_last_error(void) { return last_error.c_str(); }

void ntt_string_free(char* s) { std::free(s); }

ntt_status ntt_document_parse(const char* text, ntt_document** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new ntt_document{ntt::parse_document(text)};
  });
}

ntt_status ntt_document_load(const char* path, ntt_document** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new ntt_document{ntt::parse_document(read_file(path))};
  });
}

void ntt_document_free(ntt_document* doc) { delete doc; }

ntt_status ntt_document_serialize(const ntt_document* doc, char** out) {
  return guarded([&] {
    require(doc, "doc");
    require(out, "out");
    *out = dup(ntt::serialize_document(doc->doc));
  });
}

ntt_status ntt_factor(const ntt_document* doc, const char* map, int shift, ntt_document** out) {
  return guarded([&] {
    require(doc, "doc");
    require(map, "map");
    require(out, "out");
    const std::string name = map;
    const ntt::Document& in = doc->doc;
    ntt::TorsionTheory tt{ntt::TStructure{shift}};
    ntt::Factorization fac = ntt::factor(in.map(name).map, tt);
    ntt::Document d = derived_document(in);
    copy_map(d, in, name);
    d.add_complex(name + ".C", fac.e.target());
    d.add_map(name + ".e", in.map(name).source, name + ".C", fac.e);
    d.add_map(name + ".m", name + ".C", in.map(name).target, fac.m);
    d.add_map(name + ".me", in.map(name).source, in.map(name).target, ntt::compose(fac.m, fac.e));
    d.add_homotopy(name + ".witness", name + ".me", name, fac.witness);
    d.params = {{"shift", shift}, {"e_in_E", tt.in_E(fac.e)}, {"m_in_M", tt.in_M(fac.m)}};
    *out = new ntt_document{std::move(d)};
  });
}

ntt_status ntt_truncate(const ntt_document* doc, const char* object, int at, const char* side,
                        ntt_document** out) {
  return guarded([&] {
    require(doc, "doc");
    require(object, "object");
    require(side, "side");
    require(out, "out");
    const std::string name = object, s = side;
    if (s != "ge" && s != "lt") throw std::invalid_argument("side must be 'ge' or 'lt', got '" + s + "'");
    const ntt::Document& in = doc->doc;
    const ntt::TStructure t{at};
    ntt::Document d = derived_document(in);
    copy_complex(d, in, name);
    const std::string trunc = name + "." + s;
    if (s == "ge") {
      ntt::Truncation tr = ntt::truncate_ge(in.complex(name), t);
      d.add_complex(trunc, tr.object);
      d.add_map(trunc + ".map", trunc, name, tr.map);
    } else {
      ntt::Truncation tr = ntt::truncate_lt(in.complex(name), t);
      d.add_complex(trunc, tr.object);
      d.add_map(trunc + ".map", name, trunc, tr.map);
    }
    d.params = {{"at", at}, {"side", s}};
    *out = new ntt_document{std::move(d)};
  });
}

ntt_status ntt_postnikov(const ntt_document* doc, const char* map, ntt_document** out) {
  return guarded([&] {
    require(doc, "doc");
    require(map, "map");
    require(out, "out");
    const std::string name = map;
    const ntt::Document& in = doc->doc;
    const ntt::NamedMap& f = in.map(name);
    ntt::Tower tower = ntt::postnikov_tower(f.map);
    ntt::Document d = derived_document(in);
    copy_map(d, in, name);
    std::vector<std::string> names{f.source};
    for (std::size_t k = 1; k + 1 < tower.objects.size(); ++k) {
      names.push_back(name + ".stage" + std::to_string(k));
      d.add_complex(names.back(), tower.objects[k]);
    }
    names.push_back(f.target);
    for (std::size_t k = 0; k < tower.maps.size(); ++k)
      d.add_map(name + ".tower" + std::to_string(k + 1), names[k], names[k + 1], tower.maps[k]);
    nlohmann::json info{{"degrees", tower.degrees}, {"length", tower.length()}};
    if (tower.window) info["window"] = {tower.window->a, tower.window->b};
    info["verified"] = ntt::verify_tower(f.map, tower);
    d.params = {{"tower", info}};
    *out = new ntt_document{std::move(d)};
  });
}

ntt_status ntt_normality(const ntt_document* doc, const char* object, int shift, char** out_json) {
  return guarded([&] {
    require(doc, "doc");
    require(object, "object");
    require(out_json, "out_json");
    ntt::NormalityReport r = ntt::normality_report(doc->doc.complex(object), ntt::TorsionTheory{ntt::TStructure{shift}});
    nlohmann::json j{{"object", object},
                     {"shift", shift},
                     {"conditions",
                      {{"k_in_torsion", r.k_in_torsion},
                       {"q_in_torsion_free", r.q_in_torsion_free},
                       {"both", r.both},
                       {"q_matches_reflection", r.q_matches_reflection},
                       {"k_matches_coreflection", r.k_matches_coreflection},
                       {"fiber_sequence", r.fiber_sequence}}},
                     {"all", r.all()},
                     {"consistent", r.consistent()}};
    *out_json = dup(j.dump(2) + "\n");
  });
}

ntt_status ntt_suite_run(const char* config_json, ntt_report** out) {
  return guarded([&] {
    require(out, "out");
    ntt::SuiteConfig config;
    if (config_json && *config_json) config = ntt::config_from_json(nlohmann::json::parse(config_json));
    *out = new ntt_report{ntt::run_suite(config)};
  });
}

ntt_status ntt_report_parse(const char* json, ntt_report** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new ntt_report{ntt::report_from_json(nlohmann::json::parse(json))};
  });
}

void ntt_report_free(ntt_report* report) { delete report; }

ntt_status ntt_report_ok(const ntt_report* report, int* ok) {
  return guarded([&] {
    require(report, "report");
    require(ok, "ok");
    *ok = report->report.ok() ? 1 : 0;
  });
}

ntt_status ntt_report_to_json(const ntt_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = dup(ntt::report_to_json(report->report).dump(2) + "\n");
  });
}

ntt_status ntt_report_to_text(const ntt_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = dup(ntt::report_to_text(report->report));
  });
}

ntt_status ntt_report_replay(const ntt_report* report, const char* property, int* reproduced, char** detail) {
  return guarded([&] {
    require(report, "report");
    require(property, "property");
    require(reproduced, "reproduced");
    const nlohmann::json j = ntt::report_to_json(report->report);
    for (const auto& entry : j.at("properties")) {
      if (entry.at("name") != property) continue;
      ntt::CheckResult r = ntt::replay(entry);
      *reproduced = r.ok ? 0 : 1;
      if (detail) *detail = dup(r.detail);
      return;
    }
    throw std::invalid_argument(std::string("report has no property '") + property + "'");
  });
}

}  // extern "C"
