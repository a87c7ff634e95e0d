#pragma once

// JSON documents holding a quiver, named representations, complexes,
// chain maps and homotopies over one prime field.
//
// {
//   "format_version": 1,
//   "prime": 3,
//   "quiver": {"vertices": ["a", "b"], "arrows": [["a", "b"]]},
//   "reps": {"S": {"dims": [1, 0], "arrows": [[]]}},
//   "complexes": {"X": {"terms": [{"degree": 0, "rep": "S"}],
//                       "differentials": [{"degree": 1, "matrices": [...]}]}},
//   "maps": {"f": {"source": "X", "target": "Y",
//                  "components": [{"degree": 0, "matrices": [...]}]}},
//   "homotopies": {"h": {"from": "f", "to": "g", "components": [...]}},
//   "params": {...}
// }
//
// Matrices are arrays of rows with entries in [0, p); shapes come from the
// dimension vectors, so a matrix with no rows is written [].

#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ntt/complex.hpp"

namespace ntt {

class DocumentError : public std::runtime_error {
 public:
  enum class Kind { syntax, schema, invariant, reference };
  DocumentError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct NamedMap {
  std::string source;
  std::string target;
  ChainMap map;
};

struct NamedHomotopy {
  std::string from;
  std::string to;
  Homotopy homotopy;
};

struct Document {
  PrimeField field{2};
  QuiverPtr quiver = Quiver::one_vertex();
  std::map<std::string, QuiverRep> reps;
  std::map<std::string, ComplexPtr> complexes;
  std::map<std::string, NamedMap> maps;
  std::map<std::string, NamedHomotopy> homotopies;
  nlohmann::json params = nlohmann::json::object();

  Document() = default;
  Document(PrimeField f, QuiverPtr q) : field(f), quiver(std::move(q)) {}

  /// Throws DocumentError(reference) for unknown names.
  const ComplexPtr& complex(const std::string& name) const;
  const NamedMap& map(const std::string& name) const;

  void add_complex(const std::string& name, ComplexPtr c);
  /// The endpoints must already be registered under the given names.
  void add_map(const std::string& name, const std::string& source, const std::string& target, ChainMap f);
  /// Registers the endpoints under "<name>.source" / "<name>.target" when
  /// they are not present yet under any name.
  void add_map_with_ends(const std::string& name, ChainMap f);
  void add_homotopy(const std::string& name, const std::string& from, const std::string& to, Homotopy h);
  /// Name of a registered complex equal to c, if any.
  std::optional<std::string> find_complex(const ComplexPtr& c) const;
};

Document parse_document(const std::string& text);
Document document_from_json(const nlohmann::json& j);
nlohmann::json document_to_json(const Document& doc);
/// Normalized form: sorted keys, two-space indentation, trailing newline.
std::string serialize_document(const Document& doc);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, PrimeField field, std::size_t rows, std::size_t cols,
                        const std::string& where);

}  // namespace ntt
