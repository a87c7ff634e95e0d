#include <gtest/gtest.h>

#include "ntt/document.hpp"
#include "ntt/suite.hpp"
#include "support.hpp"

using namespace ntt;

namespace {

DocumentError::Kind kind_of_error(const std::string& text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "document was accepted: " << text;
  return DocumentError::Kind::syntax;
}

std::string error_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e.what();
  }
  return "";
}

const char* kTwoTerm = R"({
  "prime": 3,
  "complexes": {
    "X": {"terms": [{"degree": 0, "dims": [1]}, {"degree": 1, "dims": [1]}],
          "differentials": [{"degree": 1, "matrices": [[[1]]]}]}
  }
})";

}  // namespace

TEST(DocumentTest, EmptyDocument) {
  Document d = parse_document("{}");
  EXPECT_TRUE(d.complexes.empty());
  EXPECT_TRUE(d.maps.empty());
  EXPECT_EQ(d.field.p(), 2u);
  EXPECT_EQ(d.quiver->vertex_count(), 1u);
}

TEST(DocumentTest, RejectsNonzeroDSquaredByName) {
  const std::string text = R"({"complexes": {"X": {
    "terms": [{"degree": 0, "dims": [1]}, {"degree": 1, "dims": [1]}, {"degree": 2, "dims": [1]}],
    "differentials": [{"degree": 1, "matrices": [[[1]]]}, {"degree": 2, "matrices": [[[1]]]}]}}})";
  EXPECT_EQ(kind_of_error(text), DocumentError::Kind::invariant);
  EXPECT_NE(error_of(text).find("d-squared"), std::string::npos);
  EXPECT_NE(error_of(text).find("complexes.X"), std::string::npos);
}

TEST(DocumentTest, SyntaxErrorsCarryLineAndColumn) {
  const std::string text = "{\n  \"prime\": 2,\n  \"complexes\": {,}\n}";
  EXPECT_EQ(kind_of_error(text), DocumentError::Kind::syntax);
  EXPECT_NE(error_of(text).find("line 3"), std::string::npos) << error_of(text);
  EXPECT_NE(error_of(text).find("column"), std::string::npos);
}

TEST(DocumentTest, SchemaAndReferenceErrors) {
  EXPECT_EQ(kind_of_error(R"({"prime": 4})"), DocumentError::Kind::schema);
  EXPECT_EQ(kind_of_error(R"({"format_version": 2})"), DocumentError::Kind::schema);
  EXPECT_EQ(kind_of_error(R"({"complexes": {"X": {"terms": [{"degree": 0}]}}})"), DocumentError::Kind::schema);
  EXPECT_EQ(kind_of_error(R"({"maps": {"f": {"source": "X", "target": "Y"}}})"), DocumentError::Kind::reference);
  EXPECT_EQ(kind_of_error(R"({"complexes": {"X": {"terms": [{"degree": 0, "rep": "R"}]}}})"),
            DocumentError::Kind::reference);
}

TEST(DocumentTest, ChainMapLawIsChecked) {
  const std::string text = R"({
    "complexes": {
      "X": {"terms": [{"degree": 0, "dims": [1]}, {"degree": 1, "dims": [1]}],
            "differentials": [{"degree": 1, "matrices": [[[1]]]}]},
      "S": {"terms": [{"degree": 0, "dims": [1]}]}
    },
    "maps": {"f": {"source": "S", "target": "X", "components": [{"degree": 0, "matrices": [[[1]]]}]},
             "g": {"source": "X", "target": "S", "components": [{"degree": 0, "matrices": [[[1]]]}]}}
  })";
  EXPECT_EQ(kind_of_error(text), DocumentError::Kind::invariant);
  EXPECT_NE(error_of(text).find("chain-map law"), std::string::npos) << error_of(text);
  EXPECT_NE(error_of(text).find("maps.g"), std::string::npos) << error_of(text);
}

TEST(DocumentTest, IntertwinerLawIsChecked) {
  const std::string text = R"({
    "quiver": {"vertices": ["1", "2"], "arrows": [["1", "2"]]},
    "complexes": {"X": {
      "terms": [{"degree": 0, "dims": [1, 1], "arrows": [[[1]]]}, {"degree": 1, "dims": [1, 1], "arrows": [[[1]]]}],
      "differentials": [{"degree": 1, "matrices": [[[1]], [[0]]]}]}}
  })";
  EXPECT_EQ(kind_of_error(text), DocumentError::Kind::invariant);
  EXPECT_NE(error_of(text).find("intertwiner"), std::string::npos) << error_of(text);
}

TEST(DocumentTest, EntriesAreReducedModP) {
  Document d = parse_document(R"({"prime": 3, "complexes": {"X": {
    "terms": [{"degree": 0, "dims": [1]}, {"degree": 1, "dims": [1]}],
    "differentials": [{"degree": 1, "matrices": [[[-2]]]}]}}})");
  EXPECT_EQ(d.complex("X")->diff(1, 0)(0, 0), 1u);
}

TEST(DocumentTest, SerializationIsNormalized) {
  Document d = parse_document(kTwoTerm);
  const std::string once = serialize_document(d);
  EXPECT_EQ(serialize_document(parse_document(once)), once);
  EXPECT_NE(once.find("\"format_version\": 1"), std::string::npos);
}

TEST(DocumentTest, GeneratedDocumentsRoundTripByteIdentically) {
  SuiteConfig c;
  for (const char* quiver : {"one-vertex", "A2"})
    for (std::uint32_t p : {2u, 3u}) {
      c.quiver = quiver;
      c.prime = p;
      for (const auto& info : property_list())
        for (std::size_t i = 0; i < 4; ++i) {
          Document d = generate_instance(info.name, c, i);
          const std::string text = serialize_document(d);
          Document back = parse_document(text);
          EXPECT_EQ(serialize_document(back), text);
          for (const auto& [name, x] : d.complexes) EXPECT_TRUE(same_complex(back.complex(name), x));
          for (const auto& [name, m] : d.maps) EXPECT_EQ(back.map(name).map, m.map);
        }
    }
}

TEST(DocumentTest, HomotopiesAreValidated) {
  Document d = parse_document(kTwoTerm);
  ComplexPtr x = d.complex("X");
  d.add_map("id", "X", "X", ChainMap::identity(x));
  d.add_map("zero", "X", "X", ChainMap::zero(x, x));
  d.add_homotopy("h", "zero", "id", witness_between(ChainMap::zero(x, x), ChainMap::identity(x)));
  Document back = parse_document(serialize_document(d));
  ASSERT_EQ(back.homotopies.size(), 1u);
  EXPECT_EQ(back.homotopies.at("h").homotopy.map(), d.homotopies.at("h").homotopy.map());

  nlohmann::json j = document_to_json(d);
  j["homotopies"]["h"]["components"] = nlohmann::json::array();
  EXPECT_THROW(document_from_json(j), DocumentError);
}
