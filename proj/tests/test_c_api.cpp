// Exercises the shared library through its C header only.

#include <gtest/gtest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "ntt/ntt.h"

namespace {

std::string data(const char* name) { return std::string(NTT_TEST_DATA) + "/" + name; }

std::string take(char* s) {
  std::string out = s ? s : "";
  ntt_string_free(s);
  return out;
}

struct Doc {
  ntt_document* p = nullptr;
  ~Doc() { ntt_document_free(p); }
};

struct Rep {
  ntt_report* p = nullptr;
  ~Rep() { ntt_report_free(p); }
};

std::string serialize(const ntt_document* d) {
  char* s = nullptr;
  EXPECT_EQ(ntt_document_serialize(d, &s), NTT_OK);
  return take(s);
}

}  // namespace

TEST(CApiTest, VersionAndNullArguments) {
  EXPECT_GT(std::strlen(ntt_version()), 0u);
  EXPECT_EQ(ntt_document_parse(nullptr, nullptr), NTT_ERR_ARGUMENT);
  EXPECT_NE(std::string(ntt_last_error()).find("null"), std::string::npos);
  ntt_document_free(nullptr);
  ntt_report_free(nullptr);
  ntt_string_free(nullptr);
}

TEST(CApiTest, ErrorCodes) {
  Doc d;
  EXPECT_EQ(ntt_document_parse("{", &d.p), NTT_ERR_SYNTAX);
  EXPECT_NE(std::string(ntt_last_error()).find("line"), std::string::npos);
  EXPECT_EQ(ntt_document_parse(R"({"prime": 6})", &d.p), NTT_ERR_SCHEMA);
  EXPECT_EQ(ntt_document_load(data("bad_dsq.json").c_str(), &d.p), NTT_ERR_INVARIANT);
  EXPECT_NE(std::string(ntt_last_error()).find("d-squared"), std::string::npos);
  EXPECT_EQ(ntt_document_load("/nonexistent/doc.json", &d.p), NTT_ERR_IO);
  ASSERT_EQ(ntt_document_load(data("zero_to_y.json").c_str(), &d.p), NTT_OK);
  Doc out;
  EXPECT_EQ(ntt_factor(d.p, "missing", 0, &out.p), NTT_ERR_REFERENCE);
  EXPECT_EQ(ntt_truncate(d.p, "Y", 0, "middle", &out.p), NTT_ERR_ARGUMENT);
  EXPECT_EQ(out.p, nullptr);
}

TEST(CApiTest, DocumentRoundTrip) {
  Doc d, again;
  ASSERT_EQ(ntt_document_load(data("heart_a2.json").c_str(), &d.p), NTT_OK);
  const std::string text = serialize(d.p);
  ASSERT_EQ(ntt_document_parse(text.c_str(), &again.p), NTT_OK);
  EXPECT_EQ(serialize(again.p), text);
}

TEST(CApiTest, Operations) {
  Doc d;
  ASSERT_EQ(ntt_document_load(data("zero_to_y.json").c_str(), &d.p), NTT_OK);
  Doc fac, tr, tower;
  ASSERT_EQ(ntt_factor(d.p, "f", 0, &fac.p), NTT_OK);
  const std::string f = serialize(fac.p);
  EXPECT_NE(f.find("\"f.e\""), std::string::npos);
  EXPECT_NE(f.find("\"f.witness\""), std::string::npos);
  EXPECT_NE(f.find("\"e_in_E\": true"), std::string::npos);
  ASSERT_EQ(ntt_truncate(d.p, "Y", 0, "lt", &tr.p), NTT_OK);
  EXPECT_NE(serialize(tr.p).find("\"Y.lt.map\""), std::string::npos);
  ASSERT_EQ(ntt_postnikov(d.p, "f", &tower.p), NTT_OK);
  EXPECT_NE(serialize(tower.p).find("\"verified\": true"), std::string::npos);
  char* json = nullptr;
  ASSERT_EQ(ntt_normality(d.p, "Y", 1, &json), NTT_OK);
  EXPECT_NE(take(json).find("\"all\": true"), std::string::npos);
}

TEST(CApiTest, SuiteAndReports) {
  Rep r;
  EXPECT_EQ(ntt_suite_run(R"({"prime": 9})", &r.p), NTT_ERR_ARGUMENT);
  ASSERT_EQ(ntt_suite_run(R"({"cases": 3, "fault": "brutal-truncation"})", &r.p), NTT_OK);
  int ok = -1;
  ASSERT_EQ(ntt_report_ok(r.p, &ok), NTT_OK);
  EXPECT_EQ(ok, 0);
  char* json = nullptr;
  ASSERT_EQ(ntt_report_to_json(r.p, &json), NTT_OK);
  const std::string text = take(json);
  Rep back;
  ASSERT_EQ(ntt_report_parse(text.c_str(), &back.p), NTT_OK);
  char* again = nullptr;
  ASSERT_EQ(ntt_report_to_json(back.p, &again), NTT_OK);
  EXPECT_EQ(take(again), text);
  int reproduced = 0;
  char* detail = nullptr;
  ASSERT_EQ(ntt_report_replay(back.p, "heart", &reproduced, &detail), NTT_OK);
  EXPECT_EQ(reproduced, 1);
  EXPECT_FALSE(take(detail).empty());
  EXPECT_EQ(ntt_report_replay(back.p, "oracle", &reproduced, nullptr), NTT_ERR_ARGUMENT);
  char* rendered = nullptr;
  ASSERT_EQ(ntt_report_to_text(back.p, &rendered), NTT_OK);
  EXPECT_NE(take(rendered).find("FAIL"), std::string::npos);
}

TEST(CApiTest, HeartObjectSurvivesTruncationAboveItsDegree) {
  Doc d, tr;
  ASSERT_EQ(ntt_document_load(data("heart_a2.json").c_str(), &d.p), NTT_OK);
  ASSERT_EQ(ntt_truncate(d.p, "H", 1, "lt", &tr.p), NTT_OK);
  const auto j = nlohmann::json::parse(serialize(tr.p));
  EXPECT_EQ(j["complexes"]["H.lt"]["terms"], j["complexes"]["H"]["terms"]);
  EXPECT_EQ(j["complexes"]["H.lt"].value("differentials", nlohmann::json::array()),
            j["complexes"]["H"].value("differentials", nlohmann::json::array()));
}
