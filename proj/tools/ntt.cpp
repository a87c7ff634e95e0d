// Command-line front end. Uses only the C interface in ntt/ntt.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "ntt/ntt.h"

namespace {

struct Failure {
  std::string message;
};

void check(ntt_status s, const std::string& context) {
  if (s != NTT_OK) throw Failure{context + ": " + ntt_last_error()};
}

using DocPtr = std::unique_ptr<ntt_document, decltype(&ntt_document_free)>;
using ReportPtr = std::unique_ptr<ntt_report, decltype(&ntt_report_free)>;

std::string take(char* s) {
  std::string out(s);
  ntt_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot read '" + path + "'"};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DocPtr load(const std::string& path) {
  ntt_document* d = nullptr;
  check(ntt_document_load(path.c_str(), &d), path);
  return DocPtr(d, ntt_document_free);
}

void emit(const DocPtr& doc) {
  char* text = nullptr;
  check(ntt_document_serialize(doc.get(), &text), "serialize");
  std::cout << take(text);
}

int finish_report(const ReportPtr& report, bool json) {
  char* text = nullptr;
  check(json ? ntt_report_to_json(report.get(), &text) : ntt_report_to_text(report.get(), &text), "report");
  std::cout << take(text);
  int ok = 0;
  check(ntt_report_ok(report.get(), &ok), "report");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion theories and t-structures over finite fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ntt_version()));

  auto* verify = app.add_subcommand("verify", "Run the seeded property suite");
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> cases;
  std::optional<std::uint32_t> prime;
  std::optional<std::string> quiver;
  bool json = false;
  verify->add_option("--config", config_path, "Suite configuration (JSON)")->required()->check(CLI::ExistingFile);
  verify->add_option("--seed", seed, "Override the seed");
  verify->add_option("--cases", cases, "Override the cases per property");
  verify->add_option("--prime", prime, "Override the prime");
  verify->add_option("--quiver", quiver, "Override the quiver: one-vertex, A<n> or a document path");
  verify->add_flag("--json", json, "Write the report as JSON");

  std::string doc_path, name, side;
  int shift = 0, at = 0;

  auto* factor = app.add_subcommand("factor", "Factor a map as e then m");
  factor->add_option("doc", doc_path, "Input document")->required();
  factor->add_option("--map", name, "Map to factor")->required();
  factor->add_option("--shift", shift, "Shift n of the t-structure t_n");

  auto* truncate = app.add_subcommand("truncate", "Truncate an object");
  truncate->add_option("doc", doc_path, "Input document")->required();
  truncate->add_option("--object", name, "Complex to truncate")->required();
  truncate->add_option("--at", at, "Shift n of the t-structure t_n")->required();
  truncate->add_option("--side", side, "ge or lt")->required()->check(CLI::IsMember({"ge", "lt"}));

  auto* postnikov = app.add_subcommand("postnikov", "Postnikov tower of a map");
  postnikov->add_option("doc", doc_path, "Input document")->required();
  postnikov->add_option("--map", name, "Map to decompose")->required();

  auto* normality = app.add_subcommand("normality", "Check the normality conditions for an object");
  normality->add_option("doc", doc_path, "Input document")->required();
  normality->add_option("--object", name, "Complex to check")->required();
  normality->add_option("--shift", shift, "Shift n of the t-structure t_n");
  normality->add_flag("--json", json, "Write JSON");

  auto* report = app.add_subcommand("report", "Render a saved report");
  std::string in_path, format = "text";
  report->add_option("--in", in_path, "Report (JSON)")->required()->check(CLI::ExistingFile);
  report->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* replay = app.add_subcommand("replay", "Re-check the counterexample of a property in a saved report");
  replay->add_option("--in", in_path, "Report (JSON)")->required()->check(CLI::ExistingFile);
  replay->add_option("--property", name, "Property name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*verify) {
      nlohmann::json config;
      try {
        config = nlohmann::json::parse(read_file(config_path));
      } catch (const nlohmann::json::parse_error& e) {
        throw Failure{config_path + ": " + e.what()};
      }
      if (!config.is_object()) throw Failure{config_path + ": expected a JSON object"};
      if (seed) config["seed"] = *seed;
      if (cases) config["cases"] = *cases;
      if (prime) config["prime"] = *prime;
      if (quiver) config["quiver"] = *quiver;
      ntt_report* r = nullptr;
      check(ntt_suite_run(config.dump().c_str(), &r), "verify");
      return finish_report(ReportPtr(r, ntt_report_free), json);
    }
    if (*factor) {
      DocPtr in = load(doc_path);
      ntt_document* out = nullptr;
      check(ntt_factor(in.get(), name.c_str(), shift, &out), "factor");
      emit(DocPtr(out, ntt_document_free));
      return 0;
    }
    if (*truncate) {
      DocPtr in = load(doc_path);
      ntt_document* out = nullptr;
      check(ntt_truncate(in.get(), name.c_str(), at, side.c_str(), &out), "truncate");
      emit(DocPtr(out, ntt_document_free));
      return 0;
    }
    if (*postnikov) {
      DocPtr in = load(doc_path);
      ntt_document* out = nullptr;
      check(ntt_postnikov(in.get(), name.c_str(), &out), "postnikov");
      emit(DocPtr(out, ntt_document_free));
      return 0;
    }
    if (*normality) {
      DocPtr in = load(doc_path);
      char* text = nullptr;
      check(ntt_normality(in.get(), name.c_str(), shift, &text), "normality");
      const nlohmann::json j = nlohmann::json::parse(take(text));
      if (json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "normality of " << name << " for t_" << shift << "\n";
        const char* order[] = {"k_in_torsion",         "q_in_torsion_free",      "both",
                               "q_matches_reflection", "k_matches_coreflection", "fiber_sequence"};
        int k = 1;
        for (const char* cond : order)
          std::cout << "  (" << k++ << ") " << cond << ": " << (j.at("conditions").at(cond).get<bool>() ? "yes" : "no")
                    << "\n";
        std::cout << (j.at("all").get<bool>() ? "normal\n" : "not normal\n");
      }
      return j.at("all").get<bool>() ? 0 : 1;
    }
    if (*report) {
      ntt_report* r = nullptr;
      check(ntt_report_parse(read_file(in_path).c_str(), &r), in_path);
      return finish_report(ReportPtr(r, ntt_report_free), format == "json");
    }
    if (*replay) {
      ntt_report* raw = nullptr;
      check(ntt_report_parse(read_file(in_path).c_str(), &raw), in_path);
      ReportPtr r(raw, ntt_report_free);
      int reproduced = 0;
      char* detail = nullptr;
      check(ntt_report_replay(r.get(), name.c_str(), &reproduced, &detail), "replay");
      const std::string d = take(detail);
      std::cout << (reproduced ? "reproduced: " + d : std::string("not reproduced")) << "\n";
      return reproduced ? 1 : 0;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return 1;
  }
  return 1;
}
