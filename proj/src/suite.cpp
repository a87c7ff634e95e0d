#include "ntt/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ntt {

namespace {

constexpr int kReportSchema = 1;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::size_t thread_count(const SuiteConfig& c) {
  if (c.threads > 0) return c.threads;
  if (const char* env = std::getenv("NTT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

bool known_property(const std::string& name) {
  for (const auto& p : property_list())
    if (p.name == name) return true;
  return false;
}

}  // namespace

std::uint64_t case_seed(std::uint64_t seed, const std::string& property, std::size_t index) {
  return splitmix(splitmix(seed ^ fnv1a(property)) ^ static_cast<std::uint64_t>(index));
}

void SuiteConfig::validate() const {
  if (!is_prime(prime)) throw std::invalid_argument("prime " + std::to_string(prime) + " is not prime");
  if (cases == 0) throw std::invalid_argument("cases must be positive");
  if (max_dim == 0) throw std::invalid_argument("max_dim must be positive");
  if (window_lo > window_hi) throw std::invalid_argument("window is empty");
  if (shifts.empty()) throw std::invalid_argument("shifts must not be empty");
  if (!fault.empty() && fault != "brutal-truncation")
    throw std::invalid_argument("unknown fault '" + fault + "'");
  for (const auto& p : properties)
    if (!known_property(p)) throw std::invalid_argument("unknown property '" + p + "'");
  resolve_quiver();
}

QuiverPtr SuiteConfig::resolve_quiver() const {
  if (quiver == "one-vertex") return Quiver::one_vertex();
  if (quiver.size() > 1 && quiver[0] == 'A' &&
      std::all_of(quiver.begin() + 1, quiver.end(), [](unsigned char c) { return std::isdigit(c); })) {
    const std::size_t n = std::stoul(quiver.substr(1));
    if (n == 0) throw std::invalid_argument("quiver A0 has no vertices");
    return Quiver::linear(n);
  }
  std::ifstream in(quiver);
  if (!in) throw std::invalid_argument("quiver '" + quiver + "' is neither a known name nor a readable document");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str()).quiver;
}

SuiteConfig config_from_json(const nlohmann::json& j) {
  static const std::set<std::string> keys{"prime",      "quiver", "seed",  "cases",   "max_dim", "window",
                                          "shifts",     "properties", "fault", "threads", "timings"};
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (!keys.count(k)) throw std::invalid_argument("unknown config key '" + k + "'");
  SuiteConfig c;
  try {
    if (j.contains("prime")) c.prime = j.at("prime").get<std::uint32_t>();
    if (j.contains("quiver")) c.quiver = j.at("quiver").get<std::string>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("cases")) c.cases = j.at("cases").get<std::size_t>();
    if (j.contains("max_dim")) c.max_dim = j.at("max_dim").get<std::size_t>();
    if (j.contains("window")) {
      const auto& w = j.at("window");
      if (!w.is_array() || w.size() != 2) throw std::invalid_argument("window must be [lo, hi]");
      c.window_lo = w[0].get<int>();
      c.window_hi = w[1].get<int>();
    }
    if (j.contains("shifts")) c.shifts = j.at("shifts").get<std::vector<int>>();
    if (j.contains("properties")) c.properties = j.at("properties").get<std::vector<std::string>>();
    if (j.contains("fault")) c.fault = j.at("fault").get<std::string>();
    if (j.contains("threads")) c.threads = j.at("threads").get<std::size_t>();
    if (j.contains("timings")) c.timings = j.at("timings").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad config value: ") + e.what());
  }
  c.validate();
  return c;
}

nlohmann::json config_to_json(const SuiteConfig& c) {
  nlohmann::json j{{"prime", c.prime},   {"quiver", c.quiver},   {"seed", c.seed},
                   {"cases", c.cases},   {"max_dim", c.max_dim}, {"window", {c.window_lo, c.window_hi}},
                   {"shifts", c.shifts}, {"properties", c.properties}};
  if (!c.fault.empty()) j["fault"] = c.fault;
  if (c.timings) j["timings"] = true;
  return j;
}

bool Report::ok() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyReport& p) { return p.ok(); });
}

Report run_suite(const SuiteConfig& config) {
  config.validate();
  Report report{config, {}};
  const std::size_t threads = thread_count(config);
  for (const auto& info : property_list()) {
    if (!config.properties.empty() &&
        std::find(config.properties.begin(), config.properties.end(), info.name) == config.properties.end())
      continue;
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = instance_count(info.name, config);
    std::vector<CheckResult> results(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          results[i] = check_instance(info.name, generate_instance(info.name, config, i));
        } catch (const std::exception& e) {
          results[i] = {false, std::string("exception while generating: ") + e.what()};
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < std::min(threads, n); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    PropertyReport pr;
    pr.name = info.name;
    pr.criterion = info.criterion;
    pr.cases = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (results[i].ok) {
        ++pr.passed;
        continue;
      }
      ++pr.failed;
      if (!pr.counterexample) {
        Document doc;
        try {
          doc = generate_instance(info.name, config, i);
        } catch (const std::exception&) {
        }
        pr.counterexample = Counterexample{i, case_seed(config.seed, info.name, i), results[i].detail, doc};
      }
    }
    if (config.timings)
      pr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.properties.push_back(std::move(pr));
  }
  return report;
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& p : r.properties) {
    nlohmann::json e{{"name", p.name},     {"criterion", p.criterion}, {"cases", p.cases},
                     {"passed", p.passed}, {"failed", p.failed},       {"ok", p.ok()}};
    if (p.seconds) e["seconds"] = *p.seconds;
    if (p.counterexample) {
      const auto& c = *p.counterexample;
      e["counterexample"] = {
          {"index", c.index}, {"seed", c.seed}, {"detail", c.detail}, {"document", document_to_json(c.document)}};
    }
    props.push_back(std::move(e));
  }
  return {{"schema_version", kReportSchema},
          {"config", config_to_json(r.config)},
          {"ok", r.ok()},
          {"properties", std::move(props)}};
}

Report report_from_json(const nlohmann::json& j) {
  try {
    if (j.contains("schema_version") && j.at("schema_version") != kReportSchema)
      throw std::invalid_argument("unsupported report schema_version " + j.at("schema_version").dump());
    Report r{config_from_json(j.at("config")), {}};
    for (const auto& e : j.at("properties")) {
      PropertyReport p;
      p.name = e.at("name").get<std::string>();
      p.criterion = e.at("criterion").get<int>();
      p.cases = e.at("cases").get<std::size_t>();
      p.passed = e.at("passed").get<std::size_t>();
      p.failed = e.at("failed").get<std::size_t>();
      if (e.contains("seconds")) p.seconds = e.at("seconds").get<double>();
      if (e.contains("counterexample")) {
        const auto& c = e.at("counterexample");
        p.counterexample = Counterexample{c.at("index").get<std::size_t>(), c.at("seed").get<std::uint64_t>(),
                                          c.at("detail").get<std::string>(), document_from_json(c.at("document"))};
      }
      r.properties.push_back(std::move(p));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << "prime " << r.config.prime << ", quiver " << r.config.quiver << ", seed " << r.config.seed << ", cases "
      << r.config.cases;
  if (!r.config.fault.empty()) out << ", fault " << r.config.fault;
  out << "\n";
  for (const auto& p : r.properties) {
    out << "[" << std::setw(2) << p.criterion << "] " << std::left << std::setw(14) << p.name << std::right
        << (p.ok() ? " PASS " : " FAIL ") << p.passed << "/" << p.cases;
    if (p.seconds) out << "  " << std::fixed << std::setprecision(3) << *p.seconds << "s";
    out << "\n";
    if (p.counterexample)
      out << "     first counterexample: case " << p.counterexample->index << " (seed " << p.counterexample->seed
          << "): " << p.counterexample->detail << "\n";
  }
  out << (r.ok() ? "all properties hold\n" : "some properties fail\n");
  return out.str();
}

CheckResult replay(const nlohmann::json& entry) {
  if (!entry.contains("counterexample")) throw std::invalid_argument("property entry has no counterexample");
  return check_instance(entry.at("name").get<std::string>(),
                        document_from_json(entry.at("counterexample").at("document")));
}

}  // namespace ntt
