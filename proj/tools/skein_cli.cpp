// skein: command-line front end over the C API.
//
//   skein ctx --root N [--json]
//   skein eval --expr SRC|FILE [--root N] [--text] [--out FILE]
//   skein jw --k K [--root N] [--json | --coeff-table]
//   skein verify [--root N]... [--suite NAME] [--m-max M] [--k-max K]
//                [--budget SECS] [--report FILE] [--json] [--timings]
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skein/skein_c.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Error {
  int status;
  std::string message;
};

void check(int status) {
  if (status != SKEIN_OK) throw Error{status, skein_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  skein_string_free(s);
  return out;
}

using RingPtr = std::unique_ptr<skein_ring, decltype(&skein_ring_free)>;
using MorphismPtr = std::unique_ptr<skein_morphism, decltype(&skein_morphism_free)>;
using ReportsPtr = std::unique_ptr<skein_reports, decltype(&skein_reports_free)>;

RingPtr make_ring(int N) {
  skein_ring* r = nullptr;
  check(skein_ring_new(N, &r));
  return RingPtr(r, skein_ring_free);
}

// --expr names a file if one exists at that path, otherwise it is the source.
std::string read_source(const std::string& expr) {
  std::ifstream in(expr);
  if (!in) return expr;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error{SKEIN_INVALID_ARGUMENT, "cannot write " + path};
  out << text << "\n";
}

int run_ctx(int N, bool json) {
  char* s = nullptr;
  check(skein_context_json(N, &s));
  Json j = Json::parse(take(s));
  if (json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "N=" << j["N"].get<int>() << "\n"
            << "n=" << j["n"].get<int>() << "\n"
            << "t=" << j["t"].get<int>() << "\n"
            << "tHalf=" << j["tHalf"].get<std::string>() << "\n"
            << "q=" << j["q"].get<std::string>() << "\n";
  return 0;
}

int run_eval(int N, const std::string& expr, bool text, const std::string& out) {
  RingPtr ring = make_ring(N);
  skein_morphism* raw = nullptr;
  check(skein_eval(ring.get(), read_source(expr).c_str(), &raw));
  MorphismPtr f(raw, skein_morphism_free);
  char* s = nullptr;
  if (text) {
    check(skein_morphism_text(f.get(), &s));
    write_output(take(s), out);
  } else {
    check(skein_morphism_json(f.get(), &s));
    write_output(Json::parse(take(s)).dump(2), out);
  }
  return 0;
}

int run_jw(int N, int k, bool json, bool table) {
  RingPtr ring = make_ring(N);
  skein_morphism* raw = nullptr;
  check(skein_jw(ring.get(), k, &raw));
  MorphismPtr f(raw, skein_morphism_free);
  char* s = nullptr;
  if (table) {
    check(skein_coeff_table(f.get(), &s));
    Json rows = Json::parse(take(s));
    if (json) {
      std::cout << rows.dump(2) << "\n";
    } else {
      for (const auto& r : rows)
        std::cout << r["matching"].get<std::string>() << "\t" << r["coeff"].get<std::string>() << "\n";
    }
  } else if (json) {
    check(skein_morphism_json(f.get(), &s));
    std::cout << Json::parse(take(s)).dump(2) << "\n";
  } else {
    check(skein_morphism_text(f.get(), &s));
    std::cout << take(s) << "\n";
  }
  return 0;
}

std::string report_line(const Json& r) {
  std::string line = r["outcome"].get<std::string>();
  line.resize(8, ' ');
  line += r["name"].get<std::string>();
  for (const auto& [k, v] : r["params"].items()) line += " " + k + "=" + std::to_string(v.get<long>());
  if (r.contains("reason")) line += "  (" + r["reason"].get<std::string>() + ")";
  return line;
}

struct VerifyOptions {
  std::vector<int> roots{8};
  std::string suite = "all";
  int m_max = 3;
  int k_max = 3;
  double budget = 0;
  std::string report;
  bool json = false;
  bool timings = false;
};

int run_verify(const VerifyOptions& o) {
  skein_suite_config c;
  skein_suite_config_default(&c);
  c.roots = o.roots.data();
  c.n_roots = o.roots.size();
  c.m_max = o.m_max;
  c.k_max = o.k_max;
  c.suite = o.suite.c_str();
  c.budget_seconds = o.budget;
  skein_reports* raw = nullptr;
  check(skein_run_suite(&c, &raw));
  ReportsPtr reports(raw, skein_reports_free);
  char* s = nullptr;
  check(skein_reports_json(reports.get(), o.timings ? 1 : 0, &s));
  Json list = Json::parse(take(s));
  if (!o.report.empty()) write_output(list.dump(2), o.report);
  if (o.json) {
    std::cout << list.dump(2) << "\n";
  } else {
    for (const auto& r : list) std::cout << report_line(r) << "\n";
    const size_t failed = skein_reports_failed(reports.get());
    const size_t skipped = skein_reports_skipped(reports.get());
    std::cout << list.size() << " checks: " << list.size() - failed - skipped << " passed, " << failed
              << " failed, " << skipped << " skipped\n";
  }
  return skein_reports_failed(reports.get()) ? kFailed : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperley-Lieb and Jones-Wenzl computations at roots of unity"};
  app.require_subcommand(1, 1);

  int N = 0;
  bool json = false;

  auto* ctx = app.add_subcommand("ctx", "Show the root-of-unity parameters for order N");
  ctx->add_option("--root", N, "Order of q^(1/2)")->required()->check(CLI::PositiveNumber);
  ctx->add_flag("--json", json, "Emit JSON");

  std::string expr, out;
  bool text = false;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression to a morphism");
  eval->add_option("--expr", expr, "Expression, or a file containing one")->required();
  eval->add_option("--root", N, "Order of q^(1/2); omit for generic mode")->check(CLI::PositiveNumber);
  eval->add_flag("--text", text, "Human-readable output instead of JSON");
  eval->add_option("--out", out, "Write output to a file");

  int k = 0;
  bool table = false;
  auto* jw = app.add_subcommand("jw", "Dump a Jones-Wenzl projector");
  jw->add_option("--k", k, "Number of strands")->required()->check(CLI::NonNegativeNumber);
  jw->add_option("--root", N, "Order of q^(1/2); omit for generic mode")->check(CLI::PositiveNumber);
  jw->add_flag("--json", json, "Emit the morphism JSON");
  jw->add_flag("--coeff-table", table, "Emit (matching, coefficient) rows in canonical order");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run the identity checks");
  verify->add_option("--root", vo.roots, "Root orders (repeatable)")->check(CLI::PositiveNumber)->delimiter(',');
  verify->add_option("--suite", vo.suite, "all or a check family");
  verify->add_option("--m-max", vo.m_max, "Largest m for the encircling checks")->check(CLI::NonNegativeNumber);
  verify->add_option("--k-max", vo.k_max, "Largest k for the thick checks")->check(CLI::NonNegativeNumber);
  verify->add_option("--budget", vo.budget, "Time budget in seconds (default: SKEIN_TIME_BUDGET_SECS)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--report", vo.report, "Write the JSON report to a file");
  verify->add_flag("--json", vo.json, "Print the JSON report instead of text");
  verify->add_flag("--timings", vo.timings, "Include per-check timings in JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*ctx) return run_ctx(N, json);
    if (*eval) return run_eval(N, expr, text, out);
    if (*jw) return run_jw(N, k, json, table);
    return run_verify(vo);
  } catch (const Error& e) {
    std::cerr << "error: " << skein_status_name(e.status) << ": " << e.message << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
