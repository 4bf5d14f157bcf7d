// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "catalyxis/catalyxis.h"

namespace {

// Stable exit-code contract.
constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitInapplicable = 3;
constexpr int kExitResourceLimit = 4;

int exit_code_for(cx_status status) {
  switch (status) {
    case CX_OK: return kExitOk;
    case CX_ERR_NOT_INCOMPARABLE: return kExitInapplicable;
    case CX_ERR_RESOURCE_LIMIT: return kExitResourceLimit;
    case CX_ERR_INTERNAL: return kExitInternal;
    default: return kExitInput;
  }
}

int fail(cx_status status) {
  std::cerr << "catalyxis: " << cx_status_name(status) << ": " << cx_last_error() << "\n";
  return exit_code_for(status);
}

struct ProblemDeleter {
  void operator()(cx_problem* p) const { cx_problem_free(p); }
};
struct StringDeleter {
  void operator()(char* s) const { cx_string_free(s); }
};
using ProblemHandle = std::unique_ptr<cx_problem, ProblemDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

// Loads the problem and runs one report call; prints or writes the result.
template <typename Report>
int run(const std::string& path, const std::string& out_path, Report&& report) {
  cx_problem* raw = nullptr;
  if (const auto st = cx_problem_load(path.c_str(), &raw); st != CX_OK) return fail(st);
  ProblemHandle problem(raw);

  char* text = nullptr;
  if (const auto st = report(problem.get(), &text); st != CX_OK) return fail(st);
  OwnedString owned(text);

  if (out_path.empty() || out_path == "-") {
    std::cout << owned.get();
    std::cout.flush();
    return std::cout ? kExitOk : kExitInput;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << owned.get();
  out.close();
  if (!out) {
    std::cerr << "catalyxis: cannot write '" << out_path << "'\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majorization and entanglement-catalysis toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cx_version()));

  std::string problem_path;
  std::string out_path;

  auto* check = app.add_subcommand("check", "Classify p against q: order, violation set, delta, P_max");
  check->add_option("problem", problem_path, "Problem file (JSON or CSV)")->required();
  check->add_option("--out", out_path, "Write the JSON report here instead of stdout");

  auto* bounds = app.add_subcommand("bounds", "Closed-form necessary conditions on catalysts");
  bounds->add_option("problem", problem_path, "Problem file (JSON or CSV)")->required();
  bounds->add_option("--out", out_path, "Write the JSON report here instead of stdout");

  std::size_t samples = 1001;
  auto* curve = app.add_subcommand("curve", "CSV of P_max(t) and delta(t) for the qubit catalyst (1-t, t)");
  curve->add_option("problem", problem_path, "Problem file (JSON or CSV)")->required();
  curve->add_option("--samples", samples, "Number of evenly spaced t in [0, 1/2]")
      ->check(CLI::Range(std::size_t{2}, std::size_t{10'000'000}))
      ->capture_default_str();
  curve->add_option("--out", out_path, "CSV destination (default stdout)");

  std::size_t resolution = 1000;
  std::string precision = "1e-9";
  auto* scan = app.add_subcommand("scan", "Find disjoint t-regions of qubit catalysis");
  scan->add_option("problem", problem_path, "Problem file (JSON or CSV)")->required();
  scan->add_option("--resolution", resolution, "Grid intervals over [0, 1/2]")
      ->check(CLI::Range(std::size_t{10}, std::size_t{100'000'000}))
      ->capture_default_str();
  scan->add_option("--precision", precision, "Boundary bisection stops below this width")
      ->capture_default_str();
  scan->add_option("--out", out_path, "Write the JSON report here instead of stdout");

  std::size_t k = 2;
  std::size_t search_resolution = 100;
  std::uint64_t limit = cx_default_search_limit();
  auto* search = app.add_subcommand("search", "Exhaustive grid search for k-dimensional catalysts");
  search->add_option("problem", problem_path, "Problem file (JSON or CSV)")->required();
  search->add_option("--k", k, "Catalyst dimension")->capture_default_str();
  search->add_option("--resolution", search_resolution, "Grid denominator N")->capture_default_str();
  search->add_option("--limit", limit, "Ceiling on enumerated candidates")
      ->envname("CATALYXIS_LIMIT")
      ->capture_default_str();
  search->add_option("--out", out_path, "Write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (check->parsed()) {
    return run(problem_path, out_path, [](const cx_problem* p, char** out) { return cx_report_check(p, out); });
  }
  if (bounds->parsed()) {
    return run(problem_path, out_path, [](const cx_problem* p, char** out) { return cx_report_bounds(p, out); });
  }
  if (curve->parsed()) {
    return run(problem_path, out_path,
               [&](const cx_problem* p, char** out) { return cx_report_curve_csv(p, samples, out); });
  }
  if (scan->parsed()) {
    return run(problem_path, out_path, [&](const cx_problem* p, char** out) {
      return cx_report_scan(p, resolution, precision.c_str(), out);
    });
  }
  if (search->parsed()) {
    return run(problem_path, out_path, [&](const cx_problem* p, char** out) {
      return cx_report_search(p, k, search_resolution, limit, out);
    });
  }
  return kExitInternal;
}
