// brpic-lab: Brauer-Picard data of Vec_G from the command line.

#include <chrono>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "brpic/brpic.hpp"
#include "brpic/error.hpp"
#include "brpic/report.hpp"
#include "brpic/spec.hpp"

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kCap = 3, kConsistency = 4 };

using nlohmann::json;

int run(const std::string& command, const std::string& text, bool as_json, const std::string& cache_dir, bool use_cache) {
  const auto spec = brpic::parse_spec(text);
  const std::string canonical = spec.canonical();

  if (command == "report" && use_cache) {
    const brpic::ReportCache cache(cache_dir);
    auto stored = cache.load(canonical, std::cerr);
    if (!stored) {
      brpic::Analysis an(spec.build());
      const auto t0 = std::chrono::steady_clock::now();
      json doc = brpic::report_json(an, canonical);
      doc["timing_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
      stored = doc.dump() + "\n";
      try {
        cache.store(canonical, *stored);
      } catch (const std::exception& e) {
        std::cerr << "warning: " << e.what() << "\n";
      }
    }
    const json doc = json::parse(*stored);
    if (as_json)
      std::cout << *stored;
    else
      brpic::print_report(std::cout, doc);
    for (const auto& c : doc["checks"])
      if (!c["pass"].get<bool>()) return kConsistency;
    return kOk;
  }

  brpic::Analysis an(spec.build());
  json out;
  if (command == "schur") {
    out = brpic::schur_json(an);
    if (!as_json) brpic::print_schur(std::cout, out);
  } else if (command == "out") {
    out = brpic::out_json(an);
    if (!as_json) brpic::print_out(std::cout, out);
  } else if (command == "aut") {
    out = brpic::aut_json(an);
    if (!as_json) brpic::print_aut(std::cout, out);
  } else if (command == "lagrangians") {
    out = brpic::lagrangians_json(an);
    if (!as_json) brpic::print_lagrangians(std::cout, out);
  } else if (command == "l0") {
    out = brpic::l0_json(an);
    if (!as_json) brpic::print_lagrangians(std::cout, out);
  } else if (command == "bimodules") {
    out = brpic::bimodules_json(an);
    if (!as_json) brpic::print_bimodules(std::cout, out);
  } else if (command == "brpic") {
    out = brpic::brpic_json(an);
    if (!as_json) brpic::print_brpic(std::cout, out);
  } else if (command == "report") {
    out = brpic::report_json(an, canonical);
    if (!as_json) brpic::print_report(std::cout, out);
  } else {
    const auto checks = brpic::run_checks(an);
    out = brpic::checks_json(checks);
    if (!as_json) brpic::print_checks(std::cout, out);
    if (as_json) std::cout << out.dump() << "\n";
    for (const auto& c : checks)
      if (!c.pass) return kConsistency;
    return kOk;
  }
  if (as_json) std::cout << out.dump() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brauer-Picard data of the pointed fusion category Vec_G"};
  std::string command, spec, format = "text", cache_dir = ".brpic-cache";
  bool no_cache = false;
  const std::set<std::string> commands{"schur", "out", "aut", "lagrangians", "l0", "bimodules", "brpic", "report", "check"};
  app.add_option("command", command, "schur | out | aut | lagrangians | l0 | bimodules | brpic | report | check")
      ->required()
      ->check(CLI::IsMember(commands));
  app.add_option("group", spec, "group spec: S4, A4, D8, Q8, C6, C2xC4, pq(3,7), perm:[(1,2,3);(1,2)], table:file.json")
      ->required();
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", cache_dir, "directory for cached reports");
  app.add_flag("--no-cache", no_cache, "always recompute reports");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }
  try {
    return run(command, spec, format == "json", cache_dir, !no_cache);
  } catch (const brpic::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const brpic::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const brpic::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const brpic::ConsistencyError& e) {
    std::cerr << "internal cross-check failed: " << e.what() << "\n";
    return kConsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
