#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "brpic/brpic.hpp"

namespace brpic {

inline constexpr int kSchemaVersion = 1;

nlohmann::json group_json(Analysis& an, const std::string& spec);
nlohmann::json schur_json(Analysis& an);
nlohmann::json out_json(Analysis& an);
nlohmann::json aut_json(Analysis& an);
nlohmann::json lagrangians_json(Analysis& an);
/// Rows of lagrangians_json restricted to L0.
nlohmann::json l0_json(Analysis& an);
nlohmann::json bimodules_json(Analysis& an);
nlohmann::json brpic_json(Analysis& an);
nlohmann::json checks_json(const std::vector<Check>& checks);

/// The whole document. Embeds the cheap cross-checks; `check` runs the rest.
nlohmann::json report_json(Analysis& an, const std::string& spec);

/// Human-readable rendering of each block.
void print_schur(std::ostream& os, const nlohmann::json& j);
void print_out(std::ostream& os, const nlohmann::json& j);
void print_aut(std::ostream& os, const nlohmann::json& j);
void print_lagrangians(std::ostream& os, const nlohmann::json& rows);
void print_bimodules(std::ostream& os, const nlohmann::json& j);
void print_brpic(std::ostream& os, const nlohmann::json& j);
void print_checks(std::ostream& os, const nlohmann::json& checks);
void print_report(std::ostream& os, const nlohmann::json& doc);

/// Result cache keyed by canonical spec and schema version.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::filesystem::path path_for(const std::string& spec) const;
  /// Stored text, or nothing when absent. Corrupt or mismatched entries are
  /// reported on `warn` and treated as absent.
  std::optional<std::string> load(const std::string& spec, std::ostream& warn) const;
  /// Creates the directory when missing.
  void store(const std::string& spec, const std::string& text) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace brpic
