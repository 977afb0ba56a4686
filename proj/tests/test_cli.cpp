#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
};

Result lab(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + BRPIC_LAB + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("brpic-cli-" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("schur json") {
  const auto r = lab("schur D8 --format json");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"invariant_factors\":[2]}\n");
}

TEST_CASE("report Q8") {
  const auto dir = scratch("q8");
  const auto r = lab("report Q8 --format json --cache-dir " + dir.string());
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["brpic"]["order"] == 6);
  CHECK(doc["brpic"]["candidates"] == json::array({"S3"}));
  fs::remove_all(dir);
}

TEST_CASE("l0 S4 has three rows") {
  const auto r = lab("l0 S4");
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 3);
  CHECK(json::parse(lab("l0 S4 --format json").out).size() == 3);
}

TEST_CASE("exit codes") {
  CHECK(lab("schur D7").code == 2);
  CHECK(lab("schur S4x").code == 2);
  CHECK(lab("frobnicate S4").code == 2);
  CHECK(lab("schur").code == 2);
  CHECK(lab("schur S5").code == 3);
  CHECK(lab("brpic D18", "BRPIC_MAX_ORDER=8").code == 3);
  CHECK(lab("bimodules C2xC2xC2xC2xC2xC2").code == 3);
  CHECK(lab("check C2xC2").code == 0);
}

TEST_CASE("other commands") {
  CHECK(lab("out Q8").out.find("S3") != std::string::npos);
  CHECK(json::parse(lab("aut C2xC2 --format json").out)["order"] == 6);
  CHECK(json::parse(lab("lagrangians D8 --format json").out).size() == 7);
  CHECK(json::parse(lab("bimodules S3 --format json").out)["orbit_count"] == 2);
  CHECK(json::parse(lab("brpic A4 --format json").out)["order"] == 12);
  CHECK(lab("report S3 --no-cache").out.find("candidates: Z/2") != std::string::npos);
}

TEST_CASE("cache") {
  const auto dir = scratch("cache") / "nested";
  const auto first = lab("report D8 --format json --cache-dir " + dir.string());
  REQUIRE(first.code == 0);
  CHECK(fs::is_directory(dir));
  const auto second = lab("report D8 --format json --cache-dir " + dir.string());
  CHECK(second.out == first.out);
  CHECK(lab("report D8 --cache-dir " + dir.string()).out == lab("report D8 --cache-dir " + dir.string()).out);

  // Damage every entry: a warning, then a fresh computation.
  for (const auto& e : fs::directory_iterator(dir)) std::ofstream(e.path()) << "{ not json";
  const auto third = lab("report D8 --format json --cache-dir " + dir.string());
  CHECK(third.code == 0);
  CHECK(third.out.find("warning") != std::string::npos);
  const auto fourth = lab("report D8 --format json --cache-dir " + dir.string());
  CHECK(fourth.out.find("warning") == std::string::npos);
  CHECK(json::parse(fourth.out)["brpic"]["order"] == 24);
  fs::remove_all(dir.parent_path());
}

TEST_CASE("report matches the schema's required keys") {
  const auto schema = json::parse(slurp(fs::path(SOURCE_DIR) / "docs" / "report.schema.json"));
  const auto doc = json::parse(lab("report A4 --format json --no-cache").out);
  CHECK(doc["schema_version"] == 1);
  for (const auto& key : schema["required"]) CHECK_MESSAGE(doc.contains(key.get<std::string>()), key);
  for (const auto& [block, spec] : schema["properties"].items()) {
    if (!spec.contains("required") || !doc[block].is_object()) continue;
    for (const auto& key : spec["required"]) CHECK_MESSAGE(doc[block].contains(key.get<std::string>()), block << "." << key);
  }
  for (const auto& c : doc["checks"]) CHECK(c["pass"] == true);
}
