#include "brpic/report.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "brpic/error.hpp"

namespace brpic {

using nlohmann::json;

namespace {

json subgroup_json(const Subgroup& s) {
  return {{"order", s.order()}, {"elements", s.elements()}, {"structure", describe_group(s.as_group())}};
}

const char* status_name(LabelStatus s) {
  switch (s) {
    case LabelStatus::CanonicalRepG: return "canonical-RepG";
    case LabelStatus::Semidirect: return "semidirect";
    case LabelStatus::CandidateSet: return "candidate-set";
    case LabelStatus::Unlabeled: return "unlabeled";
  }
  return "unlabeled";
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

std::string join(const json& arr, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += sep;
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s;
}

Check guarded(const std::string& name, const std::function<std::string()>& body) {
  try {
    return Check{name, true, body()};
  } catch (const ConsistencyError& e) {
    return Check{name, false, e.what()};
  }
}

}  // namespace

json group_json(Analysis& an, const std::string& spec) {
  const auto& g = an.group();
  return {{"spec", spec}, {"order", g->order()}, {"abelian", g->is_abelian()}, {"structure", describe_group(g)}};
}

json schur_json(Analysis& an) { return {{"invariant_factors", an.schur().factors()}}; }

json out_json(Analysis& an) { return {{"order", an.automorphisms().outer.size()}, {"structure", an.out_name()}}; }

json aut_json(Analysis& an) {
  const auto& a = an.automorphisms();
  return {{"order", a.all.size()}, {"inner_order", a.inner.size()}, {"out_order", a.outer.size()}};
}

json lagrangians_json(Analysis& an) {
  const auto& ls = an.lagrangians();
  std::optional<std::vector<Lagrangian>> l0;
  try {
    l0 = an.l0();
  } catch (const CapExceeded&) {
  }
  json rows = json::array();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const auto& l = ls[i];
    json groups = json::array();
    for (const auto& g : l.label.groups) groups.push_back(describe_group(g));
    std::optional<bool> in;
    if (l0) in = std::find(l0->begin(), l0->end(), l.lagrangian) != l0->end();
    rows.push_back({{"index", i},
                    {"subgroup", subgroup_json(l.lagrangian.n)},
                    {"form", {{"trivial", l.lagrangian.b.is_zero()}, {"modulus", l.lagrangian.b.modulus}, {"values", l.lagrangian.b.values}}},
                    {"label", {{"status", status_name(l.label.status)}, {"groups", groups}}},
                    {"in_l0_by_label", optional_bool(l.in_l0)},
                    {"in_l0", optional_bool(in)}});
  }
  return rows;
}

json l0_json(Analysis& an) {
  an.l0();
  json rows = json::array();
  for (auto& r : lagrangians_json(an))
    if (r["in_l0"] == true) rows.push_back(std::move(r));
  return rows;
}

json bimodules_json(Analysis& an) {
  const auto& bc = an.bimodules();
  json orbits = json::array();
  for (std::size_t i = 0; i < bc.orbits().size(); ++i) {
    const auto& o = bc.orbits()[i];
    const auto& d = o.representative;
    orbits.push_back({{"index", i},
                      {"l_order", d.l.order()},
                      {"l1", subgroup_json(d.l1)},
                      {"l2", subgroup_json(d.l2)},
                      {"schur_coordinates", o.coordinates},
                      {"size", o.size},
                      {"involution", bc.is_involution(d)},
                      {"image", an.lagrangian_index(bc.canonical_image(d))}});
  }
  return {{"goursat_triples", bc.triple_count()},
          {"subgroup_classes", bc.subgroup_class_count()},
          {"orbit_count", bc.orbits().size()},
          {"involutions", an.involutions()},
          {"orbits", orbits}};
}

json brpic_json(Analysis& an) {
  const i64 order = an.brpic_order();
  const auto& perm = an.permutation();
  const auto& id = an.identification();
  const bool bim = an.bimodules_available();
  return {{"order", order},
          {"formula", {{"schur", an.schur().order()}, {"out", an.automorphisms().outer.size()}, {"l0", an.l0().size()}}},
          {"orbit_count", bim ? json(an.bimodules().orbits().size()) : json(nullptr)},
          {"a0", {{"order", an.a0().size()}, {"structure", describe_group(an.a0().as_group())}}},
          {"kernel_order", perm.kernel.size()},
          {"image_order", order / static_cast<i64>(perm.kernel.size())},
          {"a0_image", perm.image},
          {"involutions", bim ? json(an.involutions()) : json(nullptr)},
          {"candidates", id.survivors},
          {"constraints", id.constraints}};
}

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
  return out;
}

json report_json(Analysis& an, const std::string& spec) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["group"] = group_json(an, spec);
  doc["schur"] = schur_json(an);
  doc["out"] = out_json(an);
  doc["lagrangians"] = lagrangians_json(an);
  doc["l0"] = l0_json(an);
  doc["bimodules"] = an.bimodules_available() ? bimodules_json(an) : json(nullptr);
  doc["brpic"] = brpic_json(an);
  std::vector<Check> checks;
  checks.push_back(guarded("order-formula", [&] {
    std::ostringstream os;
    os << "|Schur| |Out| |L0| = " << an.brpic_order();
    if (an.bimodules_available()) os << " = orbit count";
    return os.str();
  }));
  checks.push_back(guarded("l0-labels", [&] {
    int definite = 0;
    for (const auto& l : an.lagrangians()) definite += l.in_l0 ? 1 : 0;
    return std::to_string(definite) + " definite labels agree with L0";
  }));
  checks.push_back(guarded("a0-stabilizer", [&] {
    const auto base = canonical_lagrangian(an.group());
    for (std::size_t e = 0; e < an.a0().size(); ++e)
      if (!(an.a0().act(e, base) == base)) throw ConsistencyError("A0 moves L(1,1)");
    return std::string("A0 fixes L(1,1)");
  }));
  doc["checks"] = checks_json(checks);
  return doc;
}

void print_schur(std::ostream& os, const json& j) {
  const auto& f = j["invariant_factors"];
  os << "Schur multiplier: ";
  if (f.empty()) {
    os << "trivial\n";
    return;
  }
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " x " : "") << "Z/" << f[i].get<i64>();
  os << "\n";
}

void print_out(std::ostream& os, const json& j) {
  os << "Out(G): " << j["structure"].get<std::string>() << " (order " << j["order"] << ")\n";
}

void print_aut(std::ostream& os, const json& j) {
  os << "|Aut(G)| = " << j["order"] << ", |Inn(G)| = " << j["inner_order"] << ", |Out(G)| = " << j["out_order"] << "\n";
}

void print_lagrangians(std::ostream& os, const json& rows) {
  for (const auto& r : rows) {
    const auto& n = r["subgroup"];
    os << std::setw(3) << r["index"].get<int>() << "  N=" << n["structure"].get<std::string>() << " {"
       << join(n["elements"], ",") << "}  form=" << (r["form"]["trivial"].get<bool>() ? "trivial" : "nontrivial")
       << "  label=" << r["label"]["status"].get<std::string>();
    if (!r["label"]["groups"].empty()) os << "[" << join(r["label"]["groups"], ";") << "]";
    os << "  L0=" << (r["in_l0"].is_null() ? "?" : r["in_l0"].get<bool>() ? "yes" : "no") << "\n";
  }
}

void print_bimodules(std::ostream& os, const json& j) {
  os << "Goursat triples: " << j["goursat_triples"] << ", subgroup classes: " << j["subgroup_classes"]
     << ", orbits: " << j["orbit_count"] << ", involutions: " << j["involutions"] << "\n";
  for (const auto& o : j["orbits"])
    os << std::setw(3) << o["index"].get<int>() << "  |L|=" << o["l_order"] << "  L1=" << o["l1"]["structure"].get<std::string>()
       << "  L2=" << o["l2"]["structure"].get<std::string>() << "  class=(" << join(o["schur_coordinates"], ",")
       << ")  size=" << o["size"] << (o["involution"].get<bool>() ? "  involution" : "") << "  image=" << o["image"]
       << "\n";
}

void print_brpic(std::ostream& os, const json& j) {
  const auto& f = j["formula"];
  os << "|BrPic| = " << j["order"] << " = " << f["schur"] << " * " << f["out"] << " * " << f["l0"] << "\n";
  os << "A0 = " << j["a0"]["structure"].get<std::string>() << ", kernel on L0 of order " << j["kernel_order"]
     << ", image of order " << j["image_order"] << "\n";
  os << "candidates: " << (j["candidates"].empty() ? std::string("unrecognized") : join(j["candidates"], ", ")) << "\n";
  for (const auto& c : j["constraints"]) os << "  " << c.get<std::string>() << "\n";
}

void print_checks(std::ostream& os, const json& checks) {
  for (const auto& c : checks)
    os << (c["pass"].get<bool>() ? "pass " : "FAIL ") << c["name"].get<std::string>() << ": "
       << c["details"].get<std::string>() << "\n";
}

void print_report(std::ostream& os, const json& doc) {
  const auto& g = doc["group"];
  os << "group " << g["spec"].get<std::string>() << " of order " << g["order"] << " (" << g["structure"].get<std::string>()
     << ")\n";
  print_schur(os, doc["schur"]);
  print_out(os, doc["out"]);
  os << "Lagrangians: " << doc["lagrangians"].size() << ", in L0: " << doc["l0"].size() << "\n";
  print_lagrangians(os, doc["lagrangians"]);
  if (!doc["bimodules"].is_null())
    os << "bimodule orbits: " << doc["bimodules"]["orbit_count"] << ", involutions: " << doc["bimodules"]["involutions"]
       << "\n";
  print_brpic(os, doc["brpic"]);
  print_checks(os, doc["checks"]);
}

std::filesystem::path ReportCache::path_for(const std::string& spec) const {
  std::string safe;
  for (char c : spec) safe += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  std::ostringstream h;
  h << std::hex << std::hash<std::string>{}(spec);
  return dir_ / (safe.substr(0, 48) + "-" + h.str() + ".v" + std::to_string(kSchemaVersion) + ".json");
}

std::optional<std::string> ReportCache::load(const std::string& spec, std::ostream& warn) const {
  const auto p = path_for(spec);
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  try {
    const json doc = json::parse(text);
    if (doc.at("schema_version").get<int>() != kSchemaVersion || doc.at("group").at("spec").get<std::string>() != spec)
      throw std::runtime_error("key mismatch");
  } catch (const std::exception& e) {
    warn << "warning: ignoring corrupt cache entry " << p.string() << " (" << e.what() << ")\n";
    return std::nullopt;
  }
  return text;
}

void ReportCache::store(const std::string& spec, const std::string& text) const {
  std::filesystem::create_directories(dir_);
  const auto p = path_for(spec);
  const auto tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache entry " + tmp);
    out << text;
  }
  std::filesystem::rename(tmp, p);
}

}  // namespace brpic
