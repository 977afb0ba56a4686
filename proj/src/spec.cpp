#include "brpic/spec.hpp"

#include <cctype>

#include "brpic/config.hpp"
#include "brpic/error.hpp"
#include "brpic/families.hpp"

namespace brpic {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  GroupSpec parse() {
    if (s_.empty()) fail("empty group spec");
    GroupSpec first = factor();
    if (pos_ == s_.size()) return first;
    GroupSpec prod;
    prod.kind = GroupSpec::Kind::Product;
    prod.factors.push_back(std::move(first));
    while (pos_ < s_.size()) {
      expect('x');
      prod.factors.push_back(factor());
    }
    return prod;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool peek(const char* lit) const { return s_.compare(pos_, std::char_traits<char>::length(lit), lit) == 0; }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int number() {
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) {
      pos_ = start;
      fail("expected a number");
    }
    return static_cast<int>(v);
  }

  GroupSpec factor() {
    GroupSpec g;
    const std::size_t start = pos_;
    if (peek("perm:")) {
      pos_ += 5;
      g.kind = GroupSpec::Kind::Perm;
      expect('[');
      while (true) {
        std::vector<std::vector<int>> gen;
        while (pos_ < s_.size() && s_[pos_] == '(') {
          ++pos_;
          std::vector<int> cyc{number()};
          while (pos_ < s_.size() && s_[pos_] == ',') {
            ++pos_;
            cyc.push_back(number());
          }
          expect(')');
          if (cyc.size() > 1) gen.push_back(std::move(cyc));
        }
        g.perm.push_back(std::move(gen));
        if (pos_ < s_.size() && s_[pos_] == ';') {
          ++pos_;
          continue;
        }
        break;
      }
      expect(']');
      return g;
    }
    if (peek("table:")) {
      pos_ += 6;
      g.kind = GroupSpec::Kind::Table;
      g.path = s_.substr(pos_);
      if (g.path.empty()) fail("missing table path");
      pos_ = s_.size();
      return g;
    }
    if (peek("pq(")) {
      pos_ += 3;
      g.kind = GroupSpec::Kind::PQ;
      g.a = number();
      expect(',');
      g.b = number();
      expect(')');
      return g;
    }
    if (peek("Q8")) {
      pos_ += 2;
      g.kind = GroupSpec::Kind::Quaternion;
      return g;
    }
    if (pos_ >= s_.size()) fail("expected a group");
    const char c = s_[pos_++];
    switch (c) {
      case 'S': g.kind = GroupSpec::Kind::Symmetric; break;
      case 'A': g.kind = GroupSpec::Kind::Alternating; break;
      case 'D': g.kind = GroupSpec::Kind::Dihedral; break;
      case 'C': g.kind = GroupSpec::Kind::Cyclic; break;
      default:
        pos_ = start;
        fail(std::string("unknown group family '") + c + "'");
    }
    const std::size_t arg = pos_;
    g.a = number();
    if (g.a < 1) {
      pos_ = arg;
      fail("group parameter must be positive");
    }
    if (g.kind == GroupSpec::Kind::Dihedral && g.a % 2 != 0) {
      pos_ = arg;
      fail("dihedral label takes the group order, which must be even");
    }
    return g;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_spec(const std::string& text) { return Parser(text).parse(); }

std::string GroupSpec::canonical() const {
  switch (kind) {
    case Kind::Symmetric: return "S" + std::to_string(a);
    case Kind::Alternating: return "A" + std::to_string(a);
    case Kind::Dihedral: return "D" + std::to_string(a);
    case Kind::Quaternion: return "Q8";
    case Kind::Cyclic: return "C" + std::to_string(a);
    case Kind::PQ: return "pq(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::Table: return "table:" + path;
    case Kind::Perm: {
      std::string out = "perm:[";
      for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) out += ';';
        for (const auto& cyc : perm[i]) {
          out += '(';
          for (std::size_t j = 0; j < cyc.size(); ++j) out += (j ? "," : "") + std::to_string(cyc[j]);
          out += ')';
        }
      }
      return out + "]";
    }
    case Kind::Product: {
      std::string out;
      for (const auto& f : factors) out += (out.empty() ? "" : "x") + f.canonical();
      return out;
    }
  }
  return {};
}

GroupPtr GroupSpec::build() const {
  GroupPtr g;
  switch (kind) {
    case Kind::Symmetric: g = symmetric_group(a); break;
    case Kind::Alternating: g = alternating_group(a); break;
    case Kind::Dihedral: g = dihedral_group(a); break;
    case Kind::Quaternion: g = quaternion_group(); break;
    case Kind::Cyclic: g = cyclic_group(a); break;
    case Kind::PQ: g = pq_group(a, b); break;
    case Kind::Perm: g = permutation_group(perm); break;
    case Kind::Table: g = table_group(path); break;
    case Kind::Product: {
      long total = 1;
      std::vector<GroupPtr> parts;
      for (const auto& f : factors) {
        parts.push_back(f.build());
        total *= parts.back()->order();
        if (total > caps().analysis_order)
          throw CapExceeded(canonical() + " has order above the cap " + std::to_string(caps().analysis_order));
      }
      g = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, parts[i]).group;
      break;
    }
  }
  // Rename to the canonical spec; the table is unchanged.
  return make_group(g->order(), g->table(), canonical(), false);
}

GroupPtr build_group(const std::string& text) { return parse_spec(text).build(); }

}  // namespace brpic
