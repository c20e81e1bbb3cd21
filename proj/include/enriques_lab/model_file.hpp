#ifndef ENRIQUES_LAB_MODEL_FILE_HPP
#define ENRIQUES_LAB_MODEL_FILE_HPP

// Blow-up model files: JSON (comments allowed) listing centers in blow-up
// order, named divisor classes, and checks to run against them.
//
//   {
//     "schema": "enriques-lab/blowup-model/1",
//     "centers": [
//       {"name": "E0", "kind": "point"},
//       {"name": "F01", "kind": "curve", "genus": 0,
//        "incidence": {"H": 1, "E2": 1, "E3": 1, "others": 0}}
//     ],
//     "classes": {"Sigma": "6H - 3*sum(E?) - 2*sum(F*)"},
//     "checks": [{"id": "...", "kind": "triple", "args": ["Sigma", "Sigma", "Sigma"], "expected": 24}]
//   }
//
// A curve's incidence map must name every existing generator unless the
// "others" key supplies the default for the unnamed ones.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "blowup.hpp"

namespace enriques_lab {

inline bool glob_match(std::string_view pattern, std::string_view text) {
  if (pattern.empty()) return text.empty();
  if (pattern.front() == '*') {
    for (std::size_t i = 0; i <= text.size(); ++i)
      if (glob_match(pattern.substr(1), text.substr(i))) return true;
    return false;
  }
  if (text.empty()) return false;
  if (pattern.front() != '?' && pattern.front() != text.front()) return false;
  return glob_match(pattern.substr(1), text.substr(1));
}

/// Parser for class expressions over a model's generators: integer
/// multipliers, + and -, parentheses, sum(glob, ...) over generator names,
/// and references to previously named classes.
class DivExprParser {
 public:
  DivExprParser(const BlowupModel& m, const std::map<std::string, DivClass>& named, std::string_view text)
      : m_(m), named_(named) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  DivClass parse() {
    if (s_.empty()) throw InputError("empty class expression");
    DivClass d = expr();
    if (pos_ != s_.size()) fail("unexpected character");
    return d;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("class expression '" + s_ + "': " + what + " at position " + std::to_string(pos_));
  }
  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

  DivClass expr() {
    DivClass d = m_.zero();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    d = neg ? d - term() : d + term();
    while (pos_ < s_.size()) {
      if (eat('+')) d = d + term();
      else if (eat('-')) d = d - term();
      else break;
    }
    return d;
  }

  DivClass term() {
    Integer k = 1;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      k = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) k = k * 10 + (s_[pos_++] - '0');
      eat('*');
    }
    return k * factor();
  }

  DivClass factor() {
    if (eat('(')) {
      DivClass d = expr();
      if (!eat(')')) fail("expected ')'");
      return d;
    }
    if (s_.compare(pos_, 4, "sum(") == 0) {
      pos_ += 4;
      DivClass d = m_.zero();
      do {
        std::string pat;
        while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')') pat += s_[pos_++];
        bool any = false;
        for (std::size_t g = 0; g < m_.size(); ++g)
          if (glob_match(pat, m_.generators()[g])) {
            d[g] += 1;
            any = true;
          }
        if (!any) fail("pattern '" + pat + "' matches no generator");
      } while (eat(','));
      if (!eat(')')) fail("expected ')'");
      return d;
    }
    std::string id;
    while (pos_ < s_.size() && ident_char(s_[pos_])) id += s_[pos_++];
    if (id.empty()) fail("expected a generator, class name, sum(...) or '('");
    if (auto it = named_.find(id); it != named_.end()) return it->second;
    for (std::size_t g = 0; g < m_.size(); ++g)
      if (m_.generators()[g] == id) return m_.generator(g);
    fail("unknown name '" + id + "'");
  }

  const BlowupModel& m_;
  const std::map<std::string, DivClass>& named_;
  std::string s_;
  std::size_t pos_ = 0;
};

inline DivClass parse_div_class(const BlowupModel& m, const std::map<std::string, DivClass>& named,
                                std::string_view text) {
  return DivExprParser(m, named, text).parse();
}

struct ModelCheck {
  std::string id;
  std::string kind;  // triple | zero_restriction | divisible
  std::string anchor;
  std::vector<std::string> args;     // class expressions
  std::vector<std::string> trivial;  // divisible: trivial classes
  long long modulus = 2;
  nlohmann::ordered_json expected;
};

struct ModelFile {
  std::string name;
  std::string note;
  BlowupModel model;
  std::map<std::string, DivClass> classes;
  std::vector<std::string> class_order;
  std::vector<ModelCheck> checks;
};

inline ModelFile parse_model_json(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text, nullptr, true, true);
  } catch (const nlohmann::ordered_json::parse_error& e) {
    throw SchemaError(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw SchemaError("model file must be a JSON object");
    if (j.value("schema", std::string()) != "enriques-lab/blowup-model/1")
      throw SchemaError("unsupported or missing schema tag");
    ModelFile f;
    f.name = j.value("name", std::string());
    f.note = j.value("note", std::string());
    f.model = BlowupModel::projective_space();
    for (const auto& c : j.at("centers")) {
      const std::string name = c.at("name").get<std::string>();
      const std::string kind = c.at("kind").get<std::string>();
      if (kind == "point") {
        if (c.contains("incidence")) throw SchemaError("point center " + name + " carries incidence data");
        f.model = f.model.push(Center::point(name));
      } else if (kind == "curve") {
        const auto& inc = c.at("incidence");
        if (!inc.is_object()) throw SchemaError("incidence of " + name + " must be an object");
        std::vector<Integer> v(f.model.size());
        std::vector<bool> given(f.model.size(), false);
        for (auto it = inc.begin(); it != inc.end(); ++it) {
          if (it.key() == "others") continue;
          const auto& gens = f.model.generators();
          const auto pos = std::find(gens.begin(), gens.end(), it.key());
          if (pos == gens.end()) throw SchemaError("curve " + name + " names unknown generator " + it.key());
          const std::size_t g = static_cast<std::size_t>(pos - gens.begin());
          v[g] = it.value().get<long long>();
          given[g] = true;
        }
        const bool has_default = inc.contains("others");
        for (std::size_t g = 0; g < v.size(); ++g) {
          if (given[g]) continue;
          if (!has_default)
            throw SchemaError("curve " + name + " has no incidence entry for generator " + f.model.generators()[g]);
          v[g] = inc.at("others").get<long long>();
        }
        f.model = f.model.push(Center::curve(name, c.value("genus", 0), std::move(v)));
      } else {
        throw SchemaError("center " + name + " has unknown kind '" + kind + "'");
      }
    }
    if (j.contains("classes")) {
      // Classes are evaluated in file order and may refer to earlier ones.
      for (auto it = j.at("classes").begin(); it != j.at("classes").end(); ++it) {
        if (f.classes.count(it.key())) throw SchemaError("class " + it.key() + " defined twice");
        f.classes[it.key()] = parse_div_class(f.model, f.classes, it.value().get<std::string>());
        f.class_order.push_back(it.key());
      }
    }
    if (j.contains("checks")) {
      for (const auto& c : j.at("checks")) {
        ModelCheck chk;
        chk.id = c.at("id").get<std::string>();
        chk.kind = c.at("kind").get<std::string>();
        chk.anchor = c.value("anchor", std::string());
        if (c.contains("args")) chk.args = c.at("args").get<std::vector<std::string>>();
        if (c.contains("trivial")) chk.trivial = c.at("trivial").get<std::vector<std::string>>();
        chk.modulus = c.value("modulus", 2LL);
        chk.expected = c.at("expected");
        f.checks.push_back(std::move(chk));
      }
    }
    return f;
  } catch (const nlohmann::ordered_json::exception& e) {
    throw SchemaError(std::string("model file: ") + e.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ModelFile load_model_file(const std::string& path) { return parse_model_json(read_text_file(path)); }

}  // namespace enriques_lab

#endif  // ENRIQUES_LAB_MODEL_FILE_HPP
