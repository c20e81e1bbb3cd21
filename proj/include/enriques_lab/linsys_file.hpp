#ifndef ENRIQUES_LAB_LINSYS_FILE_HPP
#define ENRIQUES_LAB_LINSYS_FILE_HPP

// Linear-system spec files: JSON (comments allowed).
//
//   {
//     "schema": "enriques-lab/linsys/1",
//     "degree": 6,
//     "planes": {"f0": [1, 0, 0, 0]},
//     "conditions": [
//       {"label": "l01", "line": {"planes": ["f0", "f1"]}, "order": 2},
//       {"label": "m",   "line": {"points": [[0, 0, 1, 0], [0, 0, 0, 1]]}, "order": 1}
//     ],
//     "expected_dimension": 13
//   }
//
// Optional sections: contained_lines, not_contained_lines, expected_form (forms
// in s0..s3 and the plane names), tangent_cones (point and a form the cone
// must be proportional to), face_flag, random_trihedra.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "linear_systems.hpp"
#include "model_file.hpp"

namespace enriques_lab {

struct TangentConeCheck {
  std::string label;
  ProjPoint point;
  Polynomial expected;  // the cone must be a nonzero multiple of this
};

struct FaceFlag {
  std::vector<std::string> faces;
  std::vector<long long> expected_dimensions;  // after each successive face
  std::vector<Polynomial> residual;            // spans the final system
};

struct RandomTrihedra {
  std::uint64_t seed = 0;
  int runs = 0;
};

struct LinSysFile {
  std::string name;
  std::string note;
  LinSysSpec spec;
  std::map<std::string, LinearForm> planes;
  std::optional<long long> expected_dimension;
  std::vector<Flat> contained_lines;
  std::vector<Flat> not_contained_lines;
  std::vector<Polynomial> expected_form;
  std::vector<TangentConeCheck> tangent_cones;
  std::optional<FaceFlag> face_flag;
  std::optional<RandomTrihedra> random_trihedra;
};

/// s0..s3 followed by the plane names.
inline Polynomial parse_form(const std::map<std::string, LinearForm>& planes, const std::string& text) {
  std::vector<std::string> names = p3_names();
  std::vector<Polynomial> img;
  for (std::size_t i = 0; i < kP3; ++i) img.push_back(Polynomial::variable(kP3, i));
  for (const auto& [n, f] : planes) {
    names.push_back(n);
    img.push_back(linear_polynomial(f));
  }
  return parse_polynomial(names, text).substitute(img);
}

namespace detail {

inline std::vector<Rational> rational_vector(const nlohmann::ordered_json& j) {
  std::vector<Rational> v;
  for (const auto& x : j) {
    if (x.is_number_integer()) v.emplace_back(x.get<long long>());
    else if (x.is_string()) v.emplace_back(x.get<std::string>());
    else throw SchemaError("coordinate must be an integer or a \"p/q\" string");
  }
  return v;
}

inline const LinearForm& plane_named(const std::map<std::string, LinearForm>& planes, const std::string& n) {
  auto it = planes.find(n);
  if (it == planes.end()) throw SchemaError("unknown plane " + n);
  return it->second;
}

/// {"planes": [...]} or {"points": [...]}.
inline Flat flat_from_json(const std::map<std::string, LinearForm>& planes, const nlohmann::ordered_json& j,
                           const std::string& label) {
  if (j.contains("planes")) {
    std::vector<LinearForm> forms;
    for (const auto& n : j.at("planes")) forms.push_back(plane_named(planes, n.get<std::string>()));
    return flat_of_forms(forms, label);
  }
  if (j.contains("points")) {
    std::vector<ProjPoint> pts;
    for (const auto& p : j.at("points")) pts.push_back(rational_vector(p));
    return make_flat(pts, label);
  }
  throw SchemaError("flat " + label + " needs \"planes\" or \"points\"");
}

}  // namespace detail

inline LinSysFile parse_linsys_json(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text, nullptr, true, true);
  } catch (const nlohmann::ordered_json::parse_error& e) {
    throw SchemaError(std::string("linear system file is not valid JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || j.value("schema", std::string()) != "enriques-lab/linsys/1")
      throw SchemaError("unsupported or missing schema tag");
    LinSysFile f;
    f.name = j.value("name", std::string());
    f.note = j.value("note", std::string());
    f.spec.degree = j.at("degree").get<int>();
    if (f.spec.degree < 1) throw SchemaError("degree must be positive");
    if (j.contains("planes"))
      for (auto it = j.at("planes").begin(); it != j.at("planes").end(); ++it) {
        auto v = detail::rational_vector(it.value());
        if (v.size() != kP3) throw SchemaError("plane " + it.key() + " needs 4 coefficients");
        if (v == LinearForm(kP3, Rational(0))) throw SchemaError("plane " + it.key() + " is the zero form");
        f.planes[it.key()] = v;
      }
    for (const auto& c : j.at("conditions")) {
      const std::string label = c.value("label", std::string());
      f.spec.conditions.push_back({detail::flat_from_json(f.planes, c.at("line"), label), c.value("order", 1)});
    }
    if (j.contains("expected_dimension")) f.expected_dimension = j.at("expected_dimension").get<long long>();
    if (j.contains("contained_lines"))
      for (const auto& c : j.at("contained_lines"))
        f.contained_lines.push_back(detail::flat_from_json(f.planes, c, c.value("label", std::string())));
    if (j.contains("not_contained_lines"))
      for (const auto& c : j.at("not_contained_lines"))
        f.not_contained_lines.push_back(detail::flat_from_json(f.planes, c, c.value("label", std::string())));
    if (j.contains("expected_form"))
      for (const auto& s : j.at("expected_form")) f.expected_form.push_back(parse_form(f.planes, s.get<std::string>()));
    if (j.contains("tangent_cones"))
      for (const auto& c : j.at("tangent_cones")) {
        TangentConeCheck t;
        t.label = c.value("label", std::string());
        const Flat p = detail::flat_from_json(f.planes, c.at("at"), t.label);
        if (p.points.size() != 1) throw SchemaError("tangent cone " + t.label + " is not taken at a point");
        t.point = p.points.front();
        t.expected = parse_form(f.planes, c.at("proportional_to").get<std::string>());
        f.tangent_cones.push_back(std::move(t));
      }
    if (j.contains("face_flag")) {
      const auto& c = j.at("face_flag");
      FaceFlag ff;
      ff.faces = c.at("faces").get<std::vector<std::string>>();
      for (const auto& n : ff.faces) detail::plane_named(f.planes, n);
      ff.expected_dimensions = c.at("expected_dimensions").get<std::vector<long long>>();
      if (ff.expected_dimensions.size() != ff.faces.size())
        throw SchemaError("face_flag needs one expected dimension per face");
      for (const auto& s : c.at("residual")) ff.residual.push_back(parse_form(f.planes, s.get<std::string>()));
      f.face_flag = std::move(ff);
    }
    if (j.contains("random_trihedra")) {
      const auto& c = j.at("random_trihedra");
      RandomTrihedra r;
      r.seed = c.at("seed").get<std::uint64_t>();
      r.runs = c.at("runs").get<int>();
      f.random_trihedra = r;
    }
    return f;
  } catch (const nlohmann::ordered_json::exception& e) {
    throw SchemaError(std::string("linear system file: ") + e.what());
  }
}

inline LinSysFile load_linsys_file(const std::string& path) { return parse_linsys_json(read_text_file(path)); }

/// The spec with every face of the flag contained, one face at a time.
inline std::vector<LinSysSpec> face_flag_specs(const LinSysFile& f) {
  std::vector<LinSysSpec> out;
  if (!f.face_flag) return out;
  LinSysSpec s = f.spec;
  for (const auto& n : f.face_flag->faces) {
    s.conditions.push_back({plane_of(detail::plane_named(f.planes, n), n), 1});
    out.push_back(s);
  }
  return out;
}

/// Order-2 conditions along the edges of two trihedra.
inline LinSysSpec two_trihedra_spec(int degree, const Trihedron& t, const Trihedron& tp, int order = 2) {
  LinSysSpec s;
  s.degree = degree;
  for (auto& e : trihedron_edges(t, "l")) s.conditions.push_back({std::move(e), order});
  for (auto& e : trihedron_edges(tp, "l'")) s.conditions.push_back({std::move(e), order});
  return s;
}

}  // namespace enriques_lab

#endif  // ENRIQUES_LAB_LINSYS_FILE_HPP
