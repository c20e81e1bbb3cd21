#ifndef ENRIQUES_LAB_REPORTS_HPP
#define ENRIQUES_LAB_REPORTS_HPP

// Check records and the verification suites behind the CLI: Tables 1 and 2,
// blow-up model files, linear-system files and the genus-13 cone model.
// Reports are deterministic: fixed check order, ordered JSON keys, no clocks.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "blowup.hpp"
#include "enriques.hpp"
#include "linsys_file.hpp"
#include "model_file.hpp"
#include "projective_models.hpp"

namespace enriques_lab {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Info };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  std::string anchor;
  Json inputs = Json::object();
  Json computed;
  Json expected;
  Status status = Status::Info;
  std::vector<std::string> cites;  // library operations the check ran

  Json to_json() const {
    Json j;
    j["id"] = id;
    j["anchor"] = anchor;
    j["inputs"] = inputs;
    j["computed"] = computed;
    j["expected"] = expected;
    j["status"] = to_string(status);
    j["cites"] = cites;
    return j;
  }
};

inline Status status_of(bool ok) { return ok ? Status::Pass : Status::Fail; }

struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  CheckResult& add(CheckResult c) {
    checks.push_back(std::move(c));
    return checks.back();
  }
  void append(const Report& r) { checks.insert(checks.end(), r.checks.begin(), r.checks.end()); }
  std::size_t count(Status s) const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
  }
  bool all_pass() const { return count(Status::Fail) == 0; }

  Json to_json() const {
    Json j;
    j["report"] = title;
    j["passed"] = count(Status::Pass);
    j["failed"] = count(Status::Fail);
    j["info"] = count(Status::Info);
    j["status"] = all_pass() ? "pass" : "fail";
    j["checks"] = Json::array();
    for (const auto& c : checks) j["checks"].push_back(c.to_json());
    return j;
  }

  std::string to_text() const {
    std::ostringstream out;
    out << title << "\n";
    for (const auto& c : checks) {
      const char* tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "INFO";
      out << "  " << tag << "  " << c.id << "  computed=" << c.computed.dump();
      if (!c.expected.is_null()) out << " expected=" << c.expected.dump();
      out << "\n";
    }
    out << count(Status::Pass) << " passed, " << count(Status::Fail) << " failed";
    if (count(Status::Info)) out << ", " << count(Status::Info) << " informational";
    out << "\n";
    return out.str();
  }
};

inline Json json_of(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(v));
  return Json(v.str());
}

inline Json json_of(const Rational& v) {
  if (denominator(v) == 1) return json_of(numerator(v));
  return Json(v.str());
}

inline Json json_of(const SidCoefficients& s) {
  Json j;
  j["a0"] = s.a0;
  j["a"] = s.a;
  j["eps"] = s.eps;
  return j;
}

// ---------------------------------------------------------------------------
// Fixture location: --fixtures, then ENRIQUES_LAB_FIXTURES, then the build default.

inline std::string fixture_dir(const std::optional<std::string>& override_dir = std::nullopt) {
  if (override_dir && !override_dir->empty()) return *override_dir;
  if (const char* env = std::getenv("ENRIQUES_LAB_FIXTURES"); env && *env) return env;
#ifdef ENRIQUES_LAB_DEFAULT_FIXTURES
  return ENRIQUES_LAB_DEFAULT_FIXTURES;
#else
  return "fixtures";
#endif
}

inline std::string fixture_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

inline Json parse_fixture_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text, nullptr, true, true);
  } catch (const Json::parse_error& e) {
    throw SchemaError(what + " is not valid JSON: " + e.what());
  }
}

inline SidCoefficients sid_from_json(const Json& j) {
  SidCoefficients s;
  s.a0 = j.at("a0").get<int>();
  const auto a = j.at("a").get<std::vector<int>>();
  if (a.size() != 10) throw SchemaError("SID tuple needs 10 entries in \"a\"");
  std::copy(a.begin(), a.end(), s.a.begin());
  s.eps = j.at("eps").get<int>();
  if (s.eps != 0 && s.eps != 1) throw SchemaError("eps must be 0 or 1");
  return s;
}

// ---------------------------------------------------------------------------
// Table 1.

struct Table1Row {
  long long p = 0;
  long long phi = 0;
  std::string component;
  std::string sid_text;
  SidCoefficients sid;
};

inline std::vector<Table1Row> parse_table1(const std::string& text) {
  const Json j = parse_fixture_json(text, "table 1");
  try {
    if (j.value("schema", std::string()) != "enriques-lab/table1/1") throw SchemaError("unsupported or missing schema tag");
    std::vector<Table1Row> rows;
    for (const auto& r : j.at("rows"))
      rows.push_back({r.at("p").get<long long>(), r.at("phi").get<long long>(), r.at("component").get<std::string>(),
                      r.at("sid_text").get<std::string>(), sid_from_json(r.at("sid"))});
    if (rows.empty()) throw SchemaError("table 1 has no rows");
    return rows;
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("table 1: ") + e.what());
  }
}

inline std::vector<Table1Row> load_table1(const std::string& path) { return parse_table1(read_text_file(path)); }

inline CheckResult check_table1_row(const Table1Row& row) {
  CheckResult c;
  c.id = "table1/" + row.component;
  c.anchor = "Table 1: p = " + std::to_string(row.p) + ", phi = " + std::to_string(row.phi) + ", " + row.sid_text;
  c.cites = {"SidCoefficients::normalized", "parse_class", "genus_of", "phi"};
  c.inputs["sid"] = json_of(row.sid);
  c.inputs["sid_text"] = row.sid_text;
  const PicClass h = row.sid.to_pic();
  const bool text_agrees = parse_class(row.sid_text) == h;
  const Integer h2 = square(h.num);
  c.computed["H2"] = json_of(h2);
  c.computed["normalized"] = row.sid.normalized();
  c.computed["text_matches_tuple"] = text_agrees;
  bool ok = row.sid.normalized() && text_agrees && h2 > 0;
  if (h2 > 0) {
    c.computed["p"] = json_of(genus_of(h));
    c.computed["phi"] = json_of(phi(h));
    ok = ok && genus_of(h) == row.p && phi(h) == row.phi && h2 == 2 * row.p - 2;
  }
  c.expected["H2"] = 2 * row.p - 2;
  c.expected["normalized"] = true;
  c.expected["text_matches_tuple"] = true;
  c.expected["p"] = row.p;
  c.expected["phi"] = row.phi;
  c.status = status_of(ok);
  return c;
}

inline Report verify_table1(const std::vector<Table1Row>& rows) {
  Report r{"sid verify-table1"};
  for (const auto& row : rows) r.add(check_table1_row(row));
  return r;
}

// ---------------------------------------------------------------------------
// Blow-up model files.

inline CheckResult run_model_check(const ModelFile& f, const ModelCheck& chk) {
  CheckResult c;
  c.id = (f.name.empty() ? std::string("model") : f.name) + "/" + chk.id;
  c.anchor = chk.anchor;
  c.inputs["kind"] = chk.kind;
  c.inputs["args"] = chk.args;
  c.expected = chk.expected;
  std::vector<DivClass> a;
  for (const auto& s : chk.args) a.push_back(parse_div_class(f.model, f.classes, s));
  if (chk.kind == "triple") {
    if (a.size() != 3) throw SchemaError("check " + chk.id + ": triple needs three classes");
    c.cites = {"triple_product"};
    const Integer v = f.model.triple(a[0], a[1], a[2]);
    c.computed = json_of(v);
    c.status = status_of(chk.expected.is_number_integer() && v == Integer(chk.expected.get<long long>()));
  } else if (chk.kind == "zero_restriction") {
    if (a.size() != 2) throw SchemaError("check " + chk.id + ": zero_restriction needs two classes");
    c.cites = {"check_zero_restriction"};
    const bool v = check_zero_restriction(f.model, a[0], a[1]);
    c.computed = v;
    c.status = status_of(chk.expected.is_boolean() && v == chk.expected.get<bool>());
  } else if (chk.kind == "divisible") {
    if (a.size() != 1) throw SchemaError("check " + chk.id + ": divisible needs one class");
    c.cites = {"divisible_mod_trivial"};
    std::vector<DivClass> t;
    for (const auto& s : chk.trivial) t.push_back(parse_div_class(f.model, f.classes, s));
    c.inputs["trivial"] = chk.trivial;
    c.inputs["modulus"] = chk.modulus;
    if (chk.modulus < 2) throw SchemaError("check " + chk.id + ": modulus must be >= 2");
    const bool v = divisible_mod_trivial(f.model, a[0], t, chk.modulus);
    c.computed = v;
    c.status = status_of(chk.expected.is_boolean() && v == chk.expected.get<bool>());
  } else {
    throw SchemaError("check " + chk.id + " has unknown kind '" + chk.kind + "'");
  }
  return c;
}

inline Report run_model_file(const ModelFile& f) {
  Report r{"blowup run " + f.name};
  CheckResult g;
  g.id = (f.name.empty() ? std::string("model") : f.name) + "/generators";
  g.anchor = "one generator per center plus H";
  g.computed = f.model.size();
  g.expected = f.model.centers().size() + 1;
  g.status = status_of(f.model.size() == f.model.centers().size() + 1);
  g.cites = {"push_blowup"};
  r.add(g);
  for (const auto& chk : f.checks) r.add(run_model_check(f, chk));
  return r;
}

// ---------------------------------------------------------------------------
// Linear-system files.

inline long long binomial(long long n, long long k) {
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline Report run_linsys_file(const LinSysFile& f, bool with_basis = false) {
  Report r{"linsys dim " + f.name};
  const std::string stem = f.name.empty() ? std::string("linsys") : f.name;
  const CoefficientSpace space = coefficient_space(f.spec);

  CheckResult mono;
  mono.id = stem + "/monomials";
  mono.anchor = "C(d+3,3) forms of degree d in four variables";
  mono.inputs["degree"] = f.spec.degree;
  mono.computed = space.monomials.size();
  mono.expected = binomial(f.spec.degree + 3, 3);
  mono.status = status_of(static_cast<long long>(space.monomials.size()) == binomial(f.spec.degree + 3, 3));
  mono.cites = {"monomials_of_degree"};
  r.add(mono);

  CheckResult dim;
  dim.id = stem + "/dimension";
  dim.anchor = "projective dimension of the system";
  dim.inputs["degree"] = f.spec.degree;
  dim.inputs["conditions"] = f.spec.conditions.size();
  dim.computed["dimension"] = space.projective_dimension();
  dim.computed["kernel_size"] = space.kernel.size();
  dim.computed["condition_rank"] = space.condition_rank;
  if (f.expected_dimension) {
    dim.expected["dimension"] = *f.expected_dimension;
    dim.status = status_of(space.projective_dimension() == *f.expected_dimension);
  }
  dim.cites = {"condition_matrix", "coefficient_space", "system_dimension"};
  if (with_basis) {
    dim.computed["basis"] = Json::array();
    for (const auto& m : space.members()) dim.computed["basis"].push_back(m.to_string(p3_names()));
  }
  r.add(dim);

  for (const auto& l : f.contained_lines) {
    CheckResult c;
    c.id = stem + "/contains/" + l.label;
    c.anchor = "every member contains " + l.label;
    c.computed = member_contains_line(space, l);
    c.expected = true;
    c.status = status_of(c.computed.get<bool>());
    c.cites = {"member_contains_line"};
    r.add(c);
  }
  for (const auto& l : f.not_contained_lines) {
    CheckResult c;
    c.id = stem + "/avoids/" + l.label;
    c.anchor = "a general member does not contain " + l.label;
    c.computed = member_contains_line(space, l);
    c.expected = false;
    c.status = status_of(!c.computed.get<bool>());
    c.cites = {"member_contains_line"};
    r.add(c);
  }
  if (!f.expected_form.empty()) {
    CheckResult c;
    c.id = stem + "/expected-form";
    c.anchor = "the system is spanned by the displayed generators";
    c.inputs["generators"] = f.expected_form.size();
    c.computed = verify_expected_form(space, f.expected_form);
    c.expected = true;
    c.status = status_of(c.computed.get<bool>());
    c.cites = {"verify_expected_form"};
    r.add(c);
  }
  if (!f.tangent_cones.empty()) {
    const Polynomial g = general_member(space, 1);
    for (const auto& t : f.tangent_cones) {
      CheckResult c;
      c.id = stem + "/tangent-cone/" + t.label;
      c.anchor = "tangent cone of a general member at " + t.label;
      Json pt = Json::array();
      for (const auto& x : t.point) pt.push_back(json_of(x));
      c.inputs["point"] = pt;
      const Polynomial cone = tangent_cone(g, t.point);
      const bool ok = tangent_cone_matches(g, t.point, t.expected);
      c.computed["degree"] = cone.degree();
      c.computed["proportional"] = ok;
      c.expected["degree"] = t.expected.degree();
      c.expected["proportional"] = true;
      c.status = status_of(ok && cone.degree() == t.expected.degree());
      c.cites = {"general_member", "tangent_cone"};
      r.add(c);
    }
    CheckResult c;
    c.id = stem + "/tangent-cone/coincidences";
    c.anchor = "points of an edge where the two tangent planes coincide";
    c.computed = "not computed";
    c.status = Status::Info;
    r.add(c);
  }
  if (f.face_flag) {
    const auto specs = face_flag_specs(f);
    CoefficientSpace cur = space;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      cur = coefficient_space(specs[i]);
      CheckResult c;
      c.id = stem + "/face-flag/" + f.face_flag->faces[i];
      c.anchor = "containing face " + f.face_flag->faces[i] + " cuts the dimension by one";
      c.computed = cur.projective_dimension();
      c.expected = f.face_flag->expected_dimensions[i];
      c.status = status_of(cur.projective_dimension() == f.face_flag->expected_dimensions[i]);
      c.cites = {"coefficient_space"};
      r.add(c);
    }
    CheckResult c;
    c.id = stem + "/face-flag/residual";
    c.anchor = "members containing every face: the faces times a plane";
    c.computed = verify_expected_form(cur, f.face_flag->residual);
    c.expected = true;
    c.status = status_of(c.computed.get<bool>());
    c.cites = {"verify_expected_form"};
    r.add(c);
  }
  if (f.random_trihedra && f.expected_dimension) {
    std::mt19937_64 rng(f.random_trihedra->seed);
    for (int run = 0; run < f.random_trihedra->runs; ++run) {
      const Trihedron a = random_trihedron(rng), b = random_trihedron(rng);
      CheckResult c;
      c.id = stem + "/random-trihedra/" + std::to_string(run);
      c.anchor = "dimension count on a seeded random pair of trihedra";
      c.inputs["seed"] = f.random_trihedra->seed;
      c.inputs["run"] = run;
      const long long d = system_dimension(two_trihedra_spec(f.spec.degree, a, b));
      c.computed = d;
      c.expected = *f.expected_dimension;
      c.status = status_of(d == *f.expected_dimension);
      c.cites = {"random_trihedron", "system_dimension"};
      r.add(c);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// The genus-13 cone model.

inline Json json_of_point(const IntPoint& p) {
  Json j = Json::array();
  for (const auto& x : p) j.push_back(json_of(x));
  return j;
}

inline Report run_pef13(const Pef13Data& d) {
  Report r{"model verify pef13"};
  const auto& vars = d.ideal.variables;
  auto add = [&](std::string id, std::string anchor, Json computed, Json expected, bool ok,
                 std::vector<std::string> cites) -> CheckResult& {
    CheckResult c;
    c.id = "pef13/" + std::move(id);
    c.anchor = std::move(anchor);
    c.computed = std::move(computed);
    c.expected = std::move(expected);
    c.status = status_of(ok);
    c.cites = std::move(cites);
    return r.add(std::move(c));
  };

  const bool param = parametrization_vanishes(d.ideal, d.parametrization);
  add("parametrization", "the quadrics vanish on lambda(P^2) and on the cone over it", param, true, param,
      {"parametrization_vanishes"});
  const int sq = square_scalar(d.t);
  add("involution/square", "t o t is the identity", sq, 1, sq == 1, {"InvolutionSpec"});
  const bool pres = involution_preserves_ideal(d.ideal, d.t);
  add("involution/preserves-ideal", "t maps the ideal of V to itself", pres, true, pres,
      {"involution_preserves_ideal"});

  std::set<IntPoint> listed;
  for (const auto& [name, pt] : d.listed_fixed_points) {
    std::vector<Rational> x(pt.begin(), pt.end());
    bool on = true;
    for (const auto& g : d.ideal.generators) on = on && g.evaluate(x) == 0;
    std::vector<Rational> tx(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) tx[i] = Rational(d.t.sign[i]) * x[d.t.source[i]];
    const bool fixed = normalize_point(tx) == pt;
    Json comp;
    comp["on_cone"] = on;
    comp["fixed"] = fixed;
    Json exp;
    exp["on_cone"] = true;
    exp["fixed"] = true;
    add("fixed-points/" + name, "listed fixed point " + name, comp, exp, on && fixed, {"Polynomial::evaluate"})
        .inputs["point"] = json_of_point(pt);
    listed.insert(pt);
  }
  Json listed_json = Json::array();
  for (const auto& p : listed) listed_json.push_back(json_of_point(p));

  const auto route_a = fixed_points_on_cone(d.ideal, d.t);
  Json a_json = Json::array();
  for (const auto& p : route_a) a_json.push_back(json_of_point(p));
  add("fixed-points/eigenspaces", "fixed locus on V from the two eigenspaces of t", a_json, listed_json,
      std::set<IntPoint>(route_a.begin(), route_a.end()) == listed, {"fixed_points_on_cone"});

  const bool inter = cremona_intertwines(d);
  add("cremona/intertwines", "lambda(c(u)) = u0 u1 u2 t(lambda(u))", inter, true, inter, {"cremona_intertwines"});
  Json crem = Json::array();
  for (const auto& p : cremona_fixed_points()) crem.push_back(json_of_point(p));
  add("cremona/fixed-points", "fixed points of the plane Cremona involution", crem,
      Json::parse("[[1,1,1],[1,1,-1],[1,-1,1],[1,-1,-1]]"), crem.size() == 4, {"cremona_fixed_points"});
  const auto route_b = fixed_points_via_plane(d);
  Json b_json = Json::array();
  for (const auto& p : route_b) b_json.push_back(json_of_point(p));
  add("fixed-points/plane", "lambda of the Cremona fixed points, plus the vertex", b_json, listed_json,
      std::set<IntPoint>(route_b.begin(), route_b.end()) == listed, {"fixed_points_via_plane"});

  const bool inv = zmap_invariance(d.zmap, d.t);
  add("zmap/invariance", "every Z_i is t-invariant", inv, true, inv, {"zmap_invariance"});

  for (const auto& rel : d.h13) {
    const Polynomial diff = h13_difference(d, rel);
    const auto cert = membership_certificate(d.ideal, diff);
    Json comp;
    bool ok = false;
    if (cert) {
      Json terms = Json::array();
      for (std::size_t i = 0; i < cert->coefficients.size(); ++i) {
        if (cert->coefficients[i] == 0) continue;
        Json t;
        t["coefficient"] = json_of(cert->coefficients[i]);
        t["generator"] = d.ideal.generators[i].to_string(vars);
        terms.push_back(t);
      }
      comp["certificate"] = terms;
      comp["integral"] = cert->integral;
      comp["rechecked"] = cert->rechecked;
      ok = cert->integral && cert->rechecked && cert->terms() <= 2;
    } else {
      comp["certificate"] = nullptr;
    }
    Json exp;
    exp["integral"] = true;
    exp["rechecked"] = true;
    exp["max_terms"] = 2;
    auto& c = add("h13/" + rel.first, rel.first + " = " + rel.second + " on V", comp, exp, ok,
                  {"h13_difference", "membership_certificate"});
    c.inputs["difference"] = diff.to_string(vars);
  }

  const long long deg = del_pezzo_degree(d);
  add("del-pezzo-degree", "(3l - e1 - e2 - e3)^2 on the sextic Del Pezzo surface", deg, 6, deg == 6,
      {"Lattice::pairing"});
  const long long g = genus_from_cone(deg);
  add("genus", "2p - 2 = 4 deg V", g, 13, g == 13, {"genus_from_cone"});

  const PullbackReport pb = pullback_decomposition_check(d);
  add("pullback/D2", "D^2 on the K3 double cover", pb.d_square, 12, pb.d_square == 12,
      {"pullback_decomposition_check"});
  bool offdiag = true, diag = true;
  for (std::size_t i = 0; i < pb.pencil_pairings.size(); ++i)
    for (std::size_t j = 0; j < pb.pencil_pairings.size(); ++j)
      (i == j ? diag : offdiag) = (i == j ? diag : offdiag) && pb.pencil_pairings[i][j] == (i == j ? 0 : 2);
  add("pullback/pairings", "Ebar_i . Ebar_j = 2 for i != j and Ebar_i^2 = 0", pb.pencil_pairings,
      Json::parse("[[0,2,2],[2,0,2],[2,2,0]]"), diag && offdiag, {"pullback_decomposition_check"});
  add("pullback/H2", "(pi^*H)^2 = (2D)^2 = 2(2p - 2)", pb.h_square, 48, pb.h_square == 48,
      {"pullback_decomposition_check"});
  Json pair = Json::array({pb.e1_dot_d, pb.lower_bound});
  add("pullback/inequality", "Ebar_1 . sum Etilde_i would be at least the K3 bound", pair, Json::array({4, 6}),
      pb.e1_dot_d == 4 && pb.lower_bound == 6 && pb.e1_dot_d < pb.lower_bound, {"k3_degree_bound"});

  for (const char* s : {"2(E1+E2+E3)", "2(E1+E2+E3)+K"}) {
    const PicClass h = parse_class(s);
    const Integer ph = phi(h);
    add(std::string("phi/") + s, "phi(H) = 4 for both candidates", json_of(ph), 4, ph == 4, {"phi"});
  }
  if (!d.open_question.empty()) {
    CheckResult c;
    c.id = "pef13/open-question";
    c.anchor = "which of the two candidate SIDs occurs";
    c.computed = d.open_question;
    c.status = Status::Info;
    r.add(c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Table 2.

struct K3Data {
  std::vector<std::vector<long long>> gram;
  std::vector<long long> pullback;
  long long min_pairing = 2;
  long long cover_degree = 2;

  /// Ebar_i . pi^*H.
  std::vector<long long> pullback_degrees() const {
    const Lattice l = Lattice::from_rows(gram, "K3 elliptic pencils");
    std::vector<Integer> h(pullback.begin(), pullback.end());
    std::vector<long long> out;
    for (std::size_t i = 0; i < pullback.size(); ++i) {
      std::vector<Integer> e(pullback.size(), Integer(0));
      e[i] = 1;
      out.push_back(static_cast<long long>(l.pairing(e, h)));
    }
    return out;
  }
  long long bound() const { return k3_degree_bound(pullback, min_pairing); }
};

struct Exclusion {
  std::string kind;  // elliptic-degree | divisibility-obstruction | k3-degree-bound
  long long degree = 0;
  K3Data k3;
  std::vector<long long> expected_pullback_degrees;
  std::optional<long long> expected_bound;
};

struct RowFacts {
  std::optional<std::string> cited_sid;
  std::optional<bool> numerically_2_divisible;
  std::optional<bool> two_divisible_in_pic;
  std::optional<int> phi_min;
  std::optional<int> phi_max;
};

struct SidEntry {
  std::string text;
  SidCoefficients sid;
};

struct Table2Row {
  std::string marking;
  std::string name;
  long long p = 0;
  long long phi = 0;
  std::string component;
  std::vector<SidEntry> sids;
  std::optional<MapKind> map_kind;
  std::vector<std::string> divisibility;
  std::string anchor;
  RowFacts facts;
  std::vector<Exclusion> exclusions;
  std::optional<std::string> blowup_model;
  std::optional<std::string> model_suite;
  std::optional<std::pair<std::string, std::string>> projection;  // (marking, curve)
  std::optional<std::string> open_question;
};

inline std::vector<Table2Row> parse_table2(const std::string& text) {
  const Json j = parse_fixture_json(text, "table 2");
  try {
    if (j.value("schema", std::string()) != "enriques-lab/table2/1") throw SchemaError("unsupported or missing schema tag");
    std::vector<Table2Row> rows;
    for (const auto& r : j.at("rows")) {
      Table2Row t;
      t.marking = r.at("marking").get<std::string>();
      t.name = r.value("name", std::string());
      t.p = r.at("p").get<long long>();
      t.phi = r.at("phi").get<long long>();
      t.component = r.value("component", std::string());
      for (const auto& s : r.at("sids")) t.sids.push_back({s.at("sid_text").get<std::string>(), sid_from_json(s.at("sid"))});
      if (t.sids.empty()) throw SchemaError("row " + t.marking + " has no SID");
      if (!r.at("map_kind").is_null()) t.map_kind = parse_map_kind(r.at("map_kind").get<std::string>());
      const auto& dv = r.at("divisibility");
      if (dv.is_string()) t.divisibility = {dv.get<std::string>()};
      else t.divisibility = dv.get<std::vector<std::string>>();
      if (t.divisibility.size() != t.sids.size()) throw SchemaError("row " + t.marking + ": one divisibility per SID");
      t.anchor = r.value("anchor", std::string());
      if (r.contains("facts")) {
        const auto& f = r.at("facts");
        if (f.contains("cited_sid")) t.facts.cited_sid = f.at("cited_sid").get<std::string>();
        if (f.contains("numerically_2_divisible")) t.facts.numerically_2_divisible = f.at("numerically_2_divisible").get<bool>();
        if (f.contains("two_divisible_in_pic")) t.facts.two_divisible_in_pic = f.at("two_divisible_in_pic").get<bool>();
        if (f.contains("phi_min")) t.facts.phi_min = f.at("phi_min").get<int>();
        if (f.contains("phi_max")) t.facts.phi_max = f.at("phi_max").get<int>();
      }
      if (r.contains("exclusions"))
        for (const auto& e : r.at("exclusions")) {
          Exclusion x;
          x.kind = e.at("kind").get<std::string>();
          if (x.kind != "elliptic-degree" && x.kind != "divisibility-obstruction" && x.kind != "k3-degree-bound")
            throw SchemaError("row " + t.marking + ": unknown exclusion kind " + x.kind);
          x.degree = e.value("degree", 0LL);
          const auto& k = e.at("k3");
          x.k3.gram = k.at("gram").get<std::vector<std::vector<long long>>>();
          x.k3.pullback = k.at("pullback").get<std::vector<long long>>();
          x.k3.min_pairing = k.value("min_pairing", 2LL);
          x.k3.cover_degree = k.value("cover_degree", 2LL);
          if (x.k3.gram.size() != x.k3.pullback.size()) throw SchemaError("row " + t.marking + ": K3 data sizes differ");
          if (e.contains("expected_pullback_degrees"))
            x.expected_pullback_degrees = e.at("expected_pullback_degrees").get<std::vector<long long>>();
          if (e.contains("expected_bound")) x.expected_bound = e.at("expected_bound").get<long long>();
          t.exclusions.push_back(std::move(x));
        }
      if (r.contains("blowup_model")) t.blowup_model = r.at("blowup_model").get<std::string>();
      if (r.contains("model_suite")) t.model_suite = r.at("model_suite").get<std::string>();
      if (r.contains("projection"))
        t.projection = std::make_pair(r.at("projection").at("from").get<std::string>(),
                                      r.at("projection").at("curve").get<std::string>());
      if (r.contains("open_question")) t.open_question = r.at("open_question").get<std::string>();
      rows.push_back(std::move(t));
    }
    return rows;
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("table 2: ") + e.what());
  }
}

inline std::vector<Table2Row> load_table2(const std::string& path) { return parse_table2(read_text_file(path)); }

/// Members of the SID with positive coefficient: (coefficient, isotropic class).
inline std::vector<std::pair<long long, NumClass>> sid_members(const SidCoefficients& s) {
  std::vector<std::pair<long long, NumClass>> out;
  if (s.a0 > 0) out.emplace_back(s.a0, NumClass::E12());
  for (int i = 0; i < 10; ++i)
    if (s.a[i] > 0) out.emplace_back(s.a[i], NumClass::E(i + 1));
  return out;
}

/// Why an exclusion rejects a candidate, or nullopt when it does not.
inline std::optional<std::string> exclusion_rejects(const Exclusion& x, const SidCoefficients& cand) {
  const PicClass h = cand.to_pic();
  const auto deltas = x.k3.pullback_degrees();
  if (x.kind == "elliptic-degree") {
    // No elliptic curve of this degree on S: its double cover would have
    // degree cover*deg, matching no Ebar_i and below the K3 bound.
    const long long target = x.k3.cover_degree * x.degree;
    const bool none = std::find(deltas.begin(), deltas.end(), target) == deltas.end() && target < x.k3.bound();
    if (!none) return std::nullopt;
    if (auto z = IsotropicSearch(h.num).primitive_in_fiber(x.degree))
      return "has an elliptic curve of degree " + std::to_string(x.degree) + " (" + to_string(*z) + ")";
    return std::nullopt;
  }
  if (x.kind == "divisibility-obstruction") {
    const auto n = h.num.integral_coords();
    const Integer g = gcd_of(std::span<const Integer>(n));
    if (g < 2) return std::nullopt;
    for (auto dlt : deltas)
      if (Integer(dlt) % g != 0)
        return "H would be " + g.str() + "-divisible but " + std::to_string(dlt) + " is not divisible by " + g.str();
    return std::nullopt;
  }
  // k3-degree-bound: the pulled-back members Etilde meet pi^*H in cover * (E.H);
  // any other elliptic curve D on the K3 has D.pi^*H >= min_pairing * sum c.
  std::vector<long long> coeffs;
  std::set<long long> degs;
  for (const auto& [c, e] : sid_members(cand)) {
    coeffs.push_back(c);
    degs.insert(x.k3.cover_degree * static_cast<long long>(pairing(e, h.num)));
  }
  const long long b = k3_degree_bound(coeffs, x.k3.min_pairing);
  for (auto dlt : deltas)
    if (!degs.count(dlt) && dlt < b)
      return "an elliptic curve of degree " + std::to_string(dlt) + " lies below the bound " + std::to_string(b);
  return std::nullopt;
}

struct SuiteRunner {
  std::string dir;
  std::map<std::string, Report> cache;

  const Report& blowup(const std::string& name) {
    auto it = cache.find("blowup:" + name);
    if (it != cache.end()) return it->second;
    return cache.emplace("blowup:" + name, run_model_file(load_model_file(fixture_path(dir, name)))).first->second;
  }
  const Report& pef13() {
    auto it = cache.find("pef13");
    if (it != cache.end()) return it->second;
    return cache.emplace("pef13", run_pef13(load_pef13(fixture_path(dir, "pef13.json")))).first->second;
  }
};

inline Json sid_list_json(const std::vector<PicClass>& v) {
  Json j = Json::array();
  for (const auto& c : v) j.push_back(to_string(c));
  return j;
}

inline Report verify_table2(const std::vector<Table2Row>& rows, const std::vector<Table1Row>& table1,
                            SuiteRunner& suites) {
  Report r{"sid verify-table2"};
  std::map<std::string, const Table2Row*> by_marking;
  for (const auto& row : rows) by_marking[row.marking] = &row;

  for (const auto& row : rows) {
    const std::string stem = "table2/" + row.marking;
    auto add = [&](std::string id, std::string anchor, Json computed, Json expected, Status st,
                   std::vector<std::string> cites) -> CheckResult& {
      CheckResult c;
      c.id = stem + "/" + std::move(id);
      c.anchor = std::move(anchor);
      c.computed = std::move(computed);
      c.expected = std::move(expected);
      c.status = st;
      c.cites = std::move(cites);
      c.inputs["row"] = row.marking;
      c.inputs["threefold"] = row.name;
      return r.add(std::move(c));
    };

    std::vector<PicClass> row_classes;
    for (std::size_t i = 0; i < row.sids.size(); ++i) {
      const auto& s = row.sids[i];
      const PicClass h = s.sid.to_pic();
      row_classes.push_back(h);
      const std::string tag = row.sids.size() > 1 ? "[" + std::to_string(i) + "]" : "";
      const bool text_ok = parse_class(s.text) == h;
      Json comp;
      comp["H2"] = json_of(square(h.num));
      comp["normalized"] = s.sid.normalized();
      comp["text_matches_tuple"] = text_ok;
      Json exp;
      exp["H2"] = 2 * row.p - 2;
      exp["normalized"] = true;
      exp["text_matches_tuple"] = true;
      add("square" + tag, "H^2 = 2p - 2 for " + s.text, comp, exp,
          status_of(square(h.num) == 2 * row.p - 2 && s.sid.normalized() && text_ok),
          {"parse_class", "pairing", "SidCoefficients::normalized"})
          .inputs["sid"] = json_of(s.sid);
      const Integer ph = phi(h);
      add("phi" + tag, "phi(H) for " + s.text, json_of(ph), row.phi, status_of(ph == row.phi), {"phi"});
      const std::string dv = to_string(two_divisibility(h));
      add("divisibility" + tag, "2-divisibility of " + s.text, dv, row.divisibility[i],
          status_of(dv == row.divisibility[i]), {"two_divisibility"});
      bool in_t1 = false;
      for (const auto& t : table1) in_t1 = in_t1 || (t.p == row.p && t.phi == row.phi && t.sid.to_pic() == h);
      add("in-table1" + tag, "the SID is a Table 1 row with the same p and phi", in_t1, true, status_of(in_t1), {});
    }

    // phi bound and map-kind constraint
    {
      const MapKind k = row.map_kind.value_or(MapKind::RationalMap);
      const PhiInterval range = phi_range(k, row.p);
      Json comp;
      comp["map_kind"] = row.map_kind ? Json(to_string(*row.map_kind)) : Json(nullptr);
      comp["range"] = range.to_string();
      comp["phi_squared"] = row.phi * row.phi;
      add("map-kind", row.map_kind ? "phi range allowed by the map kind and phi^2 <= 2p - 2"
                                   : "no map-kind annotation; phi^2 <= 2p - 2 only",
          comp, row.phi, status_of(range.contains(row.phi) && row.phi * row.phi <= 2 * row.p - 2),
          {"map_kind_phi_constraint", "phi_range"});
    }

    // exclusion arithmetic
    for (const auto& x : row.exclusions) {
      const auto deltas = x.k3.pullback_degrees();
      if (!x.expected_pullback_degrees.empty())
        add(x.kind + "/pullback-degrees", "Ebar_i . pi^*H on the K3 cover", deltas, x.expected_pullback_degrees,
            status_of(deltas == x.expected_pullback_degrees), {"Lattice::pairing"})
            .inputs["pullback"] = x.k3.pullback;
      if (x.kind == "elliptic-degree") {
        const long long target = x.k3.cover_degree * x.degree;
        Json comp = Json::array({x.k3.bound(), target});
        add(x.kind + "/bound", "a K3 elliptic curve other than the Ebar_i has degree >= bound > " + std::to_string(target),
            comp, Json::array({x.expected_bound.value_or(x.k3.bound()), target}),
            status_of(x.k3.bound() > target && (!x.expected_bound || *x.expected_bound == x.k3.bound())),
            {"k3_degree_bound"})
            .inputs["coeffs"] = x.k3.pullback;
      }
      if (x.kind == "k3-degree-bound" && x.expected_bound) {
        // bound for the rejected presentation quoted in the case analysis
        for (const auto& t : table1) {
          if (t.p != row.p || t.sid.a0 == 0) continue;
          std::vector<long long> coeffs;
          for (const auto& [c, e] : sid_members(t.sid)) coeffs.push_back(c);
          const long long b = k3_degree_bound(coeffs, x.k3.min_pairing);
          add(x.kind + "/" + t.sid_text, "lower bound for an elliptic curve other than the pulled-back SID members",
              b, *x.expected_bound, status_of(b == *x.expected_bound), {"k3_degree_bound"})
              .inputs["coeffs"] = coeffs;
        }
      }
    }

    // candidate reasoning
    if (row.facts.cited_sid) {
      add("candidates", "SID taken from the construction", *row.facts.cited_sid, nullptr, Status::Info, {});
    } else if (row.projection) {
      auto it = by_marking.find(row.projection->first);
      if (it == by_marking.end()) throw SchemaError("row " + row.marking + " projects from unknown row " + row.projection->first);
      const PicClass from = it->second->sids.front().sid.to_pic();
      const PicClass projected = from - parse_class(row.projection->second);
      Json comp;
      comp["class"] = to_string(projected);
      comp["p"] = json_of(genus_of(projected));
      comp["phi"] = json_of(phi(projected));
      Json exp;
      exp["class"] = to_string(row_classes.front());
      exp["p"] = row.p;
      exp["phi"] = row.phi;
      add("projection", "H of row " + row.projection->first + " minus " + row.projection->second, comp, exp,
          status_of(projected == row_classes.front() && genus_of(projected) == row.p && phi(projected) == row.phi),
          {"parse_class", "genus_of", "phi"});
    } else {
      PhiInterval range = phi_range(row.map_kind.value_or(MapKind::RationalMap), row.p);
      if (row.facts.phi_min) range.lo = std::max(range.lo, *row.facts.phi_min);
      if (row.facts.phi_max) range.hi = std::min(*range.hi, *row.facts.phi_max);
      std::vector<PicClass> kept;
      Json rejected = Json::array();
      for (const auto& t : table1) {
        if (t.p != row.p || !range.contains(t.phi)) continue;
        const PicClass h = t.sid.to_pic();
        std::optional<std::string> why;
        if (row.facts.numerically_2_divisible && numerically_divisible(h.num, 2) != *row.facts.numerically_2_divisible)
          why = *row.facts.numerically_2_divisible ? "not numerically 2-divisible" : "numerically 2-divisible";
        if (!why && row.facts.two_divisible_in_pic && *row.facts.two_divisible_in_pic &&
            two_divisibility(h) != Divisibility::HDivisible)
          why = "not 2-divisible in Pic(S)";
        for (const auto& x : row.exclusions) {
          if (why) break;
          why = exclusion_rejects(x, t.sid);
        }
        if (why) {
          Json j;
          j["sid"] = t.sid_text;
          j["reason"] = *why;
          rejected.push_back(j);
        } else {
          kept.push_back(h);
        }
      }
      auto sorted = [](std::vector<PicClass> v) {
        std::sort(v.begin(), v.end(), [](const PicClass& a, const PicClass& b) {
          return std::tie(a.num, a.eps) < std::tie(b.num, b.eps);
        });
        return v;
      };
      Json comp;
      comp["phi_range"] = range.to_string();
      comp["kept"] = sid_list_json(sorted(kept));
      comp["rejected"] = rejected;
      Json exp;
      exp["kept"] = sid_list_json(sorted(row_classes));
      add("candidates", "Table 1 candidates for this p and phi range, filtered by the case analysis", comp, exp,
          status_of(sorted(kept) == sorted(row_classes)),
          {"phi_range", "numerically_divisible", "two_divisibility", "IsotropicSearch::primitive_in_fiber",
           "k3_degree_bound"});
    }

    if (row.blowup_model) {
      const Report& b = suites.blowup(*row.blowup_model);
      Json comp;
      comp["passed"] = b.count(Status::Pass);
      comp["failed"] = b.count(Status::Fail);
      add("blowup/" + *row.blowup_model, "curve sections are 2-divisible on the Fano model", comp, "all pass",
          status_of(b.all_pass() && !b.checks.empty()), {"triple_product", "check_zero_restriction", "divisible_mod_trivial"});
    }
    if (row.model_suite) {
      const Report& m = suites.pef13();
      Json comp;
      comp["passed"] = m.count(Status::Pass);
      comp["failed"] = m.count(Status::Fail);
      add("model/" + *row.model_suite, "cone model, involution, fixed points, H13 and pullback pairings", comp,
          "all pass", status_of(m.all_pass() && !m.checks.empty()),
          {"parametrization_vanishes", "fixed_points_on_cone", "h13_relations_hold", "pullback_decomposition_check"});
    }
    if (row.open_question) add("open-question", "which candidate occurs", *row.open_question, nullptr, Status::Info, {});
  }
  return r;
}

}  // namespace enriques_lab

#endif  // ENRIQUES_LAB_REPORTS_HPP
