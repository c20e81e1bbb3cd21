// enriques-lab: verification reports and the individual engines.
//
//   enriques-lab sid verify-table1
//   enriques-lab sid verify-table2
//   enriques-lab sid enumerate --genus G --phi P
//   enriques-lab sid phi --class "2(E1+E12)"
//   enriques-lab blowup run fixtures/genus13_model [--triple D1 D2 D3] [--div2 D --trivial T ...]
//   enriques-lab linsys dim fixtures/tetrahedron_sextics [--basis]
//   enriques-lab model verify pef13
//
// Global: --format text|json, --fixtures DIR. Exit 0 all pass, 1 a check
// failed, 2 bad input.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "enriques_lab/reports.hpp"

using namespace enriques_lab;

namespace {

struct Options {
  std::string format = "text";
  std::string fixtures;
  int genus = 0;
  int phi = 0;
  std::string cls;
  std::string file;
  std::vector<std::string> triple;
  std::string div2;
  std::vector<std::string> trivial;
  bool basis = false;
  std::string model = "pef13";
};

int emit(const Report& r, const Options& o) {
  if (o.format == "json") std::cout << r.to_json().dump(2) << "\n";
  else std::cout << r.to_text();
  return r.all_pass() ? 0 : 1;
}

std::string dir_of(const Options& o) {
  return fixture_dir(o.fixtures.empty() ? std::nullopt : std::optional<std::string>(o.fixtures));
}

int cmd_table1(const Options& o) { return emit(verify_table1(load_table1(fixture_path(dir_of(o), "table1.json"))), o); }

int cmd_table2(const Options& o) {
  const std::string dir = dir_of(o);
  const auto t1 = load_table1(fixture_path(dir, "table1.json"));
  const auto t2 = load_table2(fixture_path(dir, "table2.json"));
  SuiteRunner suites{dir};
  return emit(verify_table2(t2, t1, suites), o);
}

int cmd_enumerate(const Options& o) {
  if (o.genus < 2) throw InputError("--genus must be at least 2");
  if (o.phi < 1) throw InputError("--phi must be positive");
  const auto sids = enumerate_sids(o.genus, o.phi);
  if (o.format == "json") {
    Json j;
    j["genus"] = o.genus;
    j["phi"] = o.phi;
    j["count"] = sids.size();
    j["sids"] = Json::array();
    for (const auto& s : sids) {
      Json e = json_of(s);
      e["class"] = s.to_string();
      j["sids"].push_back(e);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& s : sids) std::cout << s.to_string() << "\n";
    std::cout << sids.size() << " SID(s) with p = " << o.genus << ", phi = " << o.phi << "\n";
  }
  return 0;
}

int cmd_phi(const Options& o) {
  const PicClass h = parse_class(o.cls);
  const Integer h2 = square(h.num);
  if (h2 <= 0) throw InputError("phi needs a class with positive square, got H^2 = " + h2.str());
  const PhiResult r = phi_with_witness(h.num);
  if (o.format == "json") {
    Json j;
    j["class"] = to_string(h);
    j["H2"] = json_of(h2);
    j["p"] = json_of(genus_of(h));
    j["phi"] = json_of(r.phi);
    j["witness"] = to_string(r.witness);
    j["divisibility"] = to_string(two_divisibility(h));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << r.phi << "\n";
  }
  return 0;
}

int cmd_blowup(const Options& o) {
  const ModelFile f = load_model_file(o.file);
  Report r = run_model_file(f);
  if (!o.triple.empty()) {
    if (o.triple.size() != 3) throw InputError("--triple needs three classes");
    CheckResult c;
    c.id = "query/triple";
    c.anchor = "user query";
    c.inputs["args"] = o.triple;
    c.computed = json_of(f.model.triple(parse_div_class(f.model, f.classes, o.triple[0]),
                                        parse_div_class(f.model, f.classes, o.triple[1]),
                                        parse_div_class(f.model, f.classes, o.triple[2])));
    c.cites = {"triple_product"};
    r.add(c);
  }
  if (!o.div2.empty()) {
    std::vector<DivClass> t;
    for (const auto& s : o.trivial) t.push_back(parse_div_class(f.model, f.classes, s));
    CheckResult c;
    c.id = "query/div2";
    c.anchor = "user query";
    c.inputs["class"] = o.div2;
    c.inputs["trivial"] = o.trivial;
    c.computed = divisible_mod_trivial(f.model, parse_div_class(f.model, f.classes, o.div2), t, 2);
    c.cites = {"divisible_mod_trivial"};
    r.add(c);
  } else if (!o.trivial.empty()) {
    throw InputError("--trivial needs --div2");
  }
  return emit(r, o);
}

int cmd_linsys(const Options& o) { return emit(run_linsys_file(load_linsys_file(o.file), o.basis), o); }

int cmd_model(const Options& o) {
  if (o.model != "pef13") throw InputError("unknown model: " + o.model);
  return emit(run_pef13(load_pef13(fixture_path(dir_of(o), "pef13.json"))), o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enriques-Fano threefold verification lab"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--fixtures", o.fixtures, "fixture directory (default: $ENRIQUES_LAB_FIXTURES, then the build tree)");

  auto* sid = app.add_subcommand("sid", "simple isotropic decompositions")->require_subcommand(1);
  auto* t1 = sid->add_subcommand("verify-table1", "check every Table 1 row");
  auto* t2 = sid->add_subcommand("verify-table2", "check every Table 2 row");
  auto* en = sid->add_subcommand("enumerate", "normalized SIDs with given genus and phi");
  en->add_option("--genus", o.genus)->required();
  en->add_option("--phi", o.phi)->required();
  auto* ph = sid->add_subcommand("phi", "phi of a class");
  ph->add_option("--class", o.cls, "e.g. \"2(E1+E12)+K\"")->required();

  auto* bl = app.add_subcommand("blowup", "blow-ups of P^3")->require_subcommand(1);
  auto* br = bl->add_subcommand("run", "run the checks of a model file");
  br->add_option("file", o.file)->required();
  br->add_option("--triple", o.triple, "three class expressions")->expected(3);
  br->add_option("--div2", o.div2, "class to test for 2-divisibility");
  br->add_option("--trivial", o.trivial, "restriction-trivial classes")->expected(1, 64);

  auto* ls = app.add_subcommand("linsys", "linear systems of surfaces in P^3")->require_subcommand(1);
  auto* ld = ls->add_subcommand("dim", "dimension and the file's checks");
  ld->add_option("file", o.file)->required();
  ld->add_flag("--basis", o.basis, "print a basis of the system");

  auto* md = app.add_subcommand("model", "projective models")->require_subcommand(1);
  auto* mv = md->add_subcommand("verify", "run a model suite");
  mv->add_option("name", o.model)->required();

  for (auto* a : {sid, t1, t2, en, ph, bl, br, ls, ld, md, mv}) a->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*t1) return cmd_table1(o);
    if (*t2) return cmd_table2(o);
    if (*en) return cmd_enumerate(o);
    if (*ph) return cmd_phi(o);
    if (*br) return cmd_blowup(o);
    if (*ld) return cmd_linsys(o);
    if (*mv) return cmd_model(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
