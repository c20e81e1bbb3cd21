#include <gtest/gtest.h>

#include "enriques_lab/blowup.hpp"
#include "enriques_lab/model_file.hpp"
#include "enriques_lab/reports.hpp"

using namespace enriques_lab;

namespace {

// (-K)^3 after blowing up a smooth curve of genus g with -K.C = d on a
// threefold of anticanonical degree k: k - 2d + 2g - 2.
long long fano_degree_after_curve(long long k, long long d, long long g) { return k - 2 * d + 2 * g - 2; }

Integer anticanonical_cube(const BlowupModel& m) {
  const DivClass k = m.canonical();
  return -m.triple(k, k, k);
}

std::string fixture(const std::string& name) { return fixture_path(fixture_dir(), name); }

}  // namespace

TEST(Blowup, ProjectiveSpace) {
  const auto p3 = BlowupModel::projective_space();
  EXPECT_EQ(p3.triple({1}, {1}, {1}), 1);
  EXPECT_EQ(anticanonical_cube(p3), 64);
}

TEST(Blowup, PointBlowup) {
  const auto m = push_blowup(BlowupModel::projective_space(), Center::point("E"));
  const DivClass h{1, 0}, e{0, 1};
  EXPECT_EQ(m.triple(e, e, e), 1);
  EXPECT_EQ(m.triple(h, h, e), 0);
  EXPECT_EQ(m.triple(h, e, e), 0);
  EXPECT_EQ(m.canonical(), (DivClass{-4, 2}));
  EXPECT_EQ(anticanonical_cube(m), 56);
}

TEST(Blowup, CurveBlowupsMatchFanoDegrees) {
  // line, conic, twisted cubic, plane cubic (g = 1), quartic of genus 1
  struct Case {
    long long degree, genus, fano;
  };
  for (const Case c : {Case{1, 0, 54}, Case{2, 0, 46}, Case{3, 0, 38}, Case{3, 1, 40}, Case{4, 1, 32}}) {
    const auto m = push_blowup(BlowupModel::projective_space(), Center::curve("C", static_cast<int>(c.genus), {c.degree}));
    EXPECT_EQ(anticanonical_cube(m), fano_degree_after_curve(64, 4 * c.degree, c.genus));
    EXPECT_EQ(anticanonical_cube(m), c.fano);
    const DivClass h{1, 0}, e{0, 1};
    EXPECT_EQ(m.triple(h, e, e), -c.degree);
    EXPECT_EQ(m.triple(h, h, e), 0);
  }
}

TEST(Blowup, LineThroughBlownUpPoint) {
  // Blow up a point, then the strict transform of a line through it.
  const auto m1 = push_blowup(BlowupModel::projective_space(), Center::point("E"));
  const auto m2 = push_blowup(m1, Center::curve("F", 0, {1, 1}));
  // -K_1 . C = 4 - 2 = 2
  EXPECT_EQ(anticanonical_cube(m2), fano_degree_after_curve(56, 2, 0));
  const DivClass e{0, 1, 0}, f{0, 0, 1};
  EXPECT_EQ(m2.triple(e, f, f), -1);
  EXPECT_EQ(m2.triple(e, e, f), 0);
}

TEST(Blowup, TripleProductIsSymmetric) {
  const auto m = load_model_file(fixture("genus13_model")).model;
  const DivClass a = m.generator(0) + m.generator(3) + m.generator(7), b = m.generator(5) - m.generator(12),
                 c = Integer(2) * m.generator(16) + m.generator(1);
  const Integer v = m.triple(a, b, c);
  EXPECT_EQ(v, m.triple(b, a, c));
  EXPECT_EQ(v, m.triple(c, b, a));
  EXPECT_EQ(v, m.triple(a, c, b));
}

TEST(Blowup, DimensionChecks) {
  const auto m = push_blowup(BlowupModel::projective_space(), Center::point("E"));
  EXPECT_THROW(m.triple({1}, {1}, {1}), DimensionMismatch);
  EXPECT_THROW(push_blowup(m, Center::point("E")), SchemaError);
  EXPECT_EQ(format_class(m, {Integer(6), Integer(-3)}), "6H - 3E");
}

TEST(Blowup, ZeroRestrictionAndDivisibility) {
  const auto m = push_blowup(BlowupModel::projective_space(), Center::point("E"));
  const DivClass h{1, 0}, e{0, 1};
  EXPECT_TRUE(check_zero_restriction(m, h, e));
  EXPECT_FALSE(check_zero_restriction(m, e, e));
  EXPECT_TRUE(divisible_mod_trivial(m, {Integer(2), Integer(1)}, {e}, 2));
  EXPECT_FALSE(divisible_mod_trivial(m, {Integer(1), Integer(0)}, {e}, 2));
}

TEST(ModelFiles, Genus13) {
  const ModelFile f = load_model_file(fixture("genus13_model"));
  const Report r = run_model_file(f);
  EXPECT_TRUE(r.all_pass()) << r.to_text();
  const DivClass sigma = f.classes.at("Sigma");
  EXPECT_EQ(f.model.triple(sigma, sigma, sigma), 24);
  for (const char* e : {"calE0", "calE1", "calE2", "calE3"}) EXPECT_TRUE(check_zero_restriction(f.model, sigma, f.classes.at(e)));
}

TEST(ModelFiles, Genus9) {
  const ModelFile f = load_model_file(fixture("genus9_model"));
  const Report r = run_model_file(f);
  EXPECT_TRUE(r.all_pass()) << r.to_text();
  const DivClass k = f.classes.at("K");
  EXPECT_EQ(f.model.triple(k, k, k), 16);
}

TEST(ModelFiles, ExpressionsAndErrors) {
  const ModelFile f = load_model_file(fixture("genus13_model"));
  EXPECT_EQ(parse_div_class(f.model, f.classes, "2*H - H"), f.model.generator(0));
  EXPECT_THROW(parse_div_class(f.model, f.classes, "H + Q"), InputError);
  EXPECT_TRUE(glob_match("E?", "E0"));
  EXPECT_FALSE(glob_match("E?", "E01"));
  EXPECT_THROW(parse_model_json("{"), SchemaError);
  EXPECT_THROW(parse_model_json(R"({"schema": "other", "centers": []})"), SchemaError);
  EXPECT_THROW(parse_model_json(R"({"schema": "enriques-lab/blowup-model/1",
      "centers": [{"name": "C", "kind": "curve", "incidence": {"X": 1}}]})"),
               SchemaError);
  EXPECT_THROW(parse_model_json(R"({"schema": "enriques-lab/blowup-model/1",
      "centers": [{"name": "C", "kind": "curve", "incidence": {}}]})"),
               SchemaError);
}

TEST(ModelFiles, FailingCheckIsReported) {
  const std::string text = R"({"schema": "enriques-lab/blowup-model/1",
    "centers": [{"name": "E", "kind": "point"}],
    "checks": [{"id": "e-cube", "kind": "triple", "args": ["E", "E", "E"], "expected": 2}]})";
  const Report r = run_model_file(parse_model_json(text));
  EXPECT_FALSE(r.all_pass());
  EXPECT_EQ(r.checks.back().computed, 1);
}
