#include <gtest/gtest.h>

#include <random>

#include "enriques_lab/linsys_file.hpp"
#include "enriques_lab/reports.hpp"

using namespace enriques_lab;

namespace {

std::string fixture(const std::string& name) { return fixture_path(fixture_dir(), name); }

LinearForm form(long long a, long long b, long long c, long long d) { return {a, b, c, d}; }

ProjPoint pt(long long a, long long b, long long c, long long d) { return {a, b, c, d}; }

// Monomials s^e vanishing to order k along the line s2 = s3 = 0: e2 + e3 >= k.
long long monomials_vanishing_on_coordinate_line(int degree, int k) {
  long long n = 0;
  for (const auto& e : monomials_of_degree(4, degree)) n += (e[2] + e[3] >= k);
  return n;
}

}  // namespace

TEST(Flats, ConstructionAndValidation) {
  const Flat l = line_of_planes(form(1, 0, 0, 0), form(0, 1, 0, 0), "l");
  EXPECT_EQ(l.points.size(), 2u);
  const Flat p = plane_of(form(0, 0, 1, -1), "p");
  EXPECT_EQ(p.points.size(), 3u);
  EXPECT_THROW(line_through(pt(1, 0, 0, 0), pt(2, 0, 0, 0)), Error);
  EXPECT_THROW(line_of_planes(form(1, 0, 0, 0), form(2, 0, 0, 0)), Error);
}

TEST(Dimensions, CoordinateLineOracle) {
  // Vanishing to order k along a coordinate line is a monomial condition.
  for (int d = 1; d <= 6; ++d)
    for (int k = 1; k <= 3; ++k) {
      LinSysSpec s;
      s.degree = d;
      s.conditions.push_back({line_of_planes(form(0, 0, 1, 0), form(0, 0, 0, 1), "l"), k});
      EXPECT_EQ(system_dimension(s) + 1, monomials_vanishing_on_coordinate_line(d, k)) << d << " " << k;
    }
}

TEST(Dimensions, InvariantUnderCoordinateChange) {
  // Same line in general position: the count must not change.
  LinSysSpec a, b;
  a.degree = b.degree = 5;
  a.conditions.push_back({line_through(pt(1, 0, 0, 0), pt(0, 1, 0, 0)), 2});
  b.conditions.push_back({line_through(pt(1, 2, -1, 3), pt(0, 1, 5, -2)), 2});
  EXPECT_EQ(system_dimension(a), system_dimension(b));
}

TEST(Dimensions, PointConditions) {
  LinSysSpec s;
  s.degree = 2;
  s.conditions.push_back({make_flat({pt(0, 0, 0, 1)}, "v"), 2});
  // quadrics singular at a point: quadrics in three variables
  EXPECT_EQ(system_dimension(s), 5);
}

TEST(Tetrahedron, SexticsDoubleAlongEdges) {
  const auto f = load_linsys_file(fixture("tetrahedron_sextics"));
  const auto space = coefficient_space(f.spec);
  EXPECT_EQ(space.monomials.size(), 84u);
  EXPECT_EQ(space.projective_dimension(), 13);
  EXPECT_TRUE(verify_expected_form(space, f.expected_form));
  for (const auto& l : f.contained_lines) EXPECT_TRUE(member_contains_line(space, l));
  for (const auto& l : f.not_contained_lines) EXPECT_FALSE(member_contains_line(space, l));
}

TEST(Trihedra, SepticsDoubleAlongEdges) {
  const auto f = load_linsys_file(fixture("trihedra_septics"));
  const auto space = coefficient_space(f.spec);
  EXPECT_EQ(space.projective_dimension(), 9);
  EXPECT_TRUE(verify_expected_form(space, f.expected_form));
  ASSERT_GE(f.contained_lines.size(), 9u);
  for (const auto& l : f.contained_lines) EXPECT_TRUE(member_contains_line(space, l)) << l.label;
  ASSERT_TRUE(f.face_flag.has_value());
  const auto specs = face_flag_specs(f);
  ASSERT_EQ(specs.size(), 6u);
  for (std::size_t i = 0; i < specs.size(); ++i) EXPECT_EQ(system_dimension(specs[i]), 8 - static_cast<long long>(i));
  EXPECT_TRUE(verify_expected_form(coefficient_space(specs.back()), f.face_flag->residual));
}

TEST(Trihedra, SeededRandomPairs) {
  std::mt19937_64 rng(5);
  const Trihedron a = random_trihedron(rng), b = random_trihedron(rng);
  EXPECT_NO_THROW(check_trihedron(a));
  EXPECT_EQ(trihedron_edges(a, "l").size(), 3u);
  EXPECT_EQ(system_dimension(two_trihedra_spec(7, a, b)), 9);
}

TEST(TangentCones, ReportedChecksPass) {
  for (const char* name : {"tetrahedron_sextics", "trihedra_septics"}) {
    const Report r = run_linsys_file(load_linsys_file(fixture(name)));
    EXPECT_TRUE(r.all_pass()) << r.to_text();
    EXPECT_EQ(r.count(Status::Info), 1u);
  }
}

TEST(TangentCones, NodeOfACubic) {
  const auto names = p3_names();
  const Polynomial f = parse_polynomial(names, "s3*(s0^2 - s1^2) + s0^3");
  const Polynomial cone = tangent_cone(f, pt(0, 0, 0, 1));
  EXPECT_EQ(cone.degree(), 2);
  EXPECT_TRUE(tangent_cone_matches(f, pt(0, 0, 0, 1), parse_polynomial(names, "s0^2 - s1^2")));
  EXPECT_FALSE(tangent_cone_matches(f, pt(0, 0, 0, 1), parse_polynomial(names, "s0*s1")));
}

TEST(Files, SchemaErrors) {
  EXPECT_THROW(parse_linsys_json("[]"), SchemaError);
  EXPECT_THROW(parse_linsys_json(R"({"schema": "enriques-lab/linsys/1", "degree": 0, "conditions": []})"), SchemaError);
  EXPECT_THROW(parse_linsys_json(R"({"schema": "enriques-lab/linsys/1", "degree": 2,
      "conditions": [{"line": {"planes": ["nope"]}}]})"),
               SchemaError);
  EXPECT_THROW(parse_linsys_json(R"({"schema": "enriques-lab/linsys/1", "degree": 2,
      "planes": {"f": [0, 0, 0, 0]}, "conditions": []})"),
               SchemaError);
  const auto f = parse_linsys_json(R"({"schema": "enriques-lab/linsys/1", "degree": 3,
      "conditions": [{"label": "m", "line": {"points": [[0, 0, 1, 0], ["1/2", 0, 0, 1]]}, "order": 1}]})");
  EXPECT_EQ(system_dimension(f.spec), 15);
}
