#include <gtest/gtest.h>

#include "property_suite.hpp"

namespace {

void expect_holds(const props::Outcome& o) {
  EXPECT_EQ(o.cases, props::kCases) << o.name;
  EXPECT_EQ(o.failures, 0) << o.name << ": first failing case " << o.first_failure;
}

}  // namespace

TEST(Properties, PairingIsSymmetric) { expect_holds(props::pairing_symmetric()); }
TEST(Properties, PairingIsBilinear) { expect_holds(props::pairing_bilinear()); }
TEST(Properties, PairingMatchesRationalOracle) { expect_holds(props::pairing_matches_oracle()); }
TEST(Properties, LatticeIsEven) { expect_holds(props::lattice_even()); }
TEST(Properties, TripleProductIsSymmetric) { expect_holds(props::triple_symmetric()); }
TEST(Properties, TripleProductIsTrilinear) { expect_holds(props::triple_trilinear()); }
TEST(Properties, EBasisDeterminant) { expect_holds(props::e_basis_determinant()); }
TEST(Properties, IntegralBasisDeterminant) { expect_holds(props::integral_basis_determinant()); }
TEST(Properties, DeterminantIsMultiplicative) { expect_holds(props::determinant_multiplicative()); }
TEST(Properties, RankPlusNullity) { expect_holds(props::rank_nullity()); }
TEST(Properties, PhiIsInvariantUnderRelabeling) { expect_holds(props::phi_relabeling()); }
TEST(Properties, ReportsAreDeterministic) { expect_holds(props::deterministic_reports()); }
TEST(Properties, ClassLiteralsRoundTrip) { expect_holds(props::class_literal_round_trip()); }
TEST(Properties, DivisibilityMatchesParity) { expect_holds(props::divisibility_parity()); }

// A broken property must be caught by the harness.
TEST(Properties, HarnessDetectsFailures) {
  const auto o = props::for_all(
      "always odd", 1, [](auto& rng) { return props::uniform(rng, 0, 9); }, [](long long v) { return v % 2 == 1; });
  EXPECT_FALSE(o.ok());
  EXPECT_GT(o.failures, 0);
}
