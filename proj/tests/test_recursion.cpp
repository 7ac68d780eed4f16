#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rsbf/errors.hpp"
#include "rsbf/minpoly.hpp"
#include "rsbf/recursion.hpp"
#include "rsbf/rules_matrix.hpp"
#include "support.hpp"

using namespace rsbf;
using testing_support::spec;

namespace {

const std::vector<oracle::IndexSet> kTriple{{1, 2, 6}, {1, 2}, {1, 6}};

std::vector<mpz_class> z(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

RecursionSpec derived(const RSFunctionSpec& s) {
  const BigPoly p = minimal_polynomial(build_rules_matrix(s).matrix);
  return recursion_from_polynomial(strip_x_factor(p).reduced, s.max_top());
}

TEST(RecursionFromPolynomial, Examples) {
  EXPECT_EQ(recursion_from_polynomial(BigPoly{-4, -2, 2, 2, 1}, 3).coefficients, z({-2, -2, 2, 4}));
  const RecursionSpec six = recursion_from_polynomial(BigPoly{-8, 4, 4, 2, -2, -2, 1}, 6);
  EXPECT_EQ(six.coefficients, z({2, 2, -2, -4, -4, 8}));
  EXPECT_EQ(six.valid_from, 6 + 1 + 6);
  EXPECT_EQ(recursion_from_polynomial(BigPoly{-2, 1}, 1).coefficients, z({2}));
}

TEST(RecursionFromPolynomial, Errors) {
  EXPECT_THROW(recursion_from_polynomial(BigPoly{-2, 2}, 1), InvalidInput);
  EXPECT_THROW(recursion_from_polynomial(BigPoly{0, -2, 1}, 1), InvalidInput);
  EXPECT_THROW(recursion_from_polynomial(BigPoly{1}, 1), InvalidInput);
}

TEST(Propagate, Examples) {
  const RecursionSpec doubling = recursion_from_polynomial(BigPoly{-2, 1}, 0);
  const WeightSequence out = propagate(doubling, WeightSequence{1, z({1})}, 5);
  EXPECT_EQ(out.start_n, 1);
  EXPECT_EQ(out.values, z({1, 2, 4, 8, 16}));
  EXPECT_THROW(propagate(doubling, WeightSequence{1, z({1, 2})}, 5), InvalidInput);
}

TEST(Propagate, TripleDisplaySequence) {
  const RecursionSpec rec = recursion_from_polynomial(BigPoly{-8, 4, 4, 2, -2, -2, 1}, 6);
  const WeightSequence init = initial_conditions(spec(kTriple), rec, Interpretation::kFullSum);
  EXPECT_EQ(init.start_n, 7);
  EXPECT_EQ(init.values, z({64, 112, 244, 480, 1024, 1960}));
  WeightSequence shown = propagate(rec, init, 12);
  shown.values[3] = 496;
  EXPECT_EQ(shown.values, z({64, 112, 244, 496, 1024, 1960, 4096, 8064, 16336, 32512, 65536, 130464}));
}

TEST(Propagate, MatchesHandLoopAndBruteForce) {
  const auto s = spec({{1, 2, 3}});
  const RecursionSpec rec = derived(s);
  const WeightSequence init = initial_conditions(s, rec, Interpretation::kOrbitDistinct);
  EXPECT_EQ(init.values, z({4, 6, 18, 36}));
  const WeightSequence out = propagate(rec, init, 21);
  std::vector<mpz_class> loop = init.values;
  while (loop.size() < 21) {
    mpz_class next = 0;
    for (int i = 1; i <= rec.order(); ++i) next += rec.coefficients[i - 1] * loop[loop.size() - i];
    loop.push_back(next);
  }
  EXPECT_EQ(out.values, loop);
  for (int n = 4; n <= 24; ++n) EXPECT_EQ(out.at_n(n), oracle::brute_weight({{1, 2, 3}}, n, false)) << n;
}

TEST(InitialConditions, BudgetError) {
  const RecursionSpec rec{std::vector<mpz_class>(145, 1), 11 + 1 + 145};
  EXPECT_THROW(initial_conditions(spec({{1, 3, 11}}), rec, Interpretation::kFullSum), BudgetExceeded);
}

TEST(Verify, DerivedRecursionForCubic) {
  const auto s = spec({{1, 2, 3}});
  const RecursionSpec rec = derived(s);
  EXPECT_EQ(rec.coefficients, z({2, 2, -2, -4}));
  const VerificationReport r = verify_recursion(s, rec, 3, 24, Interpretation::kOrbitDistinct);
  EXPECT_TRUE(r.nonzero.empty());
  EXPECT_TRUE(r.holds_from(7));
  EXPECT_EQ(r.short_n, std::vector<int>{3});
  EXPECT_EQ(r.weights.at_n(3), 1);
}

TEST(Verify, ReportsNonzeroResiduals) {
  // Opposite signs do not describe the cubic's weights.
  const RecursionSpec flipped{z({-2, -2, 2, 4}), 8};
  const VerificationReport r = verify_recursion(spec({{1, 2, 3}}), flipped, 3, 16, Interpretation::kOrbitDistinct);
  EXPECT_FALSE(r.nonzero.empty());
  EXPECT_FALSE(r.holds_from(7));
  ASSERT_FALSE(r.residuals.empty());
  EXPECT_EQ(r.residuals.front().n, 7);
  // w_7 - (-2 w_6 - 2 w_5 + 2 w_4 + 4 w_3) = 36 - (-36 - 12 + 8 + 4)
  EXPECT_EQ(r.residuals.front().value, 72);
}

TEST(Verify, TripleUnderBothInterpretations) {
  const auto s = spec(kTriple);
  const RecursionSpec rec = derived(s);
  const VerificationReport full = verify_recursion(s, rec, 7, 22, Interpretation::kFullSum);
  EXPECT_TRUE(full.nonzero.empty());
  ASSERT_TRUE(full.zero_from.has_value());
  EXPECT_LE(*full.zero_from, rec.valid_from);
  EXPECT_EQ(full.short_n, std::vector<int>{10});

  // The orbit-distinct weight at n = 10 is 496 rather than 480, which shows up
  // in every residual whose window contains n = 10.
  const VerificationReport orbit = verify_recursion(s, rec, 7, 22, Interpretation::kOrbitDistinct);
  EXPECT_EQ(orbit.nonzero, (std::vector<int>{13, 14, 15, 16}));
  EXPECT_EQ(orbit.zero_from, 17);
}

TEST(Verify, PureLinear) {
  const RecursionSpec rec = recursion_from_polynomial(BigPoly{-2, 1}, 1);
  const VerificationReport r = verify_recursion(spec({{1}}), rec, 1, 20, Interpretation::kOrbitDistinct);
  EXPECT_TRUE(r.nonzero.empty());
  EXPECT_EQ(r.zero_from, 2);
}

TEST(Verify, Errors) {
  const RecursionSpec rec{z({2}), 3};
  EXPECT_THROW(verify_recursion(spec({{1, 4}}), rec, 3, 10, Interpretation::kFullSum), InvalidInput);
  EXPECT_THROW(verify_recursion(spec({{1, 4}}), rec, 4, 40, Interpretation::kFullSum), BudgetExceeded);
}

TEST(ShortPositions, Examples) {
  EXPECT_EQ(short_positions(spec(kTriple), 6, 22), (std::vector<int>{10}));
  EXPECT_EQ(short_positions(spec({{1, 3, 5}}), 5, 12), (std::vector<int>{6}));
  EXPECT_TRUE(short_positions(spec({{1, 2}}), 3, 12).empty());
}

TEST(RoundTrip, BatteryUnderFullSum) {
  const std::vector<std::vector<oracle::IndexSet>> battery{
      {{1, 2, 4}}, {{1, 3, 5}}, {{1, 2}, {1, 3}}, {{1, 2, 3, 4}}, {{1, 2, 5}, {1}}, {{1, 4}, {1, 2, 3}}, {{1, 5}}};
  for (const auto& gens : battery) {
    const auto s = spec(gens);
    const RecursionSpec rec = derived(s);
    if (rec.order() + s.max_top() > 24) continue;
    const VerificationReport r = verify_recursion(s, rec, s.max_top(), 24, Interpretation::kFullSum);
    EXPECT_TRUE(r.holds_from(rec.valid_from)) << s.to_string();

    // Back-substitution at five n past the brute-forced initial window.
    const WeightSequence init = initial_conditions(s, rec, Interpretation::kFullSum);
    const WeightSequence out = propagate(rec, init, rec.order() + 5);
    for (int n = out.end_n() - 4; n <= out.end_n(); ++n) {
      EXPECT_EQ(out.at_n(n), oracle::brute_weight(gens, n, true)) << s.to_string() << " n=" << n;
    }
  }
}

}  // namespace
