#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "rsbf/errors.hpp"
#include "rsbf/truth_table.hpp"
#include "rsbf/weight.hpp"
#include "support.hpp"

using namespace rsbf;
using testing_support::bits;
using testing_support::pattern;
using testing_support::spec;

namespace {

const std::vector<oracle::IndexSet> kTriple{{1, 2, 6}, {1, 2}, {1, 6}};

TEST(MonomialPattern, Validation) {
  EXPECT_THROW(MonomialPattern({}), InvalidInput);
  EXPECT_THROW(MonomialPattern({1, 3, 2}), InvalidInput);
  EXPECT_THROW(MonomialPattern({1, 1}), InvalidInput);
  EXPECT_THROW(MonomialPattern({0, 2}), InvalidInput);
  EXPECT_EQ(MonomialPattern({1, 2, 6}).to_string(), "1,2,6");
  EXPECT_EQ(MonomialPattern({1, 3}).mask(), 0b101U);
}

TEST(RSFunctionSpec, Validation) {
  EXPECT_THROW(spec({{2, 3}}), InvalidInput);
  EXPECT_THROW(spec({{1, 2}, {1, 2}}), InvalidInput);
  EXPECT_THROW(spec({{1}, {1}}), InvalidInput);
  EXPECT_THROW(RSFunctionSpec({}), InvalidInput);
  const auto s = spec(kTriple);
  EXPECT_EQ(s.max_top(), 6);
  EXPECT_EQ(s.linear_count(), 0);
  EXPECT_EQ(s.to_string(), "1,2,6;1,2;1,6");
  EXPECT_TRUE(spec({{1}}).is_pure_linear());
  EXPECT_FALSE(spec({{1}, {1, 2}}).is_pure_linear());
}

TEST(EvalMonomial, Examples) {
  EXPECT_TRUE(eval_monomial_at(pattern({1, 2}), 2, 3));
  EXPECT_FALSE(eval_monomial_at(pattern({1, 2}), 2, 2));
  EXPECT_TRUE(eval_monomial_at(pattern({1, 3}), 3, 5));
  EXPECT_THROW(eval_monomial_at(pattern({1, 4}), 3, 0), InvalidInput);
}

TEST(MonomialTruthTable, Examples) {
  EXPECT_EQ(monomial_truth_table(pattern({1, 2}), 2).to_string(), "0001");
  EXPECT_EQ(monomial_truth_table(pattern({1, 2, 3}), 3).to_string(), "00000001");
  EXPECT_EQ(monomial_truth_table(pattern({1, 3}), 3).to_string(), "00000101");
}

TEST(MonomialTruthTable, ClosedFormMatchesDirectEvaluation) {
  for (const auto& p : oracle::all_patterns(6)) {
    for (int n = p.back(); n <= 10; ++n) {
      ASSERT_EQ(bits(monomial_truth_table(pattern(p), n)), oracle::table_of(p, n))
          << testing_support::str(p) << " n=" << n;
    }
  }
}

TEST(MonomialTruthTable, WideTablesMatchPointEvaluation) {
  std::mt19937_64 rng(17);
  for (const auto& p : oracle::random_patterns(rng, 12, 20)) {
    const int n = 16;
    const TruthTable t = monomial_truth_table(pattern(p), n);
    std::uniform_int_distribution<std::uint64_t> row(0, t.size() - 1);
    for (int k = 0; k < 2000; ++k) {
      const auto j = row(rng);
      ASSERT_EQ(t[j], oracle::eval_product(p, n, j) == 1);
    }
    std::uint64_t expected = std::uint64_t{1} << (n - p.size());
    EXPECT_EQ(t.popcount(), expected);
  }
}

TEST(RotationOrbit, Examples) {
  auto o = rotation_orbit(pattern({1, 2, 3}), 3);
  EXPECT_EQ(o.size(), 1U);
  EXPECT_TRUE(o.is_short);
  o = rotation_orbit(pattern({1, 6}), 10);
  EXPECT_EQ(o.size(), 5U);
  EXPECT_TRUE(o.is_short);
  o = rotation_orbit(pattern({1, 2}), 4);
  EXPECT_EQ(o.size(), 4U);
  EXPECT_FALSE(o.is_short);
}

TEST(RotationOrbit, MatchesSetEnumeration) {
  for (const auto& p : oracle::all_patterns(6)) {
    for (int n = p.back(); n <= 12; ++n) {
      const auto o = rotation_orbit(pattern(p), n);
      const auto expected = oracle::orbit_of(p, n);
      ASSERT_EQ(o.size(), expected.size());
      for (const auto& m : o.members) {
        EXPECT_TRUE(expected.count(std::vector<int>(m.indices().begin(), m.indices().end())));
      }
      EXPECT_EQ(o.is_short, static_cast<int>(expected.size()) < n);
    }
  }
}

TEST(Interpretation, RoundTrip) {
  EXPECT_EQ(parse_interpretation("orbit-distinct"), Interpretation::kOrbitDistinct);
  EXPECT_EQ(parse_interpretation("full-sum"), Interpretation::kFullSum);
  EXPECT_EQ(to_string(Interpretation::kFullSum), "full-sum");
  EXPECT_THROW(parse_interpretation("drop"), InvalidInput);
}

TEST(MrsTruthTable, Examples) {
  for (auto interp : {Interpretation::kOrbitDistinct, Interpretation::kFullSum}) {
    EXPECT_EQ(mrs_truth_table(spec({{1, 2, 3}}), 3, interp).popcount(), 1U);
    EXPECT_EQ(mrs_truth_table(spec(kTriple), 7, interp).popcount(), 64U);
  }
  const TruthTable zero = mrs_truth_table(spec({{1, 6}}), 10, Interpretation::kFullSum);
  EXPECT_EQ(zero.popcount(), 0U);
}

TEST(MrsTruthTable, RotationInvariant) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto gens = oracle::random_patterns(rng, 6, 1 + trial % 3);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (int n = 6; n <= 12; ++n) {
      for (auto interp : {Interpretation::kOrbitDistinct, Interpretation::kFullSum}) {
        const TruthTable t = mrs_truth_table(spec(gens), n, interp);
        for (std::uint64_t j = 0; j < t.size(); ++j) ASSERT_EQ(t[j], t[rotate_row(j, n)]);
      }
    }
  }
}

TEST(Weight, Examples) {
  EXPECT_EQ(weight(spec({{1, 2, 3}}), 3, Interpretation::kOrbitDistinct), 1U);
  EXPECT_EQ(weight(spec(kTriple), 8, Interpretation::kOrbitDistinct), 112U);
  EXPECT_EQ(weight(spec(kTriple), 10, Interpretation::kFullSum), 480U);
  EXPECT_EQ(weight(spec(kTriple), 10, Interpretation::kOrbitDistinct), 496U);
  const auto seq = weight_sequence(spec(kTriple), 7, 9, Interpretation::kOrbitDistinct);
  EXPECT_EQ(seq.values, (std::vector<mpz_class>{64, 112, 244}));
  EXPECT_EQ(weight(spec({{1, 2}}), 4, Interpretation::kOrbitDistinct),
            mrs_truth_table(spec({{1, 2}}), 4, Interpretation::kOrbitDistinct).popcount());
}

TEST(Weight, MatchesBruteForceOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto gens = oracle::random_patterns(rng, 6, 1 + trial % 3);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (std::count_if(gens.begin(), gens.end(), [](const auto& g) { return g.size() == 1; }) > 1) continue;
    const auto s = spec(gens);
    for (int n = s.max_top(); n <= 13; ++n) {
      for (bool full : {false, true}) {
        const auto interp = full ? Interpretation::kFullSum : Interpretation::kOrbitDistinct;
        ASSERT_EQ(weight(s, n, interp), oracle::brute_weight(gens, n, full)) << s.to_string() << " n=" << n;
      }
    }
  }
}

TEST(Weight, ChunkingAndThreadsDoNotChangeResult) {
  const auto masks = function_monomials(spec(kTriple), 20, Interpretation::kOrbitDistinct);
  const std::uint64_t reference = monomial_sum_weight(masks, 20, 14, 1);
  for (int chunk : {6, 8, 11, 20}) {
    for (unsigned workers : {1U, 2U, 3U, 8U}) EXPECT_EQ(monomial_sum_weight(masks, 20, chunk, workers), reference);
  }
}

TEST(Weight, SmallVariableCounts) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(weight(spec({{1}}), n, Interpretation::kOrbitDistinct), std::uint64_t{1} << (n - 1));
  }
}

TEST(Weight, BudgetEnforced) {
  WeightOptions opts;
  opts.budget_n = 12;
  EXPECT_THROW(weight(spec({{1, 2}}), 13, Interpretation::kFullSum, opts), BudgetExceeded);
  EXPECT_THROW(weight(spec({{1, 6}}), 5, Interpretation::kFullSum), InvalidInput);
}

}  // namespace
