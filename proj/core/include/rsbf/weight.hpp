#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "rsbf/monomial.hpp"
#include "rsbf/truth_table.hpp"

namespace rsbf {

inline constexpr int kDefaultEnumerationBudget = 28;

struct WeightOptions {
  /// Largest n for which weights are enumerated.
  int budget_n = kDefaultEnumerationBudget;
  /// Rows per work unit, as a power of two (>= 6).
  int chunk_bits = 14;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// Consecutive weights w_{start_n}, w_{start_n + 1}, ...
struct WeightSequence {
  int start_n = 0;
  std::vector<mpz_class> values;

  int end_n() const { return start_n + static_cast<int>(values.size()) - 1; }
  const mpz_class& at_n(int n) const { return values.at(static_cast<std::size_t>(n - start_n)); }

  friend bool operator==(const WeightSequence&, const WeightSequence&) = default;
};

/// Popcount of the function XOR_m prod_{i in m} x_i over n variables, where
/// each monomial is a variable mask. Streams 2^chunk_bits rows at a time with
/// 64 rows per machine word; nothing of size 2^n is materialised.
std::uint64_t monomial_sum_weight(std::span<const std::uint64_t> monomials, int n,
                                  int chunk_bits = 14, unsigned workers = 0);

/// Hamming weight of f_n. Throws BudgetExceeded when n > options.budget_n.
std::uint64_t weight(const RSFunctionSpec& spec, int n, Interpretation interpretation,
                     const WeightOptions& options = {});

WeightSequence weight_sequence(const RSFunctionSpec& spec, int n_from, int n_to,
                               Interpretation interpretation, const WeightOptions& options = {});

}  // namespace rsbf
