#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "rsbf/monomial.hpp"
#include "rsbf/poly.hpp"
#include "rsbf/truth_table.hpp"
#include "rsbf/weight.hpp"

namespace rsbf {

/// w_n = sum_{i=1}^{D} c_i w_{n-i}, asserted for n >= valid_from.
struct RecursionSpec {
  std::vector<mpz_class> coefficients;  // c_1 .. c_D
  int valid_from = 0;

  int order() const { return static_cast<int>(coefficients.size()); }

  friend bool operator==(const RecursionSpec&, const RecursionSpec&) = default;
};

/// Reads a monic q = x^D + a_{D-1} x^{D-1} + ... + a_0 with a_0 != 0 as
/// c_i = -a_{D-i}. valid_from = first_n + D, where first_n = max_top + 1 is
/// the first index whose weight seeds the recurrence.
RecursionSpec recursion_from_polynomial(const BigPoly& q, int max_top);

/// Brute-forced w_{max_top+1}, ..., w_{max_top+D}. Throws BudgetExceeded
/// when max_top + D exceeds the enumeration budget.
WeightSequence initial_conditions(const RSFunctionSpec& spec, const RecursionSpec& rec,
                                  Interpretation interpretation, const WeightOptions& options = {});

/// Extends `initial` (exactly D values) to `count` values.
WeightSequence propagate(const RecursionSpec& rec, const WeightSequence& initial, int count);

struct Residual {
  int n;
  mpz_class value;

  friend bool operator==(const Residual&, const Residual&) = default;
};

struct VerificationReport {
  int n_lo = 0;
  int n_hi = 0;
  Interpretation interpretation = Interpretation::kOrbitDistinct;
  WeightSequence weights;
  /// r_n = w_n - sum c_i w_{n-i} for every n in [n_lo + D, n_hi].
  std::vector<Residual> residuals;
  std::vector<int> nonzero;
  /// Earliest n from which every residual up to n_hi vanishes.
  std::optional<int> zero_from;
  /// n in [n_lo, n_hi] where some generator's orbit has fewer than n members.
  std::vector<int> short_n;

  bool holds_from(int n) const;
};

VerificationReport verify_recursion(const RSFunctionSpec& spec, const RecursionSpec& rec, int n_lo, int n_hi,
                                    Interpretation interpretation, const WeightOptions& options = {});

/// n values in [lo, hi] at which some generator of the spec is short.
std::vector<int> short_positions(const RSFunctionSpec& spec, int lo, int hi);

}  // namespace rsbf
