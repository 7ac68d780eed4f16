#include "rsbf/recursion.hpp"

#include <algorithm>
#include <string>

#include "rsbf/errors.hpp"

namespace rsbf {

RecursionSpec recursion_from_polynomial(const BigPoly& q, int max_top) {
  if (q.degree() < 1 || !q.is_monic()) throw InvalidInput("recursion polynomial must be monic of degree >= 1");
  if (q.coeff(0) == 0) throw InvalidInput("recursion polynomial must have a nonzero constant term");
  const int order = q.degree();
  RecursionSpec rec;
  rec.coefficients.reserve(static_cast<std::size_t>(order));
  for (int i = 1; i <= order; ++i) rec.coefficients.push_back(-q.coeff(order - i));
  rec.valid_from = max_top + 1 + order;
  return rec;
}

WeightSequence initial_conditions(const RSFunctionSpec& spec, const RecursionSpec& rec,
                                  Interpretation interpretation, const WeightOptions& options) {
  const int first = spec.max_top() + 1;
  const int last = spec.max_top() + rec.order();
  if (last > options.budget_n) {
    throw BudgetExceeded("initial conditions for a recursion of order " + std::to_string(rec.order()) +
                         " need weights up to n=" + std::to_string(last) + ", beyond the enumeration budget n <= " +
                         std::to_string(options.budget_n));
  }
  return weight_sequence(spec, first, last, interpretation, options);
}

WeightSequence propagate(const RecursionSpec& rec, const WeightSequence& initial, int count) {
  const auto order = static_cast<std::size_t>(rec.order());
  if (initial.values.size() != order) throw InvalidInput("propagation needs exactly one initial value per order");
  WeightSequence out{initial.start_n, initial.values};
  if (count < static_cast<int>(order)) {
    out.values.resize(static_cast<std::size_t>(std::max(count, 0)));
    return out;
  }
  out.values.reserve(static_cast<std::size_t>(count));
  while (out.values.size() < static_cast<std::size_t>(count)) {
    mpz_class next = 0;
    const std::size_t m = out.values.size();
    for (std::size_t i = 1; i <= order; ++i) next += rec.coefficients[i - 1] * out.values[m - i];
    out.values.push_back(std::move(next));
  }
  return out;
}

bool VerificationReport::holds_from(int n) const {
  for (const auto& r : residuals) {
    if (r.n >= n && r.value != 0) return false;
  }
  return true;
}

std::vector<int> short_positions(const RSFunctionSpec& spec, int lo, int hi) {
  std::vector<int> out;
  for (int n = std::max(lo, spec.max_top()); n <= hi; ++n) {
    for (const auto& g : spec.generators()) {
      if (rotation_orbit(g, n).is_short) {
        out.push_back(n);
        break;
      }
    }
  }
  return out;
}

VerificationReport verify_recursion(const RSFunctionSpec& spec, const RecursionSpec& rec, int n_lo, int n_hi,
                                    Interpretation interpretation, const WeightOptions& options) {
  if (n_lo < spec.max_top()) throw InvalidInput("verification range starts below the largest generator index");
  if (n_hi < n_lo) throw InvalidInput("empty verification range");
  if (n_hi > options.budget_n) {
    throw BudgetExceeded("verification up to n=" + std::to_string(n_hi) + " exceeds the enumeration budget n <= " +
                         std::to_string(options.budget_n));
  }
  VerificationReport report;
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  report.interpretation = interpretation;
  report.weights = weight_sequence(spec, n_lo, n_hi, interpretation, options);
  report.short_n = short_positions(spec, n_lo, n_hi);

  const int order = rec.order();
  for (int n = n_lo + order; n <= n_hi; ++n) {
    mpz_class r = report.weights.at_n(n);
    for (int i = 1; i <= order; ++i) r -= rec.coefficients[static_cast<std::size_t>(i - 1)] * report.weights.at_n(n - i);
    if (r != 0) report.nonzero.push_back(n);
    report.residuals.push_back({n, std::move(r)});
  }
  for (auto it = report.residuals.rbegin(); it != report.residuals.rend() && it->value == 0; ++it) {
    report.zero_from = it->n;
  }
  return report;
}

}  // namespace rsbf
