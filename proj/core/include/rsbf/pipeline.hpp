#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "rsbf/minpoly.hpp"
#include "rsbf/monomial.hpp"
#include "rsbf/poly.hpp"
#include "rsbf/recursion.hpp"
#include "rsbf/rules_matrix.hpp"
#include "rsbf/truth_table.hpp"

namespace rsbf {

/// Parses "1,2,6;1,2;1,6": generators separated by ';', indices by ','.
/// Whitespace around tokens is ignored. Throws InvalidInput.
RSFunctionSpec parse_spec(std::string_view text);

enum class OutputFormat { kText, kJson };

struct RunConfig {
  RSFunctionSpec spec{{MonomialPattern{1}}};
  int weights_count = 0;
  /// Upper end of the brute-force verification range, when verification is requested.
  std::optional<int> verify_to;
  int budget_n = kDefaultEnumerationBudget;
  int max_state_width = kDefaultMaxStateWidth;
  Interpretation interpretation = Interpretation::kOrbitDistinct;
  MinpolyMethod minpoly_method = MinpolyMethod::kAuto;
  OutputFormat format = OutputFormat::kText;
  std::uint64_t seed = 1;
  std::optional<std::string> dump_matrix_path;
};

/// Hard caps for RunConfig budgets.
inline constexpr int kHardEnumerationCap = 28;
inline constexpr int kHardStateWidthCap = 24;

enum class ExitCode : int { kSuccess = 0, kInvalidInput = 2, kBudgetExceeded = 3 };

struct WeightEntry {
  enum class Method { kBrute, kPropagated, kShortReplaced };
  int n;
  mpz_class value;
  Method method;
};

std::string_view to_string(WeightEntry::Method method);

struct RunResult {
  ExitCode exit_code = ExitCode::kSuccess;
  std::string error;

  RSFunctionSpec spec{{MonomialPattern{1}}};
  Interpretation interpretation = Interpretation::kOrbitDistinct;
  bool linear_only = false;

  int state_width = 0;
  std::uint64_t raw_dimension = 0;
  std::uint64_t pruned_dimension = 0;
  std::optional<MinpolyMethod> minpoly_method;

  BigPoly minimal_polynomial;
  int x_multiplicity = 0;
  BigPoly reduced_polynomial;
  std::optional<RecursionSpec> recursion;

  std::vector<WeightEntry> weights;
  std::optional<VerificationReport> verification;
};

/// Runs the whole pipeline. Never throws for input or budget problems; those
/// are reported through exit_code and error.
RunResult run(const RunConfig& config);

/// Single JSON document; integers that may grow large are decimal strings.
std::string to_json(const RunResult& result);
std::string to_text(const RunResult& result);

}  // namespace rsbf
