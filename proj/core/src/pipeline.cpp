#include "rsbf/pipeline.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "rsbf/errors.hpp"

namespace rsbf {

namespace {

std::string_view strip(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_index(std::string_view token) {
  token = strip(token);
  int value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw InvalidInput("malformed integer '" + std::string(token) + "' in generator list");
  }
  return value;
}

}  // namespace

RSFunctionSpec parse_spec(std::string_view text) {
  text = strip(text);
  if (text.empty()) throw InvalidInput("empty generator list");
  std::vector<MonomialPattern> generators;
  for (auto part : split(text, ';')) {
    std::vector<int> indices;
    for (auto token : split(part, ',')) indices.push_back(parse_index(token));
    generators.emplace_back(std::move(indices));
  }
  return RSFunctionSpec(std::move(generators));
}

std::string_view to_string(WeightEntry::Method method) {
  switch (method) {
    case WeightEntry::Method::kBrute:
      return "brute";
    case WeightEntry::Method::kPropagated:
      return "propagated";
    case WeightEntry::Method::kShortReplaced:
      return "short-replaced";
  }
  return "brute";
}

namespace {

// Display weights: brute-forced full-sum seeds, propagated by the recurrence,
// then entries at short n recomputed under the requested interpretation.
void compute_weights(const RunConfig& config, RunResult& result, const WeightOptions& options) {
  const RecursionSpec& rec = *result.recursion;
  const int first = config.spec.max_top() + 1;
  const int brute = std::min(config.weights_count, rec.order());
  if (first + brute - 1 > options.budget_n) {
    throw BudgetExceeded("initial conditions for a recursion of order " + std::to_string(rec.order()) +
                         " need weights up to n=" + std::to_string(first + rec.order() - 1) +
                         ", beyond the enumeration budget n <= " + std::to_string(options.budget_n));
  }
  WeightSequence seq = weight_sequence(config.spec, first, first + brute - 1, Interpretation::kFullSum, options);
  if (config.weights_count > rec.order()) seq = propagate(rec, seq, config.weights_count);

  for (std::size_t i = 0; i < seq.values.size(); ++i) {
    const auto method = static_cast<int>(i) < brute ? WeightEntry::Method::kBrute : WeightEntry::Method::kPropagated;
    result.weights.push_back({seq.start_n + static_cast<int>(i), seq.values[i], method});
  }
  if (config.interpretation == Interpretation::kFullSum) return;
  for (int n : short_positions(config.spec, first, seq.end_n())) {
    auto& entry = result.weights[static_cast<std::size_t>(n - first)];
    entry.value = static_cast<unsigned long>(weight(config.spec, n, config.interpretation, options));
    entry.method = WeightEntry::Method::kShortReplaced;
  }
}

void run_pipeline(const RunConfig& config, RunResult& result) {
  if (config.budget_n < 1 || config.max_state_width < 1) throw InvalidInput("budgets must be positive");
  if (config.budget_n > kHardEnumerationCap) {
    throw BudgetExceeded("enumeration budget n <= " + std::to_string(config.budget_n) + " is above the hard cap of " +
                         std::to_string(kHardEnumerationCap));
  }
  if (config.max_state_width > kHardStateWidthCap) {
    throw BudgetExceeded("matrix budget of width " + std::to_string(config.max_state_width) +
                         " is above the hard cap of " + std::to_string(kHardStateWidthCap));
  }
  if (config.weights_count < 0) throw InvalidInput("weights count must be nonnegative");

  const WeightOptions options{.budget_n = config.budget_n};
  const int max_top = config.spec.max_top();

  if (config.spec.is_pure_linear()) {
    result.linear_only = true;
    result.minimal_polynomial = BigPoly{-2, 1};
    result.reduced_polynomial = result.minimal_polynomial;
  } else {
    const RulesMatrix rules = build_rules_matrix(config.spec, {.max_state_width = config.max_state_width});
    result.state_width = StateLayout(config.spec).width();
    result.raw_dimension = rules.raw_dimension;
    result.pruned_dimension = rules.matrix.dimension();
    if (config.dump_matrix_path) {
      std::ofstream out(*config.dump_matrix_path);
      if (!out) throw InvalidInput("cannot open matrix dump file " + *config.dump_matrix_path);
      rules.write_triples(out);
    }
    result.minpoly_method = resolve_method(config.minpoly_method, rules.matrix.dimension());
    result.minimal_polynomial = minimal_polynomial(rules.matrix, {config.minpoly_method, config.seed});
    const StrippedPoly stripped = strip_x_factor(result.minimal_polynomial);
    result.reduced_polynomial = stripped.reduced;
    result.x_multiplicity = stripped.multiplicity;
  }
  result.recursion = recursion_from_polynomial(result.reduced_polynomial, max_top);

  if (config.weights_count > 0) compute_weights(config, result, options);
  if (config.verify_to) {
    result.verification =
        verify_recursion(config.spec, *result.recursion, max_top, *config.verify_to, config.interpretation, options);
  }
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult result;
  result.spec = config.spec;
  result.interpretation = config.interpretation;
  try {
    run_pipeline(config, result);
  } catch (const InvalidInput& e) {
    result.exit_code = ExitCode::kInvalidInput;
    result.error = e.what();
  } catch (const BudgetExceeded& e) {
    result.exit_code = ExitCode::kBudgetExceeded;
    result.error = e.what();
  }
  return result;
}

namespace {

using Json = nlohmann::ordered_json;

Json coefficients(const BigPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

Json generators(const RSFunctionSpec& spec) {
  Json out = Json::array();
  for (const auto& g : spec.generators()) out.push_back(std::vector<int>(g.indices().begin(), g.indices().end()));
  return out;
}

std::string braces(const RSFunctionSpec& spec) {
  std::string out = "{";
  for (std::size_t i = 0; i < spec.generators().size(); ++i) {
    if (i) out += ",";
    out += "{" + spec.generators()[i].to_string() + "}";
  }
  return out + "}";
}

std::string recurrence_text(const RecursionSpec& rec) {
  std::ostringstream out;
  out << "w_n =";
  bool first = true;
  for (int i = 1; i <= rec.order(); ++i) {
    const mpz_class& c = rec.coefficients[static_cast<std::size_t>(i - 1)];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    out << (first ? (c < 0 ? " -" : " ") : (c < 0 ? " - " : " + "));
    if (mag != 1) out << mag.get_str();
    out << "w_{n-" << i << "}";
    first = false;
  }
  return out.str();
}

}  // namespace

std::string to_json(const RunResult& result) {
  Json doc;
  doc["generators"] = generators(result.spec);
  doc["interpretation"] = std::string(to_string(result.interpretation));
  doc["linear_only"] = result.linear_only;
  doc["state_width"] = result.state_width;
  doc["matrix"] = {{"raw_dimension", result.raw_dimension}, {"pruned_dimension", result.pruned_dimension}};
  doc["minpoly_method"] = result.minpoly_method ? Json(std::string(to_string(*result.minpoly_method))) : Json();
  doc["minimal_polynomial"] = coefficients(result.minimal_polynomial);
  doc["x_multiplicity"] = result.x_multiplicity;
  doc["reduced_polynomial"] = coefficients(result.reduced_polynomial);
  if (result.recursion) {
    Json c = Json::array();
    for (const auto& x : result.recursion->coefficients) c.push_back(x.get_str());
    doc["order"] = result.recursion->order();
    doc["recurrence"] = {{"coefficients", c}, {"valid_from", result.recursion->valid_from}};
  } else {
    doc["order"] = nullptr;
    doc["recurrence"] = nullptr;
  }
  Json weights = Json::array();
  for (const auto& w : result.weights) {
    weights.push_back({{"n", w.n}, {"value", w.value.get_str()}, {"method", std::string(to_string(w.method))}});
  }
  doc["weights"] = weights;
  if (result.verification) {
    const auto& v = *result.verification;
    Json residuals = Json::array();
    for (const auto& r : v.residuals) residuals.push_back({{"n", r.n}, {"residual", r.value.get_str()}});
    Json w = Json::array();
    for (const auto& x : v.weights.values) w.push_back(x.get_str());
    doc["verification"] = {
        {"n_lo", v.n_lo},
        {"n_hi", v.n_hi},
        {"interpretation", std::string(to_string(v.interpretation))},
        {"weights", w},
        {"residuals", residuals},
        {"nonzero", v.nonzero},
        {"zero_from", v.zero_from ? Json(*v.zero_from) : Json()},
        {"short_n", v.short_n},
    };
  } else {
    doc["verification"] = nullptr;
  }
  doc["exit_code"] = static_cast<int>(result.exit_code);
  doc["error"] = result.error.empty() ? Json() : Json(result.error);
  return doc.dump(2) + "\n";
}

std::string to_text(const RunResult& result) {
  std::ostringstream out;
  out << "generators: " << braces(result.spec) << '\n';
  if (result.linear_only) {
    out << "linear function x1+x2+...+xn: recursion coefficient 2 (w_n = 2w_{n-1})\n";
  } else if (result.raw_dimension) {
    out << "state width (Rs - t): " << result.state_width << '\n';
    out << "rules matrix: raw dimension " << result.raw_dimension << ", pruned dimension " << result.pruned_dimension
        << '\n';
    if (!result.minimal_polynomial.is_zero()) {
      out << "minimal polynomial (" << to_string(*result.minpoly_method)
          << "): " << result.minimal_polynomial.to_string() << '\n';
      out << "reduces to (x^" << result.x_multiplicity << " removed): " << result.reduced_polynomial.to_string()
          << '\n';
    }
  }
  if (result.recursion) {
    out << "recurrence of order " << result.recursion->order() << ", asserted from n=" << result.recursion->valid_from
        << ": " << recurrence_text(*result.recursion) << '\n';
  }
  if (!result.weights.empty()) {
    out << "first " << result.weights.size() << " weights (starting with n=" << result.weights.front().n << "): {";
    for (std::size_t i = 0; i < result.weights.size(); ++i) out << (i ? "," : "") << result.weights[i].value.get_str();
    out << "}\n";
    for (const auto& w : result.weights) {
      if (w.method == WeightEntry::Method::kShortReplaced) {
        out << "  n=" << w.n << " is short; weight recomputed under " << to_string(result.interpretation) << '\n';
      }
    }
  }
  if (result.verification) {
    const auto& v = *result.verification;
    out << "verification " << to_string(v.interpretation) << " n=" << v.n_lo << ".." << v.n_hi << ": ";
    if (v.nonzero.empty()) {
      out << "all residuals zero";
    } else {
      out << "nonzero residuals at n =";
      for (int n : v.nonzero) out << ' ' << n;
    }
    if (v.zero_from) out << "; zero from n=" << *v.zero_from;
    if (!v.short_n.empty()) {
      out << "; short n =";
      for (int n : v.short_n) out << ' ' << n;
    }
    out << '\n';
  }
  if (!result.error.empty()) out << "error: " << result.error << '\n';
  return out.str();
}

}  // namespace rsbf
