#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "rsbf/errors.hpp"
#include "rsbf/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Weights and recursions of monomial rotation symmetric Boolean functions"};

  std::string spec_text;
  rsbf::RunConfig config;
  int verify_to = 22;
  std::string interpretation = "orbit-distinct";
  std::string method = "auto";
  std::string format = "text";
  std::string dump_path;

  app.add_option("spec", spec_text, "Generators, e.g. \"1,2,6;1,2;1,6\"")->required();
  app.add_option("--weights", config.weights_count, "Number of weights to display, from n = max top + 1")
      ->check(CLI::NonNegativeNumber);
  auto* verify =
      app.add_option("--verify", verify_to, "Check the recursion against brute force up to n (default min(budget, 22))")
          ->expected(0, 1);
  app.add_option("--interpretation", interpretation, "orbit-distinct or full-sum")
      ->check(CLI::IsMember({"orbit-distinct", "full-sum"}));
  app.add_option("--minpoly", method, "auto, dense, vector-lcm or modular")
      ->check(CLI::IsMember({"auto", "dense", "dense-dependence", "vector-lcm", "modular"}));
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", config.seed, "Seed for randomized minimal polynomial methods");
  app.add_option("--budget-n", config.budget_n, "Largest n enumerated by brute force");
  app.add_option("--max-state-width", config.max_state_width, "Largest operation state width (log2 of matrix size)");
  app.add_option("--dump-matrix", dump_path, "Write the pruned rules matrix as (row col value) triples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(rsbf::ExitCode::kInvalidInput);
  }

  try {
    config.spec = rsbf::parse_spec(spec_text);
    config.interpretation = rsbf::parse_interpretation(interpretation);
    config.minpoly_method = rsbf::parse_minpoly_method(method);
  } catch (const rsbf::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(rsbf::ExitCode::kInvalidInput);
  }
  config.format = format == "json" ? rsbf::OutputFormat::kJson : rsbf::OutputFormat::kText;
  if (verify->count() > 0) {
    config.verify_to = verify->results().empty() || verify->results().front().empty()
                           ? std::min(config.budget_n, 22)
                           : verify_to;
  }
  if (!dump_path.empty()) config.dump_matrix_path = dump_path;

  const rsbf::RunResult result = rsbf::run(config);
  std::cout << (config.format == rsbf::OutputFormat::kJson ? rsbf::to_json(result) : rsbf::to_text(result));
  return static_cast<int>(result.exit_code);
}
