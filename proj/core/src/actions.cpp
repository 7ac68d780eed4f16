#include "rsbf/actions.hpp"

#include <algorithm>
#include <string>

#include "rsbf/errors.hpp"

namespace rsbf {

namespace {

void check_level(const MonomialPattern& pattern, int v) {
  if (v < 1 || v > pattern.top()) {
    throw InvalidInput("action level " + std::to_string(v) + " out of range for " + pattern.to_string());
  }
}

void check_mask_shape(const MonomialPattern& pattern, int v, int n) {
  check_level(pattern, v);
  if (n < pattern.top() || n < 1) throw InvalidInput("variable count below the pattern's top index");
}

}  // namespace

MuAction::MuAction(MonomialPattern p, int v) : pattern(std::move(p)), level(v) { check_level(pattern, level); }

TruthTable mu_sequence_definitional(const MonomialPattern& pattern, int v, int n) {
  check_mask_shape(pattern, v, n);
  TruthTable full(n);
  for (std::uint64_t j = 0; j < full.size(); ++j) full.set(j, eval_monomial_at(pattern, n, j));

  const int log2_parts = pattern.top() - v + 1;
  const TruthTable last = full.portion(log2_parts, (std::uint64_t{1} << log2_parts) - 1);
  const int stretch = pattern.top() - v;
  TruthTable out(n - 1);
  for (std::uint64_t j = 0; j < out.size(); ++j) out.set(j, last[j >> stretch]);
  return out;
}

TruthTable mu_sequence_closed_form(const MonomialPattern& pattern, int v, int n) {
  check_mask_shape(pattern, v, n);
  // v = 1 leaves no index above the cut and gives 1_{2^{n-1}}; for the
  // quadratic x_1 x_a only the top survives and the table collapses to
  // (0_{2^{n-v}} 1_{2^{n-v}})_{2^{v-2}}.
  const int cut = pattern.top() - v + 1;
  std::vector<int> shifted;
  for (int c : pattern.indices()) {
    if (c > cut) shifted.push_back(c - cut);
  }
  return nested_run_table(shifted, n - 1);
}

std::vector<int> break_levels(const MonomialPattern& pattern) {
  std::vector<int> levels;
  const auto idx = pattern.indices();
  for (std::size_t t = 1; t < idx.size(); ++t) levels.push_back(pattern.top() - idx[t] + 2);
  std::sort(levels.begin(), levels.end());
  return levels;
}

SplitOutcome split_action(const MonomialPattern& pattern, int v) {
  check_level(pattern, v);
  if (v == 1) return {SplitTarget::complement(), SplitTarget::complement()};
  const auto breaks = break_levels(pattern);
  if (std::binary_search(breaks.begin(), breaks.end(), v)) {
    return {SplitTarget::none(), SplitTarget::action(v - 1)};
  }
  return {SplitTarget::action(v - 1), SplitTarget::action(v - 1)};
}

TruthTable apply_action(const TruthTable& table, const MonomialPattern& pattern, int v) {
  return table ^ mu_sequence_closed_form(pattern, v, table.vars() + 1);
}

namespace {

TruthTable target_mask(const MonomialPattern& pattern, const SplitTarget& target, int n) {
  switch (target.kind) {
    case SplitTarget::Kind::kNone:
      return TruthTable(n - 1);
    case SplitTarget::Kind::kComplement:
      return TruthTable::ones(n - 1);
    case SplitTarget::Kind::kAction:
      break;
  }
  return mu_sequence_definitional(pattern, target.level, n);
}

}  // namespace

bool split_identity_check(const MonomialPattern& pattern, int v, int n, const TruthTable& table) {
  if (n <= pattern.top()) throw InvalidInput("split check needs n above the pattern's top index");
  if (table.vars() != n - 1) throw InvalidInput("split check table must have n - 1 variables");

  const TruthTable lhs = table ^ mu_sequence_definitional(pattern, v, n);
  const SplitOutcome outcome = split_action(pattern, v);
  const TruthTable left = table.half(0) ^ target_mask(pattern, outcome.left, n - 1);
  const TruthTable right = table.half(1) ^ target_mask(pattern, outcome.right, n - 1);
  return lhs == TruthTable::concat(left, right);
}

std::vector<MuAction> fresh_actions(const RSFunctionSpec& spec) {
  std::vector<MuAction> out;
  for (const auto& g : spec.generators()) {
    if (!g.is_linear()) out.emplace_back(g, g.top());
  }
  return out;
}

}  // namespace rsbf
