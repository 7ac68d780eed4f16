#pragma once

#include <vector>

#include "rsbf/monomial.hpp"
#include "rsbf/truth_table.hpp"

namespace rsbf {

/// A mu-action of level v derived from a generator x_1 x_{c_2} ... x_{c_d}.
/// Level 1 is the all-ones mask (complementation).
struct MuAction {
  MonomialPattern pattern;
  int level;

  MuAction(MonomialPattern p, int v);

  friend bool operator==(const MuAction&, const MuAction&) = default;
};

/// Mask of the level-v action for tables in n - 1 variables (length 2^(n-1)),
/// built literally: cut the pattern's n-variable truth table into
/// 2^(top - v + 1) portions, keep the last one and repeat each of its entries
/// 2^(top - v) times. The pattern table comes from direct evaluation.
TruthTable mu_sequence_definitional(const MonomialPattern& pattern, int v, int n);

/// Same mask from the nested run-length closed form. The level-v mask is the
/// monomial over the indices c_t - (top - v + 1) of those c_t > top - v + 1,
/// laid out on n - 1 variables.
TruthTable mu_sequence_closed_form(const MonomialPattern& pattern, int v, int n);

/// Levels at which an action vanishes from the left half when a table
/// splits: { top - c_t + 2 : t = 2..d }, ascending. Always contains 2 for a
/// nonlinear pattern; empty for the linear pattern.
std::vector<int> break_levels(const MonomialPattern& pattern);

struct SplitTarget {
  enum class Kind { kNone, kAction, kComplement };
  Kind kind = Kind::kNone;
  /// Meaningful only for kAction; always >= 2.
  int level = 0;

  static SplitTarget none() { return {Kind::kNone, 0}; }
  static SplitTarget complement() { return {Kind::kComplement, 0}; }
  /// action(1) is the complement.
  static SplitTarget action(int v) { return v == 1 ? complement() : SplitTarget{Kind::kAction, v}; }

  friend bool operator==(const SplitTarget&, const SplitTarget&) = default;
};

struct SplitOutcome {
  SplitTarget left;
  SplitTarget right;

  friend bool operator==(const SplitOutcome&, const SplitOutcome&) = default;
};

/// What a level-v action becomes on each half of a table one variable smaller.
SplitOutcome split_action(const MonomialPattern& pattern, int v);

/// XORs the level-v mask (n = table.vars() + 1) onto a table.
TruthTable apply_action(const TruthTable& table, const MonomialPattern& pattern, int v);

/// Checks table ^ mu_v^n == (T1 ^ left) || (T2 ^ right) where T1, T2 are the
/// halves of `table` (a table on n - 1 variables) and left/right are the
/// masks on n - 2 variables prescribed by split_action.
bool split_identity_check(const MonomialPattern& pattern, int v, int n, const TruthTable& table);

/// One top-level action per nonlinear generator, in generator order.
std::vector<MuAction> fresh_actions(const RSFunctionSpec& spec);

}  // namespace rsbf
