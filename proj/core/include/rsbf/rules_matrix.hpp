#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rsbf/monomial.hpp"
#include "rsbf/sparse_matrix.hpp"

namespace rsbf {

/// Set of active mu-actions across all nonlinear generators, packed
/// generator-major with the first generator in the most significant field.
/// A generator with top index c owns c - 1 bits; level v (2 <= v <= c) is the
/// bit of value 2^(c - v) within that field.
struct OperationState {
  std::uint64_t bits = 0;

  friend auto operator<=>(const OperationState&, const OperationState&) = default;
};

/// Field geometry of OperationState for one spec.
class StateLayout {
 public:
  explicit StateLayout(const RSFunctionSpec& spec);

  struct Field {
    MonomialPattern generator;
    int shift;                   // position of the field's least significant bit
    int width;                   // top - 1
    std::uint64_t break_mask;    // bits of the break levels
  };

  /// Total width Rs - t (sum of top indices minus the number of nonlinear generators).
  int width() const { return width_; }
  std::uint64_t state_count() const { return std::uint64_t{1} << width_; }
  int linear_count() const { return linear_count_; }
  const std::vector<Field>& fields() const { return fields_; }

  /// Active levels of field g, ascending.
  std::vector<int> levels(OperationState state, std::size_t g) const;
  OperationState with_levels(const std::vector<std::vector<int>>& levels_per_field) const;

 private:
  std::vector<Field> fields_;
  int width_ = 0;
  int linear_count_ = 0;
};

/// Left-half successor: break levels vanish, every other level v becomes v - 1.
OperationState left_child(OperationState state, const StateLayout& layout);

struct RightChild {
  OperationState state;
  /// Parity of complement events plus linear generators.
  bool complement = false;

  friend bool operator==(const RightChild&, const RightChild&) = default;
};

/// Right-half successor: every level v becomes v - 1 (level 2 turns into a
/// complement), then each nonlinear generator gains its top-level action.
RightChild right_child(OperationState state, const StateLayout& layout);

inline constexpr int kDefaultMaxStateWidth = 24;

struct RulesMatrixOptions {
  int max_state_width = kDefaultMaxStateWidth;
};

struct RulesMatrix {
  /// 2^(Rs - t) + 1.
  std::uint64_t raw_dimension = 0;
  /// Surviving raw indices in ascending order; the last one is the complement
  /// index 2^(Rs - t).
  std::vector<std::uint64_t> kept;
  /// Matrix restricted to `kept`, re-indexed 0..kept.size()-1.
  SparseIntMatrix matrix;

  /// "row col value" triples in raw index space, sorted.
  void write_triples(std::ostream& out) const;
};

/// Assembles the rules matrix column by column from the child rules and
/// prunes zero rows (with their columns) to a fixed point. Throws
/// BudgetExceeded when Rs - t exceeds options.max_state_width and
/// InvalidInput for the pure linear spec.
RulesMatrix build_rules_matrix(const RSFunctionSpec& spec, const RulesMatrixOptions& options = {});

}  // namespace rsbf
