#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rsbf {

/// A monomial x_{k_1} x_{k_2} ... x_{k_m} given by its strictly increasing,
/// 1-based variable indices.
class MonomialPattern {
 public:
  explicit MonomialPattern(std::vector<int> indices);
  MonomialPattern(std::initializer_list<int> indices)
      : MonomialPattern(std::vector<int>(indices)) {}

  std::span<const int> indices() const { return indices_; }
  int degree() const { return static_cast<int>(indices_.size()); }
  int front() const { return indices_.front(); }
  int top() const { return indices_.back(); }
  bool is_linear() const { return indices_.size() == 1; }

  /// Variable set as a bit mask, bit (i - 1) for x_i. Requires top() <= 64.
  std::uint64_t mask() const;

  /// "1,2,6"
  std::string to_string() const;

  friend bool operator==(const MonomialPattern&, const MonomialPattern&) = default;
  friend auto operator<=>(const MonomialPattern&, const MonomialPattern&) = default;

 private:
  std::vector<int> indices_;
};

/// The generating monomials of a rotation symmetric function family f_n.
/// Every generator starts at x_1, generators are pairwise distinct and at
/// most one of them is the linear monomial x_1.
class RSFunctionSpec {
 public:
  explicit RSFunctionSpec(std::vector<MonomialPattern> generators);

  const std::vector<MonomialPattern>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

  /// Largest top index over all generators.
  int max_top() const;
  int linear_count() const;
  bool is_pure_linear() const { return generators_.size() == 1 && generators_[0].is_linear(); }

  /// "1,2,6;1,2;1,6"
  std::string to_string() const;

  friend bool operator==(const RSFunctionSpec&, const RSFunctionSpec&) = default;

 private:
  std::vector<MonomialPattern> generators_;
};

}  // namespace rsbf
