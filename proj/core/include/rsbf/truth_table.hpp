#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsbf/monomial.hpp"

namespace rsbf {

/// Truth table of an n-variable Boolean function. Row j holds f(v_j), where
/// the binary expansion of j (most significant bit first) is (x_1, ..., x_n).
/// Bits are packed LSB-first into 64-bit words.
class TruthTable {
 public:
  TruthTable() = default;
  /// All-zero table on n variables.
  explicit TruthTable(int n);

  static TruthTable ones(int n);
  /// Parses a string of '0'/'1' characters whose length is a power of two.
  static TruthTable from_string(std::string_view bits);

  int vars() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  bool operator[](std::uint64_t j) const { return (words_[j >> 6] >> (j & 63)) & 1U; }
  void set(std::uint64_t j, bool bit);
  /// Sets bits [first, first + count) to one.
  void fill_ones(std::uint64_t first, std::uint64_t count);

  std::uint64_t popcount() const;

  TruthTable& operator^=(const TruthTable& other);
  friend TruthTable operator^(TruthTable a, const TruthTable& b) { return a ^= b; }
  TruthTable operator~() const;

  /// Half 0 (x_1 = 0) or half 1 (x_1 = 1) as a table on n - 1 variables.
  TruthTable half(int which) const;
  /// Portion `index` of 2^log2_parts equal portions, as a table on n - log2_parts variables.
  TruthTable portion(int log2_parts, std::uint64_t index) const;
  /// left || right; both operands must have the same variable count.
  static TruthTable concat(const TruthTable& left, const TruthTable& right);

  std::span<const std::uint64_t> words() const { return words_; }

  std::string to_string() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_ = std::vector<std::uint64_t>(1, 0);
};

/// Direct product-of-bits evaluation of a monomial at row j of an n-variable table.
bool eval_monomial_at(const MonomialPattern& pattern, int n, std::uint64_t j);

/// Nested run-length table of x_{k_1} ... x_{k_m} on n variables:
///   (0_{2^{n-k_1}} (0_{2^{n-k_2}} ( ... (0_{2^{n-k_m}} 1_{2^{n-k_m}})
///       _{2^{k_m-k_{m-1}-1}} ... ) _{2^{k_2-k_1-1}} ) _{2^{k_1-1}}
/// An empty index list gives the all-ones table.
TruthTable nested_run_table(std::span<const int> indices, int n);

/// Truth table of a monomial, built from the nested run-length closed form.
TruthTable monomial_truth_table(const MonomialPattern& pattern, int n);

struct RotationOrbit {
  /// Distinct rotated supports, lexicographically sorted.
  std::vector<MonomialPattern> members;
  /// True when the orbit has fewer than n members.
  bool is_short = false;

  std::size_t size() const { return members.size(); }
};

/// Orbit of the pattern's support under the cyclic shift of n variables.
RotationOrbit rotation_orbit(const MonomialPattern& pattern, int n);

/// How the function f_n is assembled from the generators when an orbit is short.
enum class Interpretation {
  /// XOR over the distinct orbit members of every generator.
  kOrbitDistinct,
  /// XOR over all n rotated copies of every generator, reduced mod 2.
  kFullSum,
};

std::string_view to_string(Interpretation interpretation);
Interpretation parse_interpretation(std::string_view text);

/// Monomials (as variable masks, bit i-1 for x_i) that survive in f_n after
/// reduction mod 2, sorted ascending. Requires max_top() <= n <= 64.
std::vector<std::uint64_t> function_monomials(const RSFunctionSpec& spec, int n,
                                              Interpretation interpretation);

/// Full truth table of f_n.
TruthTable mrs_truth_table(const RSFunctionSpec& spec, int n, Interpretation interpretation);

/// Row index of rho(x) where rho(x_1, ..., x_n) = (x_2, ..., x_n, x_1).
std::uint64_t rotate_row(std::uint64_t j, int n);

}  // namespace rsbf
