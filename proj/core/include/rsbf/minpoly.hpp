#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "rsbf/poly.hpp"
#include "rsbf/sparse_matrix.hpp"

namespace rsbf {

enum class MinpolyMethod {
  kAuto,
  /// Flattened powers I, A, A^2, ... until the first rational dependence.
  kDenseDependence,
  /// Exact Krylov minimal polynomials of random vectors, combined by lcm.
  kVectorLcm,
  /// Minimal polynomials over word-size primes, Chinese remaindering.
  kModular,
};

std::string_view to_string(MinpolyMethod method);
MinpolyMethod parse_minpoly_method(std::string_view text);

struct MinpolyOptions {
  MinpolyMethod method = MinpolyMethod::kAuto;
  std::uint64_t seed = 1;
};

/// Method chosen by kAuto for a given dimension.
MinpolyMethod resolve_method(MinpolyMethod method, std::size_t dimension);

/// Monic minimal polynomial of A. Whatever the method, the result is checked
/// to annihilate A exactly before it is returned.
BigPoly minimal_polynomial(const SparseIntMatrix& a, const MinpolyOptions& options = {});

struct StrippedPoly {
  BigPoly reduced;
  int multiplicity = 0;

  friend bool operator==(const StrippedPoly&, const StrippedPoly&) = default;
};

/// p = x^multiplicity * reduced with reduced(0) != 0. A pure power x^d maps
/// to (x, d - 1). Throws InvalidInput on the zero polynomial.
StrippedPoly strip_x_factor(const BigPoly& p);

/// sum_i p_i A^i, exactly (Horner over sparse products).
SparseIntMatrix evaluate_poly_at_matrix(const BigPoly& p, const SparseIntMatrix& a);

/// p(A) v, exactly.
std::vector<mpz_class> evaluate_poly_at_vector(const BigPoly& p, const SparseIntMatrix& a,
                                               const std::vector<mpz_class>& v);

/// Exact test of p(A) == 0 without forming p(A). Picks unit vectors whose
/// cyclic subspaces together span Q^dim (certified by full rank modulo a
/// prime, which implies full rank over Q) and checks p(A) e_j == 0 in exact
/// integer arithmetic for each of them.
bool annihilates(const BigPoly& p, const SparseIntMatrix& a);

/// Finds the first linear dependence among vectors fed one at a time, by
/// fraction-free elimination over the integers.
class DependenceFinder {
 public:
  explicit DependenceFinder(std::size_t length) : length_(length) {}

  /// Appends v_k. Returns the coefficients (c_0, ..., c_k) of the first
  /// dependence sum c_i v_i = 0 once one exists, as a primitive integer vector
  /// with positive last entry.
  std::optional<std::vector<mpz_class>> add(std::vector<mpz_class> v);

  std::size_t count() const { return count_; }

 private:
  struct Row {
    std::size_t pivot;
    std::vector<mpz_class> values;
    std::vector<mpz_class> combination;
  };

  std::size_t length_;
  std::size_t count_ = 0;
  std::vector<Row> rows_;
};

/// Convenience over DependenceFinder: the shortest prefix with a nontrivial
/// dependence, or nullopt when the whole list is independent.
std::optional<std::vector<mpz_class>> first_dependence(const std::vector<std::vector<mpz_class>>& vectors);

}  // namespace rsbf
