#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "rsbf/sparse_matrix.hpp"

namespace rsbf::modular {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
std::uint64_t to_mod(const mpz_class& value, std::uint64_t p);

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

/// The i-th prime below 2^62, descending (0 -> largest).
std::uint64_t large_prime(std::size_t i);

using ModPoly = std::vector<std::uint64_t>;  // ascending, monic when produced below

/// Minimal polynomial of `start` relative to A over GF(p): the monic q of
/// least degree with q(A) start = 0.
ModPoly vector_minpoly(const std::vector<std::vector<SparseIntMatrix::ModRow>>& rows,
                       const std::vector<std::uint64_t>& start, std::uint64_t p);

ModPoly lcm(const ModPoly& a, const ModPoly& b, std::uint64_t p);

/// Incrementally maintained row-echelon basis of a subspace of GF(p)^dim.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t dim, std::uint64_t p) : dim_(dim), p_(p) {}

  std::size_t rank() const { return rows_.size(); }
  /// Reduces v against the basis; inserts and returns true if it was independent.
  bool insert(std::vector<std::uint64_t> v);
  bool contains(std::vector<std::uint64_t> v) const;

 private:
  void reduce(std::vector<std::uint64_t>& v) const;

  std::size_t dim_;
  std::uint64_t p_;
  std::vector<std::vector<std::uint64_t>> rows_;  // pivot normalised to 1
  std::vector<std::size_t> pivots_;
};

/// Incremental Chinese remaindering of integer vectors into the symmetric range.
class CrtAccumulator {
 public:
  /// Adds residues modulo p; all calls must use the same vector length.
  void add(const std::vector<std::uint64_t>& residues, std::uint64_t p);
  const std::vector<mpz_class>& values() const { return values_; }
  const mpz_class& modulus() const { return modulus_; }
  bool empty() const { return modulus_ == 1; }

 private:
  std::vector<mpz_class> values_;  // in (-M/2, M/2]
  mpz_class modulus_ = 1;
};

}  // namespace rsbf::modular
