#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <gmpxx.h>

namespace rsbf {

/// Square integer matrix held as sorted (row, col, value) triples with a
/// row-compressed index for products. No entry is ever rounded.
class SparseIntMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    mpz_class value;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseIntMatrix() = default;
  /// Duplicate coordinates are summed; zero results are dropped.
  SparseIntMatrix(std::size_t dimension, std::vector<Entry> entries);

  static SparseIntMatrix identity(std::size_t dimension);
  static SparseIntMatrix from_dense(const std::vector<std::vector<long>>& rows);

  std::size_t dimension() const { return dim_; }
  std::size_t nonzeros() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  mpz_class at(std::size_t row, std::size_t col) const;

  /// Largest column sum of absolute values.
  mpz_class column_norm() const;

  /// y = A x.
  std::vector<mpz_class> multiply(const std::vector<mpz_class>& x) const;
  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b);
  SparseIntMatrix scaled(const mpz_class& factor) const;

  /// Entries reduced into [0, p) per row, for modular kernels.
  struct ModRow {
    std::size_t col;
    std::uint64_t value;
  };
  std::vector<std::vector<ModRow>> rows_mod(std::uint64_t p) const;

  /// "row col value" per line, sorted by (row, col).
  void write_triples(std::ostream& out) const;

  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  void index_rows();

  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::size_t> row_start_;
};

}  // namespace rsbf
