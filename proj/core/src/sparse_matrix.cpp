#include "rsbf/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <tuple>

#include "rsbf/errors.hpp"

namespace rsbf {

SparseIntMatrix::SparseIntMatrix(std::size_t dimension, std::vector<Entry> entries) : dim_(dimension) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
  for (auto& e : entries) {
    if (e.row >= dim_ || e.col >= dim_) throw InvalidInput("matrix entry outside the dimension");
    if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col) {
      entries_.back().value += e.value;
      if (entries_.back().value == 0) entries_.pop_back();
    } else if (e.value != 0) {
      entries_.push_back(std::move(e));
    }
  }
  index_rows();
}

void SparseIntMatrix::index_rows() {
  row_start_.assign(dim_ + 1, 0);
  for (const auto& e : entries_) ++row_start_[e.row + 1];
  for (std::size_t r = 0; r < dim_; ++r) row_start_[r + 1] += row_start_[r];
}

SparseIntMatrix SparseIntMatrix::identity(std::size_t dimension) {
  std::vector<Entry> e;
  e.reserve(dimension);
  for (std::size_t i = 0; i < dimension; ++i) e.push_back({i, i, 1});
  return SparseIntMatrix(dimension, std::move(e));
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long>>& rows) {
  std::vector<Entry> e;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw InvalidInput("matrix must be square");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] != 0) e.push_back({r, c, rows[r][c]});
    }
  }
  return SparseIntMatrix(rows.size(), std::move(e));
}

mpz_class SparseIntMatrix::at(std::size_t row, std::size_t col) const {
  for (std::size_t k = row_start_[row]; k < row_start_[row + 1]; ++k) {
    if (entries_[k].col == col) return entries_[k].value;
  }
  return 0;
}

mpz_class SparseIntMatrix::column_norm() const {
  std::vector<mpz_class> sums(dim_, 0);
  for (const auto& e : entries_) sums[e.col] += abs(e.value);
  mpz_class best = 0;
  for (const auto& s : sums) best = std::max(best, s);
  return best;
}

std::vector<mpz_class> SparseIntMatrix::multiply(const std::vector<mpz_class>& x) const {
  if (x.size() != dim_) throw InvalidInput("vector length does not match the matrix");
  std::vector<mpz_class> y(dim_, 0);
  for (std::size_t r = 0; r < dim_; ++r) {
    mpz_class& acc = y[r];
    for (std::size_t k = row_start_[r]; k < row_start_[r + 1]; ++k) {
      const Entry& e = entries_[k];
      if (x[e.col] != 0) acc += e.value * x[e.col];
    }
  }
  return y;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.dim_ != b.dim_) throw InvalidInput("matrix dimensions differ");
  std::vector<SparseIntMatrix::Entry> out;
  std::map<std::size_t, mpz_class> row;
  for (std::size_t r = 0; r < a.dim_; ++r) {
    row.clear();
    for (std::size_t k = a.row_start_[r]; k < a.row_start_[r + 1]; ++k) {
      const auto& ea = a.entries_[k];
      for (std::size_t m = b.row_start_[ea.col]; m < b.row_start_[ea.col + 1]; ++m) {
        const auto& eb = b.entries_[m];
        row[eb.col] += ea.value * eb.value;
      }
    }
    for (auto& [c, v] : row) {
      if (v != 0) out.push_back({r, c, std::move(v)});
    }
  }
  return SparseIntMatrix(a.dim_, std::move(out));
}

SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.dim_ != b.dim_) throw InvalidInput("matrix dimensions differ");
  std::vector<SparseIntMatrix::Entry> all = a.entries_;
  all.insert(all.end(), b.entries_.begin(), b.entries_.end());
  return SparseIntMatrix(a.dim_, std::move(all));
}

SparseIntMatrix SparseIntMatrix::scaled(const mpz_class& factor) const {
  std::vector<Entry> e = entries_;
  for (auto& x : e) x.value *= factor;
  return SparseIntMatrix(dim_, std::move(e));
}

std::vector<std::vector<SparseIntMatrix::ModRow>> SparseIntMatrix::rows_mod(std::uint64_t p) const {
  std::vector<std::vector<ModRow>> rows(dim_);
  const mpz_class modulus(static_cast<unsigned long>(p));
  for (const auto& e : entries_) {
    mpz_class r = e.value % modulus;
    if (r < 0) r += modulus;
    if (r != 0) rows[e.row].push_back({e.col, r.get_ui()});
  }
  return rows;
}

void SparseIntMatrix::write_triples(std::ostream& out) const {
  for (const auto& e : entries_) out << e.row << ' ' << e.col << ' ' << e.value.get_str() << '\n';
}

}  // namespace rsbf
