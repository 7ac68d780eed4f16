#include "rsbf/truth_table.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "rsbf/errors.hpp"

namespace rsbf {

namespace {

constexpr int kMaxTableVars = 34;

std::size_t word_count(int n) { return n <= 6 ? 1 : std::size_t{1} << (n - 6); }

std::uint64_t tail_mask(int n) { return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1U << n)) - 1; }

void check_vars(int n) {
  if (n < 0 || n > kMaxTableVars) throw InvalidInput("truth table variable count out of range");
}

}  // namespace

TruthTable::TruthTable(int n) : n_(n) {
  check_vars(n);
  words_.assign(word_count(n), 0);
}

TruthTable TruthTable::ones(int n) {
  TruthTable t(n);
  std::fill(t.words_.begin(), t.words_.end(), ~std::uint64_t{0});
  t.words_.back() &= tail_mask(n);
  return t;
}

TruthTable TruthTable::from_string(std::string_view bits) {
  if (bits.empty() || !std::has_single_bit(bits.size())) {
    throw InvalidInput("truth table length must be a power of two");
  }
  TruthTable t(std::countr_zero(bits.size()));
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] != '0' && bits[j] != '1') throw InvalidInput("truth table digits must be 0 or 1");
    t.set(j, bits[j] == '1');
  }
  return t;
}

void TruthTable::set(std::uint64_t j, bool bit) {
  const std::uint64_t m = std::uint64_t{1} << (j & 63);
  if (bit) {
    words_[j >> 6] |= m;
  } else {
    words_[j >> 6] &= ~m;
  }
}

void TruthTable::fill_ones(std::uint64_t first, std::uint64_t count) {
  std::uint64_t j = first;
  const std::uint64_t end = first + count;
  while (j < end && (j & 63)) set(j++, true);
  while (j + 64 <= end) {
    words_[j >> 6] = ~std::uint64_t{0};
    j += 64;
  }
  while (j < end) set(j++, true);
}

std::uint64_t TruthTable::popcount() const {
  std::uint64_t total = 0;
  for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

TruthTable& TruthTable::operator^=(const TruthTable& other) {
  if (other.n_ != n_) throw InvalidInput("truth table size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

TruthTable TruthTable::operator~() const {
  TruthTable t = *this;
  for (auto& w : t.words_) w = ~w;
  t.words_.back() &= tail_mask(n_);
  return t;
}

TruthTable TruthTable::portion(int log2_parts, std::uint64_t index) const {
  if (log2_parts < 0 || log2_parts > n_) throw InvalidInput("portion count exceeds table size");
  const int m = n_ - log2_parts;
  TruthTable out(m);
  const std::uint64_t len = std::uint64_t{1} << m;
  const std::uint64_t base = index * len;
  if (m >= 6) {
    std::copy_n(words_.begin() + static_cast<std::ptrdiff_t>(base >> 6), len >> 6, out.words_.begin());
  } else {
    for (std::uint64_t j = 0; j < len; ++j) out.set(j, (*this)[base + j]);
  }
  return out;
}

TruthTable TruthTable::half(int which) const {
  if (n_ < 1) throw InvalidInput("cannot halve a 0-variable table");
  return portion(1, static_cast<std::uint64_t>(which));
}

TruthTable TruthTable::concat(const TruthTable& left, const TruthTable& right) {
  if (left.n_ != right.n_) throw InvalidInput("concatenated tables must have equal size");
  TruthTable out(left.n_ + 1);
  const std::uint64_t len = left.size();
  if (left.n_ >= 6) {
    std::copy(left.words_.begin(), left.words_.end(), out.words_.begin());
    std::copy(right.words_.begin(), right.words_.end(), out.words_.begin() + static_cast<std::ptrdiff_t>(left.words_.size()));
  } else {
    for (std::uint64_t j = 0; j < len; ++j) {
      out.set(j, left[j]);
      out.set(len + j, right[j]);
    }
  }
  return out;
}

std::string TruthTable::to_string() const {
  std::string s(size(), '0');
  for (std::uint64_t j = 0; j < size(); ++j) s[j] = (*this)[j] ? '1' : '0';
  return s;
}

bool eval_monomial_at(const MonomialPattern& pattern, int n, std::uint64_t j) {
  if (pattern.top() > n) throw InvalidInput("monomial index exceeds variable count");
  if (n < 64 && j >= (std::uint64_t{1} << n)) throw InvalidInput("row index out of range");
  for (int i : pattern.indices()) {
    if (((j >> (n - i)) & 1U) == 0) return false;
  }
  return true;
}

namespace {

struct RunWriter {
  TruthTable& table;
  std::span<const int> k;
  int n;
  std::uint64_t pos = 0;

  // Block_i = 0_{2^{n-k_i}} (Block_{i+1})_{2^{k_{i+1}-k_i-1}},
  // Block_last = 0_{2^{n-k_m}} 1_{2^{n-k_m}}.
  void block(std::size_t i) {
    const std::uint64_t zeros = std::uint64_t{1} << (n - k[i]);
    pos += zeros;
    if (i + 1 == k.size()) {
      table.fill_ones(pos, zeros);
      pos += zeros;
      return;
    }
    const std::uint64_t reps = std::uint64_t{1} << (k[i + 1] - k[i] - 1);
    for (std::uint64_t r = 0; r < reps; ++r) block(i + 1);
  }
};

}  // namespace

TruthTable nested_run_table(std::span<const int> indices, int n) {
  if (indices.empty()) return TruthTable::ones(n);
  if (indices.back() > n) throw InvalidInput("monomial index exceeds variable count");
  TruthTable t(n);
  RunWriter writer{t, indices, n};
  const std::uint64_t reps = std::uint64_t{1} << (indices.front() - 1);
  for (std::uint64_t r = 0; r < reps; ++r) writer.block(0);
  return t;
}

TruthTable monomial_truth_table(const MonomialPattern& pattern, int n) {
  return nested_run_table(pattern.indices(), n);
}

RotationOrbit rotation_orbit(const MonomialPattern& pattern, int n) {
  if (pattern.top() > n) throw InvalidInput("monomial index exceeds variable count");
  std::set<MonomialPattern> members;
  for (int c = 0; c < n; ++c) {
    std::vector<int> shifted;
    shifted.reserve(pattern.indices().size());
    for (int i : pattern.indices()) shifted.push_back((i - 1 + c) % n + 1);
    std::sort(shifted.begin(), shifted.end());
    members.emplace(std::move(shifted));
  }
  RotationOrbit orbit;
  orbit.members.assign(members.begin(), members.end());
  orbit.is_short = static_cast<int>(orbit.members.size()) < n;
  return orbit;
}

std::string_view to_string(Interpretation interpretation) {
  return interpretation == Interpretation::kFullSum ? "full-sum" : "orbit-distinct";
}

Interpretation parse_interpretation(std::string_view text) {
  if (text == "orbit-distinct") return Interpretation::kOrbitDistinct;
  if (text == "full-sum") return Interpretation::kFullSum;
  throw InvalidInput("unknown interpretation: " + std::string(text));
}

namespace {

std::uint64_t rotate_mask(std::uint64_t mask, int c, int n) {
  std::uint64_t out = 0;
  while (mask) {
    const int bit = std::countr_zero(mask);
    mask &= mask - 1;
    out |= std::uint64_t{1} << ((bit + c) % n);
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> function_monomials(const RSFunctionSpec& spec, int n, Interpretation interpretation) {
  if (n < spec.max_top()) throw InvalidInput("n is below the largest generator index");
  if (n > 64) throw InvalidInput("at most 64 variables are supported");
  std::map<std::uint64_t, int> parity;
  for (const auto& g : spec.generators()) {
    const std::uint64_t base = g.mask();
    std::map<std::uint64_t, int> copies;
    for (int c = 0; c < n; ++c) ++copies[rotate_mask(base, c, n)];
    for (const auto& [m, count] : copies) {
      const int contribution = interpretation == Interpretation::kFullSum ? count : 1;
      parity[m] ^= contribution & 1;
    }
  }
  std::vector<std::uint64_t> out;
  for (const auto& [m, p] : parity) {
    if (p) out.push_back(m);
  }
  return out;
}

TruthTable mrs_truth_table(const RSFunctionSpec& spec, int n, Interpretation interpretation) {
  TruthTable t(n);
  for (std::uint64_t m : function_monomials(spec, n, interpretation)) {
    std::vector<int> indices;
    for (std::uint64_t r = m; r; r &= r - 1) indices.push_back(std::countr_zero(r) + 1);
    t ^= nested_run_table(indices, n);
  }
  return t;
}

std::uint64_t rotate_row(std::uint64_t j, int n) {
  if (n <= 1) return j;
  const std::uint64_t full = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return ((j << 1) | (j >> (n - 1))) & full;
}

}  // namespace rsbf
