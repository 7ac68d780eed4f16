#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the library beyond its plain data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Bits = std::vector<int>;
using IndexSet = std::vector<int>;  // sorted 1-based variable indices

// Row j lists (x_1, ..., x_n) most significant bit first.
inline int var_at(std::uint64_t row, int n, int i) { return static_cast<int>((row >> (n - i)) & 1U); }

inline int eval_product(const IndexSet& vars, int n, std::uint64_t row) {
  for (int i : vars) {
    if (!var_at(row, n, i)) return 0;
  }
  return 1;
}

inline Bits table_of(const IndexSet& vars, int n) {
  Bits out(std::size_t{1} << n);
  for (std::uint64_t j = 0; j < out.size(); ++j) out[j] = eval_product(vars, n, j);
  return out;
}

inline IndexSet shifted(const IndexSet& vars, int n, int k) {
  IndexSet out;
  for (int i : vars) out.push_back((i - 1 + k) % n + 1);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<IndexSet> orbit_of(const IndexSet& vars, int n) {
  std::set<IndexSet> out;
  for (int k = 0; k < n; ++k) out.insert(shifted(vars, n, k));
  return out;
}

// Monomials of f_n with odd multiplicity. full_sum: each generator contributes
// all n shifted copies; otherwise each distinct orbit member once.
inline std::vector<IndexSet> function_terms(const std::vector<IndexSet>& gens, int n, bool full_sum) {
  std::map<IndexSet, int> count;
  for (const auto& g : gens) {
    if (full_sum) {
      for (int k = 0; k < n; ++k) ++count[shifted(g, n, k)];
    } else {
      for (const auto& m : orbit_of(g, n)) ++count[m];
    }
  }
  std::vector<IndexSet> out;
  for (const auto& [m, c] : count) {
    if (c % 2) out.push_back(m);
  }
  return out;
}

inline std::uint64_t brute_weight(const std::vector<IndexSet>& gens, int n, bool full_sum) {
  const auto terms = function_terms(gens, n, full_sum);
  std::uint64_t w = 0;
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
    int v = 0;
    for (const auto& t : terms) v ^= eval_product(t, n, j);
    w += static_cast<std::uint64_t>(v);
  }
  return w;
}

// mu action of level v straight from its definition: cut the n-variable table of
// the pattern into 2^(c-v+1) portions, keep the last, repeat each entry 2^(c-v) times.
inline Bits mu_definition(const IndexSet& pattern, int v, int n) {
  const int c = pattern.back();
  const Bits full = table_of(pattern, n);
  const std::size_t parts = std::size_t{1} << (c - v + 1);
  const std::size_t len = full.size() / parts;
  const std::size_t stretch = std::size_t{1} << (c - v);
  Bits out;
  for (std::size_t i = full.size() - len; i < full.size(); ++i) {
    for (std::size_t r = 0; r < stretch; ++r) out.push_back(full[i]);
  }
  return out;
}

// Break levels of a pattern (1, c_2, ..., c_d): c_d - c_t + 2 for t = 2..d.
inline std::set<int> breaks_of(const IndexSet& pattern) {
  std::set<int> out;
  for (std::size_t t = 1; t < pattern.size(); ++t) out.insert(pattern.back() - pattern[t] + 2);
  return out;
}

// First rational dependence among vectors, returned as integers with positive
// last entry, by plain Gaussian elimination over Q.
inline std::optional<std::vector<mpz_class>> naive_dependence(const std::vector<std::vector<mpz_class>>& vecs) {
  const std::size_t len = vecs.empty() ? 0 : vecs.front().size();
  for (std::size_t k = 1; k <= vecs.size(); ++k) {
    // Solve sum_{i<k} a_i vecs[i] = -vecs[k-1] style: find null vector of the k columns.
    std::vector<std::vector<mpq_class>> m(len, std::vector<mpq_class>(k));
    for (std::size_t r = 0; r < len; ++r) {
      for (std::size_t c = 0; c < k; ++c) m[r][c] = vecs[c][r];
    }
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < k && row < len; ++c) {
      std::size_t p = row;
      while (p < len && m[p][c] == 0) ++p;
      if (p == len) continue;
      std::swap(m[p], m[row]);
      for (std::size_t r = 0; r < len; ++r) {
        if (r == row || m[r][c] == 0) continue;
        const mpq_class f = m[r][c] / m[row][c];
        for (std::size_t cc = c; cc < k; ++cc) m[r][cc] -= f * m[row][cc];
      }
      pivot_col.push_back(static_cast<int>(c));
      ++row;
    }
    if (pivot_col.size() == k) continue;
    // The free column is the last one, since the first k-1 were independent.
    std::vector<mpq_class> sol(k);
    sol[k - 1] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
      sol[static_cast<std::size_t>(pivot_col[r])] = -m[r][k - 1] / m[r][static_cast<std::size_t>(pivot_col[r])];
    }
    mpz_class den = 1;
    for (const auto& q : sol) den = lcm(den, mpz_class(q.get_den()));
    std::vector<mpz_class> out;
    mpz_class g = 0;
    for (const auto& q : sol) {
      mpq_class s = q * den;
      out.push_back(s.get_num());
      g = gcd(g, out.back());
    }
    for (auto& x : out) x /= g;
    if (out.back() < 0) {
      for (auto& x : out) x = -x;
    }
    return out;
  }
  return std::nullopt;
}

// Minimal polynomial of a dense integer matrix (ascending coefficients), from
// the first dependence among I, A, A^2, ... flattened.
inline std::vector<mpz_class> naive_minpoly(const std::vector<std::vector<mpz_class>>& a) {
  const std::size_t d = a.size();
  std::vector<std::vector<mpz_class>> power(d, std::vector<mpz_class>(d));
  for (std::size_t i = 0; i < d; ++i) power[i][i] = 1;
  std::vector<std::vector<mpz_class>> flat;
  for (std::size_t k = 0; k <= d; ++k) {
    std::vector<mpz_class> f;
    for (const auto& r : power) f.insert(f.end(), r.begin(), r.end());
    flat.push_back(f);
    if (auto dep = naive_dependence(flat)) return *dep;
    std::vector<std::vector<mpz_class>> next(d, std::vector<mpz_class>(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t l = 0; l < d; ++l) {
        if (power[i][l] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) next[i][j] += power[i][l] * a[l][j];
      }
    }
    power = std::move(next);
  }
  return {};
}

inline std::vector<IndexSet> random_patterns(std::mt19937_64& rng, int max_top, int count) {
  std::vector<IndexSet> out;
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> tops(2, max_top);
  for (int i = 0; i < count; ++i) {
    const int top = tops(rng);
    IndexSet p{1};
    for (int k = 2; k < top; ++k) {
      if (coin(rng)) p.push_back(k);
    }
    p.push_back(top);
    out.push_back(p);
  }
  return out;
}

// Every pattern beginning with 1 whose top index is at most max_top.
inline std::vector<IndexSet> all_patterns(int max_top, int max_degree = 64) {
  std::vector<IndexSet> out{{1}};
  for (int top = 2; top <= max_top; ++top) {
    for (std::uint32_t mid = 0; mid < (1U << (top - 2)); ++mid) {
      IndexSet p{1};
      for (int k = 2; k < top; ++k) {
        if ((mid >> (k - 2)) & 1U) p.push_back(k);
      }
      p.push_back(top);
      if (static_cast<int>(p.size()) <= max_degree) out.push_back(p);
    }
  }
  return out;
}

}  // namespace oracle
