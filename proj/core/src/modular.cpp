#include "rsbf/modular.hpp"

#include <mutex>
#include <stdexcept>

namespace rsbf::modular {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("zero has no inverse");
  return pow_mod(a, p - 2, p);
}

std::uint64_t to_mod(const mpz_class& value, std::uint64_t p) {
  const mpz_class modulus(static_cast<unsigned long>(p));
  mpz_class r = value % modulus;
  if (r < 0) r += modulus;
  return r.get_ui();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t large_prime(std::size_t i) {
  static std::mutex mutex;
  static std::vector<std::uint64_t> primes;
  std::lock_guard lock(mutex);
  std::uint64_t candidate = primes.empty() ? (std::uint64_t{1} << 62) - 1 : primes.back() - 2;
  while (primes.size() <= i) {
    if (is_prime(candidate)) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[i];
}

namespace {

std::vector<std::uint64_t> multiply(const std::vector<std::vector<SparseIntMatrix::ModRow>>& rows,
                                    const std::vector<std::uint64_t>& x, std::uint64_t p) {
  std::vector<std::uint64_t> y(rows.size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    // Products are below 2^124, so eight of them fit before reducing.
    unsigned __int128 acc = 0;
    int pending = 0;
    for (const auto& e : rows[r]) {
      acc += static_cast<unsigned __int128>(e.value) * x[e.col];
      if (++pending == 7) {
        acc %= p;
        pending = 0;
      }
    }
    y[r] = static_cast<std::uint64_t>(acc % p);
  }
  return y;
}

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly make_monic(ModPoly a, std::uint64_t p) {
  trim(a);
  const std::uint64_t inv = inv_mod(a.back(), p);
  for (auto& c : a) c = mul_mod(c, inv, p);
  return a;
}

ModPoly rem(ModPoly a, const ModPoly& b, std::uint64_t p) {
  const std::uint64_t inv = inv_mod(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    const std::uint64_t f = mul_mod(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub_mod(a[shift + i], mul_mod(f, b[i], p), p);
    a.pop_back();
    trim(a);
  }
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

ModPoly mul(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = add_mod(c[i + j], mul_mod(a[i], b[j], p), p);
  }
  return c;
}

ModPoly quotient(ModPoly a, const ModPoly& monic, std::uint64_t p) {
  ModPoly q(a.size() - monic.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t f = a[k + monic.size() - 1];
    q[k] = f;
    for (std::size_t i = 0; i < monic.size(); ++i) a[k + i] = sub_mod(a[k + i], mul_mod(f, monic[i], p), p);
  }
  return q;
}

}  // namespace

ModPoly vector_minpoly(const std::vector<std::vector<SparseIntMatrix::ModRow>>& rows,
                       const std::vector<std::uint64_t>& start, std::uint64_t p) {
  struct Row {
    std::size_t pivot;
    std::vector<std::uint64_t> values;
    ModPoly combination;
  };
  std::vector<Row> basis;
  std::vector<std::uint64_t> u = start;
  for (std::size_t k = 0;; ++k) {
    std::vector<std::uint64_t> r = u;
    ModPoly comb(k + 1, 0);
    comb[k] = 1;
    for (const auto& row : basis) {
      const std::uint64_t f = r[row.pivot];
      if (f == 0) continue;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (row.values[i]) r[i] = sub_mod(r[i], mul_mod(f, row.values[i], p), p);
      }
      for (std::size_t i = 0; i < row.combination.size(); ++i) {
        comb[i] = sub_mod(comb[i], mul_mod(f, row.combination[i], p), p);
      }
    }
    std::size_t pivot = 0;
    while (pivot < r.size() && r[pivot] == 0) ++pivot;
    if (pivot == r.size()) return comb;
    const std::uint64_t inv = inv_mod(r[pivot], p);
    for (auto& x : r) x = mul_mod(x, inv, p);
    for (auto& x : comb) x = mul_mod(x, inv, p);
    basis.push_back({pivot, std::move(r), std::move(comb)});
    u = multiply(rows, u, p);
  }
}

ModPoly lcm(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  const ModPoly g = gcd(a, b, p);
  return make_monic(quotient(mul(a, b, p), g, p), p);
}

void EchelonBasis::reduce(std::vector<std::uint64_t>& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint64_t f = v[pivots_[k]];
    if (f == 0) continue;
    const auto& row = rows_[k];
    for (std::size_t i = 0; i < dim_; ++i) {
      if (row[i]) v[i] = sub_mod(v[i], mul_mod(f, row[i], p_), p_);
    }
  }
}

bool EchelonBasis::insert(std::vector<std::uint64_t> v) {
  if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
  reduce(v);
  std::size_t pivot = 0;
  while (pivot < dim_ && v[pivot] == 0) ++pivot;
  if (pivot == dim_) return false;
  const std::uint64_t inv = inv_mod(v[pivot], p_);
  for (auto& x : v) x = mul_mod(x, inv, p_);
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool EchelonBasis::contains(std::vector<std::uint64_t> v) const {
  reduce(v);
  for (auto x : v) {
    if (x) return false;
  }
  return true;
}

void CrtAccumulator::add(const std::vector<std::uint64_t>& residues, std::uint64_t p) {
  const mpz_class prime(static_cast<unsigned long>(p));
  if (empty()) {
    values_.clear();
    for (auto r : residues) {
      mpz_class v(static_cast<unsigned long>(r));
      if (2 * v > prime) v -= prime;
      values_.push_back(v);
    }
    modulus_ = prime;
    return;
  }
  if (residues.size() != values_.size()) throw std::invalid_argument("residue vector length changed");
  const std::uint64_t inv = inv_mod(to_mod(modulus_, p), p);
  const mpz_class next = modulus_ * prime;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const std::uint64_t t = mul_mod(sub_mod(residues[i], to_mod(values_[i], p), p), inv, p);
    mpz_class x = values_[i] + modulus_ * mpz_class(static_cast<unsigned long>(t));
    x %= next;
    if (x < 0) x += next;
    if (2 * x > next) x -= next;
    values_[i] = x;
  }
  modulus_ = next;
}

}  // namespace rsbf::modular
