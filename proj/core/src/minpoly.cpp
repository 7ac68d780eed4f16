#include "rsbf/minpoly.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "rsbf/errors.hpp"
#include "rsbf/modular.hpp"

namespace rsbf {

std::string_view to_string(MinpolyMethod method) {
  switch (method) {
    case MinpolyMethod::kAuto:
      return "auto";
    case MinpolyMethod::kDenseDependence:
      return "dense";
    case MinpolyMethod::kVectorLcm:
      return "vector-lcm";
    case MinpolyMethod::kModular:
      return "modular";
  }
  return "auto";
}

MinpolyMethod parse_minpoly_method(std::string_view text) {
  if (text == "auto") return MinpolyMethod::kAuto;
  if (text == "dense" || text == "dense-dependence") return MinpolyMethod::kDenseDependence;
  if (text == "vector-lcm") return MinpolyMethod::kVectorLcm;
  if (text == "modular") return MinpolyMethod::kModular;
  throw InvalidInput("unknown minimal polynomial method: " + std::string(text));
}

MinpolyMethod resolve_method(MinpolyMethod method, std::size_t dimension) {
  if (method != MinpolyMethod::kAuto) return method;
  if (dimension <= 64) return MinpolyMethod::kDenseDependence;
  if (dimension <= 128) return MinpolyMethod::kVectorLcm;
  return MinpolyMethod::kModular;
}

std::optional<std::vector<mpz_class>> DependenceFinder::add(std::vector<mpz_class> v) {
  if (v.size() != length_) throw InvalidInput("dependence vectors must have equal length");
  const std::size_t k = count_++;
  std::vector<mpz_class> comb(k + 1, 0);
  comb[k] = 1;

  mpz_class g, a, b;
  for (const Row& row : rows_) {
    if (v[row.pivot] == 0) continue;
    g = gcd(row.values[row.pivot], v[row.pivot]);
    a = row.values[row.pivot] / g;
    b = v[row.pivot] / g;
    for (std::size_t i = 0; i < length_; ++i) {
      if (a != 1) v[i] *= a;
      if (row.values[i] != 0) v[i] -= b * row.values[i];
    }
    for (std::size_t i = 0; i <= k; ++i) {
      if (a != 1) comb[i] *= a;
      if (i < row.combination.size() && row.combination[i] != 0) comb[i] -= b * row.combination[i];
    }
  }

  std::size_t pivot = 0;
  while (pivot < length_ && v[pivot] == 0) ++pivot;

  mpz_class content = 0;
  if (pivot == length_) {
    for (const auto& c : comb) content = gcd(content, c);
    for (auto& c : comb) c /= content;
    if (comb.back() < 0) {
      for (auto& c : comb) c = -c;
    }
    return comb;
  }

  for (const auto& x : v) content = gcd(content, x);
  for (const auto& c : comb) content = gcd(content, c);
  if (content > 1) {
    for (auto& x : v) x /= content;
    for (auto& c : comb) c /= content;
  }
  rows_.push_back({pivot, std::move(v), std::move(comb)});
  return std::nullopt;
}

std::optional<std::vector<mpz_class>> first_dependence(const std::vector<std::vector<mpz_class>>& vectors) {
  if (vectors.empty()) return std::nullopt;
  DependenceFinder finder(vectors.front().size());
  for (const auto& v : vectors) {
    if (auto dep = finder.add(v)) return dep;
  }
  return std::nullopt;
}

StrippedPoly strip_x_factor(const BigPoly& p) {
  if (p.is_zero()) throw InvalidInput("cannot strip powers of x from the zero polynomial");
  int low = 0;
  while (p.coeff(low) == 0) ++low;
  if (low == p.degree() && low > 0) {
    return {BigPoly(std::vector<mpz_class>{0, p.leading()}), low - 1};
  }
  std::vector<mpz_class> rest(p.coeffs().begin() + low, p.coeffs().end());
  return {BigPoly(std::move(rest)), low};
}

SparseIntMatrix evaluate_poly_at_matrix(const BigPoly& p, const SparseIntMatrix& a) {
  const std::size_t dim = a.dimension();
  if (p.is_zero()) return SparseIntMatrix(dim, {});
  const SparseIntMatrix id = SparseIntMatrix::identity(dim);
  SparseIntMatrix acc = id.scaled(p.leading());
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc = acc * a;
    if (p.coeff(k) != 0) acc = acc + id.scaled(p.coeff(k));
  }
  return acc;
}

std::vector<mpz_class> evaluate_poly_at_vector(const BigPoly& p, const SparseIntMatrix& a,
                                               const std::vector<mpz_class>& v) {
  std::vector<mpz_class> acc(v.size(), 0);
  if (p.is_zero()) return acc;
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] = p.leading() * v[i];
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc = a.multiply(acc);
    const mpz_class c = p.coeff(k);
    if (c != 0) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) acc[i] += c * v[i];
      }
    }
  }
  return acc;
}

namespace {

// Unit vectors e_j whose cyclic subspaces span the whole space. Chosen
// greedily modulo a prime; full rank there implies full rank over Q.
std::vector<std::size_t> cyclic_cover(const SparseIntMatrix& a) {
  const std::size_t dim = a.dimension();
  const std::uint64_t p = modular::large_prime(0);
  const auto rows = a.rows_mod(p);
  modular::EchelonBasis basis(dim, p);
  std::vector<std::size_t> starts;
  for (std::size_t j = 0; j < dim && basis.rank() < dim; ++j) {
    std::vector<std::uint64_t> u(dim, 0);
    u[j] = 1;
    if (basis.contains(u)) continue;
    starts.push_back(j);
    while (basis.insert(u)) {
      std::vector<std::uint64_t> next(dim, 0);
      for (std::size_t r = 0; r < dim; ++r) {
        unsigned __int128 acc = 0;
        for (const auto& e : rows[r]) acc = (acc + static_cast<unsigned __int128>(e.value) * u[e.col]) % p;
        next[r] = static_cast<std::uint64_t>(acc);
      }
      u = std::move(next);
    }
  }
  if (basis.rank() != dim) throw std::logic_error("cyclic cover failed to reach full rank");
  return starts;
}

bool annihilates_cover(const BigPoly& p, const SparseIntMatrix& a, const std::vector<std::size_t>& starts) {
  for (std::size_t j : starts) {
    std::vector<mpz_class> e(a.dimension(), 0);
    e[j] = 1;
    for (const auto& x : evaluate_poly_at_vector(p, a, e)) {
      if (x != 0) return false;
    }
  }
  return true;
}

BigPoly from_dependence(std::vector<mpz_class> dep) {
  BigPoly p(std::move(dep));
  if (!p.is_monic()) throw std::logic_error("minimal polynomial dependence is not monic");
  return p;
}

std::vector<mpz_class> flatten(const std::vector<std::vector<mpz_class>>& m) {
  std::vector<mpz_class> out;
  out.reserve(m.size() * m.size());
  for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
  return out;
}

BigPoly dense_dependence(const SparseIntMatrix& a) {
  const std::size_t dim = a.dimension();
  // Columns of A^k, advanced by one sparse product per column.
  std::vector<std::vector<mpz_class>> columns(dim, std::vector<mpz_class>(dim, 0));
  for (std::size_t j = 0; j < dim; ++j) columns[j][j] = 1;
  DependenceFinder finder(dim * dim);
  for (std::size_t k = 0; k <= dim; ++k) {
    if (auto dep = finder.add(flatten(columns))) return from_dependence(std::move(*dep));
    for (auto& c : columns) c = a.multiply(c);
  }
  throw std::logic_error("no dependence among dim + 1 matrix powers");
}

BigPoly vector_lcm(const SparseIntMatrix& a, std::uint64_t seed, const std::vector<std::size_t>& cover) {
  const std::size_t dim = a.dimension();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-9, 9);
  BigPoly result = BigPoly::monomial(0);
  const std::size_t max_vectors = dim + 8;
  for (std::size_t attempt = 0; attempt < max_vectors; ++attempt) {
    std::vector<mpz_class> u(dim);
    for (auto& x : u) x = entry(rng);
    DependenceFinder finder(dim);
    std::optional<std::vector<mpz_class>> dep;
    while (!(dep = finder.add(u))) u = a.multiply(u);
    result = monic_lcm(result, from_dependence(std::move(*dep)));
    if (annihilates_cover(result, a, cover)) return result;
  }
  throw std::logic_error("vector-lcm did not converge");
}

BigPoly modular_minpoly(const SparseIntMatrix& a, std::uint64_t seed, const std::vector<std::size_t>& cover) {
  const std::size_t dim = a.dimension();
  std::mt19937_64 rng(seed);
  modular::CrtAccumulator crt;
  std::vector<mpz_class> previous;
  std::size_t best_degree = 0;
  constexpr std::size_t kMaxPrimes = 400;
  for (std::size_t i = 0; i < kMaxPrimes; ++i) {
    const std::uint64_t p = modular::large_prime(i);
    const auto rows = a.rows_mod(p);
    modular::ModPoly local{1};
    for (int trial = 0; trial < 2; ++trial) {
      std::vector<std::uint64_t> start(dim);
      for (auto& x : start) x = rng() % p;
      local = modular::lcm(local, modular::vector_minpoly(rows, start, p), p);
    }
    const std::size_t degree = local.size() - 1;
    if (degree < best_degree) continue;  // unlucky prime or start vectors
    if (degree > best_degree) {
      best_degree = degree;
      crt = modular::CrtAccumulator{};
      previous.clear();
    }
    crt.add(local, p);
    if (crt.values() == previous) {
      BigPoly candidate(crt.values());
      if (candidate.is_monic() && annihilates_cover(candidate, a, cover)) return candidate;
    }
    previous = crt.values();
  }
  throw std::logic_error("modular minimal polynomial did not converge");
}

}  // namespace

bool annihilates(const BigPoly& p, const SparseIntMatrix& a) {
  if (a.dimension() == 0) return true;
  return annihilates_cover(p, a, cyclic_cover(a));
}

BigPoly minimal_polynomial(const SparseIntMatrix& a, const MinpolyOptions& options) {
  if (a.dimension() == 0) return BigPoly::monomial(0);
  const MinpolyMethod method = resolve_method(options.method, a.dimension());
  const auto cover = cyclic_cover(a);
  BigPoly result;
  switch (method) {
    case MinpolyMethod::kDenseDependence:
      result = dense_dependence(a);
      break;
    case MinpolyMethod::kVectorLcm:
      result = vector_lcm(a, options.seed, cover);
      break;
    case MinpolyMethod::kModular:
    case MinpolyMethod::kAuto:
      result = modular_minpoly(a, options.seed, cover);
      break;
  }
  if (!annihilates_cover(result, a, cover)) throw std::logic_error("minimal polynomial failed exact verification");
  return result;
}

}  // namespace rsbf
