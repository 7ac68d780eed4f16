#include "rsbf/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "rsbf/errors.hpp"

namespace rsbf {

BigPoly::BigPoly(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

BigPoly::BigPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

BigPoly BigPoly::monomial(int degree) {
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = 1;
  return BigPoly(std::move(c));
}

void BigPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class BigPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

mpz_class BigPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigPoly operator*(const BigPoly& a, const BigPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return BigPoly(std::move(c));
}

std::string BigPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    if (!first && c > 0) out << '+';
    if (i == 0) {
      out << c.get_str();
    } else {
      if (c == -1) {
        out << '-';
      } else if (c != 1) {
        out << c.get_str();
      }
      out << 'x';
      if (i > 1) out << '^' << i;
    }
    first = false;
  }
  return out.str();
}

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const BigPoly& p) {
  QPoly q;
  for (const auto& c : p.coeffs()) q.emplace_back(c);
  return q;
}

QPoly remainder(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

BigPoly to_monic_integer(QPoly p) {
  const mpq_class lead = p.back();
  std::vector<mpz_class> out;
  for (auto& c : p) {
    c /= lead;
    if (c.get_den() != 1) throw std::logic_error("monic gcd has non-integer coefficients");
    out.push_back(c.get_num());
  }
  return BigPoly(std::move(out));
}

// Quotient of a by a monic divisor, which must divide exactly.
BigPoly divide_exact(const BigPoly& a, const BigPoly& monic_divisor) {
  std::vector<mpz_class> rem(a.coeffs().begin(), a.coeffs().end());
  const auto d = monic_divisor.coeffs();
  const std::size_t qlen = rem.size() - d.size() + 1;
  std::vector<mpz_class> q(qlen, 0);
  for (std::size_t k = qlen; k-- > 0;) {
    const mpz_class factor = rem[k + d.size() - 1];
    q[k] = factor;
    for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= factor * d[i];
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::logic_error("inexact polynomial division");
  }
  return BigPoly(std::move(q));
}

}  // namespace

BigPoly monic_gcd(const BigPoly& a, const BigPoly& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  QPoly x = to_q(a);
  QPoly y = to_q(b);
  while (!y.empty()) {
    QPoly r = remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return to_monic_integer(std::move(x));
}

BigPoly monic_lcm(const BigPoly& a, const BigPoly& b) {
  if (!a.is_monic() || !b.is_monic()) throw InvalidInput("lcm expects monic polynomials");
  return divide_exact(a * b, monic_gcd(a, b));
}

}  // namespace rsbf
