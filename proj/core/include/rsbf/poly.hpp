#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rsbf {

/// Dense univariate polynomial with unbounded integer coefficients, stored in
/// ascending degree. Trailing zeros are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class BigPoly {
 public:
  BigPoly() = default;
  explicit BigPoly(std::vector<mpz_class> ascending);
  BigPoly(std::initializer_list<long> ascending);

  static BigPoly monomial(int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const mpz_class& leading() const { return coeffs_.back(); }

  /// Coefficient of x^i; zero beyond the degree.
  mpz_class coeff(int i) const;
  std::span<const mpz_class> coeffs() const { return coeffs_; }

  mpz_class evaluate(const mpz_class& x) const;

  friend BigPoly operator*(const BigPoly& a, const BigPoly& b);

  /// Ascending-term rendering, e.g. "-8x^9+4x^10+x^15" or "-8+4x+x^6".
  std::string to_string() const;

  friend bool operator==(const BigPoly&, const BigPoly&) = default;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

/// Monic least common multiple of two monic integer polynomials, computed via
/// the Euclidean algorithm over the rationals. Both inputs must be monic.
BigPoly monic_lcm(const BigPoly& a, const BigPoly& b);

/// Monic greatest common divisor over the rationals (result is rescaled to be
/// monic; it has integer coefficients whenever both inputs are monic integer
/// polynomials).
BigPoly monic_gcd(const BigPoly& a, const BigPoly& b);

}  // namespace rsbf
