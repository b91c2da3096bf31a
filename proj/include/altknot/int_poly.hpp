#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace altknot {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending order of power. The representation is
/// kept canonical: the highest stored coefficient is never zero, and the zero
/// polynomial has no coefficients at all.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> ascending);
  explicit IntPoly(std::vector<mpz_class> ascending);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, std::size_t power);
  static IntPoly x();

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^power; zero for any power outside [0, degree].
  mpz_class coeff(long power) const;
  mpz_class leading() const;
  bool is_monic() const;

  mpz_class evaluate(const mpz_class& at) const;
  /// Multiplies by x^k.
  IntPoly shifted(std::size_t k) const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const mpz_class& scalar);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend IntPoly operator*(IntPoly lhs, const mpz_class& s) { return lhs *= s; }
  friend IntPoly operator*(const mpz_class& s, IntPoly rhs) { return rhs *= s; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Descending powers with explicit signs, e.g. `x^4 - 2*x^2 - 4*x`.
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

IntPoly pow(const IntPoly& base, unsigned exponent);

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};

/// Long division by a divisor whose leading coefficient is +1 or -1, so the
/// quotient stays integral.
PolyDivision divide_by_unit_leading(const IntPoly& dividend, const IntPoly& divisor);

}  // namespace altknot
