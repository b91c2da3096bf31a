#pragma once

#include <string>
#include <vector>

#include "altknot/diagram.hpp"
#include "altknot/int_poly.hpp"
#include "altknot/spectra.hpp"

namespace altknot {

/// det(xI - m), computed with the division-free Berkowitz recursion.
/// Works for any square integer matrix of dimension 1..64.
IntPoly charpoly(const AdjMatrix& m);

/// Power sums of the roots, s_1..s_k_max, recovered from a monic polynomial
/// through Newton's identities. For a characteristic polynomial these are
/// the traces of the matrix powers.
std::vector<mpz_class> power_sums(const IntPoly& monic, int k_max);

/// J_k(x) = U_k(x/2): J_{-1} = 0, J_0 = 1, J_{k+2} = x J_{k+1} - J_k.
IntPoly jpoly(int k);
/// J_k from the explicit binomial sum sum_j (-1)^j C(k-j, j) x^{k-2j}.
IntPoly jpoly_explicit(int k);

/// J_k^2 - x J_k J_{k-1} + J_{k-1}^2 == 1.
bool check_quadratic_identity(int k);

/// Inverts 1 - t x + t^2 as a power series in t with polynomial
/// coefficients and compares the coefficient of t^k with J_k for k <= k_max.
bool check_generating_function(int k_max);

struct QuotientCheck {
  IntPoly quotient;
  bool exact = false;
};

/// Synthetic division by a monic (or -1 leading) linear factor.
QuotientCheck divide_out(const IntPoly& p, const IntPoly& root_factor);

struct CoefficientRule {
  std::string name;
  long power = 0;
  mpz_class expected;
  mpz_class actual;
  bool applies = true;
  bool pass = true;
};

struct CoefficientReport {
  std::vector<CoefficientRule> rules;
  bool all_pass() const;
};

/// a_{V-1} = -loops always; when loops == 0 also a_{V-2} = -C_2 and
/// a_{V-3} = -C_3. Rules that do not apply are listed with applies = false.
CoefficientReport coefficient_report(const IntPoly& p, const FaceCensus& census, int loops);

}  // namespace altknot
