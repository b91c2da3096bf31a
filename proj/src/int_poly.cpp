#include "altknot/int_poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace altknot {

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPoly::IntPoly(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t power) {
  std::vector<mpz_class> v(power + 1);
  v[power] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x() { return monomial(1, 1); }

mpz_class IntPoly::coeff(long power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

mpz_class IntPoly::leading() const { return is_zero() ? mpz_class(0) : coeffs_.back(); }

bool IntPoly::is_monic() const { return !is_zero() && coeffs_.back() == 1; }

mpz_class IntPoly::evaluate(const mpz_class& at) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<mpz_class> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<mpz_class> v(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const mpz_class& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long p = degree(); p >= 0; --p) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(p)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (p == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'x';
    if (p > 1) out << '^' << p;
  }
  return out.str();
}

IntPoly pow(const IntPoly& base, unsigned exponent) {
  IntPoly result{1};
  IntPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

PolyDivision divide_by_unit_leading(const IntPoly& dividend, const IntPoly& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const mpz_class lead = divisor.leading();
  if (lead != 1 && lead != -1) throw std::invalid_argument("divisor leading coefficient must be +1 or -1");

  std::vector<mpz_class> rem = dividend.coeffs();
  const long dd = divisor.degree();
  const long nd = dividend.degree();
  if (nd < dd) return {IntPoly{}, dividend};

  std::vector<mpz_class> quot(static_cast<std::size_t>(nd - dd + 1));
  for (long i = nd - dd; i >= 0; --i) {
    mpz_class q = rem[static_cast<std::size_t>(i + dd)] * lead;  // lead is its own inverse
    quot[static_cast<std::size_t>(i)] = q;
    if (q == 0) continue;
    for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i + j)] -= q * divisor.coeffs()[static_cast<std::size_t>(j)];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

}  // namespace altknot
