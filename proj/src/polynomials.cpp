#include "altknot/polynomials.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace altknot {

IntPoly charpoly(const AdjMatrix& m) {
  const int n = m.size();
  if (n == 0) throw std::invalid_argument("characteristic polynomial of a 0x0 matrix");
  if (n > 64) throw std::invalid_argument("matrix dimension exceeds 64");

  // Berkowitz: peel the leading row and column off the trailing principal
  // submatrices, from the bottom-right 1x1 block up to the full matrix.
  // `desc` holds det(xI - A_i) in descending powers for the current block.
  std::vector<mpz_class> desc{1, -m(n - 1, n - 1)};
  for (int i = n - 2; i >= 0; --i) {
    const int size = n - 1 - i;  // dimension of the trailing block
    // Toeplitz column: 1, -a, -R C, -R A C, ..., -R A^{size-1} C
    std::vector<mpz_class> toeplitz(static_cast<std::size_t>(size) + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -m(i, i);
    std::vector<mpz_class> v(static_cast<std::size_t>(size));
    for (int r = 0; r < size; ++r) v[static_cast<std::size_t>(r)] = m(i + 1 + r, i);
    std::vector<mpz_class> w(v.size());
    for (int k = 0; k < size; ++k) {
      if (k > 0) {
        for (int r = 0; r < size; ++r) {
          mpz_class acc = 0;
          for (int c = 0; c < size; ++c) {
            const int a = m(i + 1 + r, i + 1 + c);
            if (a != 0) acc += v[static_cast<std::size_t>(c)] * a;
          }
          w[static_cast<std::size_t>(r)] = std::move(acc);
        }
        v.swap(w);
      }
      mpz_class dot = 0;
      for (int c = 0; c < size; ++c) {
        const int a = m(i, i + 1 + c);
        if (a != 0) dot += v[static_cast<std::size_t>(c)] * a;
      }
      toeplitz[static_cast<std::size_t>(k) + 2] = -dot;
    }
    std::vector<mpz_class> next(static_cast<std::size_t>(size) + 2);
    for (std::size_t r = 0; r < next.size(); ++r) {
      mpz_class acc = 0;
      for (std::size_t c = 0; c <= std::min(r, desc.size() - 1); ++c) acc += toeplitz[r - c] * desc[c];
      next[r] = std::move(acc);
    }
    desc.swap(next);
  }
  std::reverse(desc.begin(), desc.end());
  return IntPoly(std::move(desc));
}

std::vector<mpz_class> power_sums(const IntPoly& monic, int k_max) {
  if (!monic.is_monic()) throw std::invalid_argument("Newton identities need a monic polynomial");
  const long n = monic.degree();
  auto c = [&](long i) { return i > n ? mpz_class(0) : monic.coeff(n - i); };
  std::vector<mpz_class> s(static_cast<std::size_t>(k_max) + 1);
  for (long k = 1; k <= k_max; ++k) {
    mpz_class acc = -k * c(k);
    for (long i = 1; i < k; ++i) acc -= c(i) * s[static_cast<std::size_t>(k - i)];
    s[static_cast<std::size_t>(k)] = std::move(acc);
  }
  s.erase(s.begin());
  return s;
}

IntPoly jpoly(int k) {
  if (k < -1) throw std::invalid_argument("J_k is defined here for k >= -1");
  static std::mutex lock;
  static std::vector<IntPoly> cache{IntPoly{}, IntPoly{1}};  // J_{-1}, J_0
  std::lock_guard guard(lock);
  while (static_cast<int>(cache.size()) <= k + 1) {
    const std::size_t top = cache.size();
    cache.push_back(cache[top - 1].shifted(1) - cache[top - 2]);
  }
  return cache[static_cast<std::size_t>(k) + 1];
}

IntPoly jpoly_explicit(int k) {
  if (k < 0) return IntPoly{};
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(k) + 1);
  for (int j = 0; 2 * j <= k; ++j) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k - j), static_cast<unsigned long>(j));
    coeffs[static_cast<std::size_t>(k - 2 * j)] = (j % 2 == 0) ? binom : mpz_class(-binom);
  }
  return IntPoly(std::move(coeffs));
}

bool check_quadratic_identity(int k) {
  if (k < 1) throw std::invalid_argument("quadratic identity is stated for k >= 1");
  const IntPoly a = jpoly(k);
  const IntPoly b = jpoly(k - 1);
  return a * a - IntPoly::x() * a * b + b * b == IntPoly{1};
}

bool check_generating_function(int k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
  // a(t) = 1 - x t + t^2, b = 1/a with b_0 = 1 and
  // b_k = -(a_1 b_{k-1} + a_2 b_{k-2}).
  const std::vector<IntPoly> a{IntPoly{1}, -IntPoly::x(), IntPoly{1}};
  std::vector<IntPoly> b{IntPoly{1}};
  for (int k = 1; k <= k_max; ++k) {
    IntPoly acc;
    for (int i = 1; i <= std::min(k, 2); ++i) acc -= a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k - i)];
    b.push_back(std::move(acc));
  }
  for (int k = 0; k <= k_max; ++k)
    if (!(b[static_cast<std::size_t>(k)] == jpoly(k))) return false;
  return true;
}

QuotientCheck divide_out(const IntPoly& p, const IntPoly& root_factor) {
  if (root_factor.degree() != 1) throw std::invalid_argument("divide_out expects a degree-1 factor");
  auto [q, r] = divide_by_unit_leading(p, root_factor);
  return {std::move(q), r.is_zero()};
}

bool CoefficientReport::all_pass() const {
  return std::all_of(rules.begin(), rules.end(), [](const CoefficientRule& r) { return !r.applies || r.pass; });
}

CoefficientReport coefficient_report(const IntPoly& p, const FaceCensus& census, int loops) {
  const long V = p.degree();
  CoefficientReport report;
  auto add = [&](std::string name, long power, mpz_class expected, bool applies) {
    CoefficientRule rule{std::move(name), power, std::move(expected), p.coeff(power), applies, true};
    rule.pass = rule.actual == rule.expected;
    report.rules.push_back(std::move(rule));
  };
  add("a_{V-1} = -loops", V - 1, -loops, true);
  add("a_{V-2} = -C_2", V - 2, -census.count(2), loops == 0);
  add("a_{V-3} = -C_3", V - 3, -census.count(3), loops == 0);
  return report;
}

}  // namespace altknot
