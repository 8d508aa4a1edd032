#pragma once

// Exact integer polynomial arithmetic: associated polynomials of cyclic
// word families, cyclotomic-type classification, resultants against t^n - 1.

#include <gmpxx.h>

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycpres/present.hpp"
#include "cycpres/words.hpp"

namespace cycpres {

// Coefficients with constant term first; no trailing zeros (zero = empty).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs)
      : coeffs_(std::move(coeffs)) {
    trim();
  }

  static IntPolynomial constant(const mpz_class& c) {
    return IntPolynomial({c});
  }
  // t^k
  static IntPolynomial monomial(int k, const mpz_class& c = 1) {
    std::vector<mpz_class> v(static_cast<std::size_t>(k) + 1, 0);
    v.back() = c;
    return IntPolynomial(std::move(v));
  }
  // t^n - 1
  static IntPolynomial cyclic(int n) {
    std::vector<mpz_class> v(static_cast<std::size_t>(n) + 1, 0);
    v[0] = -1;
    v.back() = 1;
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  mpz_class coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size())
               ? coeffs_[static_cast<std::size_t>(i)]
               : mpz_class(0);
  }
  mpz_class leading() const {
    return coeffs_.empty() ? mpz_class(0) : coeffs_.back();
  }
  // Lowest index with nonzero coefficient (-1 for the zero polynomial).
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
  }

  IntPolynomial operator+(const IntPolynomial& o) const {
    std::vector<mpz_class> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return IntPolynomial(std::move(v));
  }
  IntPolynomial operator-() const {
    std::vector<mpz_class> v = coeffs_;
    for (auto& c : v) c = -c;
    return IntPolynomial(std::move(v));
  }
  IntPolynomial operator-(const IntPolynomial& o) const {
    return *this + (-o);
  }
  IntPolynomial operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpz_class> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        v[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(v));
  }

  // Exact division over Z; returns false if the remainder is nonzero or a
  // coefficient division fails.
  bool divide_exact(const IntPolynomial& divisor, IntPolynomial* quotient)
      const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero");
    std::vector<mpz_class> rem = coeffs_;
    int dd = divisor.degree();
    mpz_class lead = divisor.leading();
    std::vector<mpz_class> q;
    if (static_cast<int>(rem.size()) - 1 < dd) {
      if (valuation() >= 0) return false;
      *quotient = IntPolynomial{};
      return true;
    }
    q.assign(rem.size() - static_cast<std::size_t>(dd), 0);
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
      mpz_class c = rem[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) return false;
      mpz_class f = c / lead;
      q[static_cast<std::size_t>(i - dd)] = f;
      for (int j = 0; j <= dd; ++j)
        rem[static_cast<std::size_t>(i - dd + j)] -= f * divisor.coeff(j);
    }
    for (const auto& c : rem)
      if (c != 0) return false;
    *quotient = IntPolynomial(std::move(q));
    return true;
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<mpz_class> coeffs_;
};

// f_v: coefficient a_i = exponent sum of x_i in v.
inline IntPolynomial associated_polynomial(const CyclicWordFamily& family) {
  auto sums = abelianize_word(family.v);
  std::vector<mpz_class> coeffs;
  coeffs.reserve(sums.size());
  for (auto s : sums) coeffs.emplace_back(static_cast<long>(s));
  return IntPolynomial(std::move(coeffs));
}

namespace detail {

inline std::vector<int> proper_divisors(int m) {
  std::vector<int> d;
  for (int k = 1; k < m; ++k)
    if (m % k == 0) d.push_back(k);
  return d;
}

inline int euler_phi(int m) {
  int result = m, n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace detail

// The m-th cyclotomic polynomial, by iterated exact division of t^m - 1.
inline IntPolynomial cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m < 1");
  static std::map<int, IntPolynomial> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  IntPolynomial f = IntPolynomial::cyclic(m);
  for (int k : detail::proper_divisors(m)) {
    IntPolynomial q;
    if (!f.divide_exact(cyclotomic_polynomial(k), &q))
      throw std::logic_error("cyclotomic division failed");
    f = q;
  }
  cache[m] = f;
  return f;
}

enum class CyclotomicKind { zero, unit_monomial, cyclotomic_type, other };

struct CyclotomicClassification {
  CyclotomicKind kind = CyclotomicKind::other;
  int shift = 0;          // power of t stripped off
  int sign = 1;           // overall sign of the stripped part
  std::vector<std::pair<int, int>> factors;  // (m, multiplicity), ascending m

  // Multiplies sign * t^shift * prod Phi_m^mult back together.
  IntPolynomial reconstruct() const {
    IntPolynomial f = IntPolynomial::monomial(shift, sign);
    for (auto [m, mult] : factors)
      for (int i = 0; i < mult; ++i) f = f * cyclotomic_polynomial(m);
    return f;
  }
};

namespace detail {

// Recursive factor search over cyclotomics with phi(m) <= deg(f); greedy by
// ascending m with backtracking.  Factorization over Z is unique, so the
// first complete chain found is the factorization.
inline bool cyclotomic_factor_search(const IntPolynomial& f, int min_m,
                                     int m_bound,
                                     std::vector<int>* factors) {
  if (f.degree() == 0) {
    mpz_class c = f.coeff(0);
    return c == 1 || c == -1;
  }
  for (int m = min_m; m <= m_bound; ++m) {
    if (euler_phi(m) > f.degree()) continue;
    IntPolynomial q;
    if (f.divide_exact(cyclotomic_polynomial(m), &q)) {
      factors->push_back(m);
      if (cyclotomic_factor_search(q, m, m_bound, factors)) return true;
      factors->pop_back();
    }
  }
  return false;
}

}  // namespace detail

inline CyclotomicClassification classify_cyclotomic_type(
    const IntPolynomial& f) {
  CyclotomicClassification c;
  if (f.is_zero()) {
    c.kind = CyclotomicKind::zero;
    return c;
  }
  c.shift = f.valuation();
  std::vector<mpz_class> stripped(
      f.coefficients().begin() + c.shift, f.coefficients().end());
  IntPolynomial g{std::move(stripped)};
  if (g.degree() == 0) {
    mpz_class u = g.coeff(0);
    if (u == 1 || u == -1) {
      c.kind = CyclotomicKind::unit_monomial;
      c.sign = u == 1 ? 1 : -1;
      return c;
    }
    c.kind = CyclotomicKind::other;
    return c;
  }
  c.sign = g.leading() > 0 ? 1 : -1;
  if (c.sign < 0) g = -g;
  // Exhaustive at desk-scale degrees: every m with Phi_m possibly dividing g
  // satisfies phi(m) <= deg(g), and m <= 3 deg^2 covers all such m.
  int bound = 3 * g.degree() * g.degree() + 2;
  std::vector<int> factors;
  if (!detail::cyclotomic_factor_search(g, 1, bound, &factors)) {
    c.kind = CyclotomicKind::other;
    c.shift = 0;
    c.sign = 1;
    return c;
  }
  c.kind = CyclotomicKind::cyclotomic_type;
  for (int m : factors) {
    if (!c.factors.empty() && c.factors.back().first == m)
      ++c.factors.back().second;
    else
      c.factors.emplace_back(m, 1);
  }
  // The residual unit after dividing out all factors folds into the sign.
  IntPolynomial check = c.reconstruct();
  if (check != f) {
    c.sign = -c.sign;
    check = c.reconstruct();
  }
  if (check != f) throw std::logic_error("cyclotomic reconstruction failed");
  return c;
}

// Res(f, t^n - 1) via the Sylvester matrix with fraction-free (Bareiss)
// elimination; equals the n x n circulant determinant of f up to sign.
inline mpz_class resultant_with_cyclic(const IntPolynomial& f, int n) {
  if (n < 1) throw std::invalid_argument("resultant_with_cyclic: n < 1");
  if (f.is_zero()) return 0;
  IntPolynomial g = IntPolynomial::cyclic(n);
  int df = f.degree(), dg = g.degree();
  if (df == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), f.coeff(0).get_mpz_t(),
               static_cast<unsigned long>(dg));
    return r;
  }
  int size = df + dg;
  std::vector<std::vector<mpz_class>> m(
      static_cast<std::size_t>(size),
      std::vector<mpz_class>(static_cast<std::size_t>(size), 0));
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j <= df; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] =
          f.coeff(df - j);
  for (int i = 0; i < df; ++i)
    for (int j = 0; j <= dg; ++j)
      m[static_cast<std::size_t>(dg + i)][static_cast<std::size_t>(i + j)] =
          g.coeff(dg - j);

  // Bareiss elimination; determinant lands in m[size-1][size-1].
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < size; ++k) {
    auto K = static_cast<std::size_t>(k);
    if (m[K][K] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < size; ++i)
        if (m[static_cast<std::size_t>(i)][K] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[K], m[static_cast<std::size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      auto I = static_cast<std::size_t>(i);
      for (int j = k + 1; j < size; ++j) {
        auto J = static_cast<std::size_t>(j);
        m[I][J] = (m[I][J] * m[K][K] - m[I][K] * m[K][J]) / prev;
      }
      m[I][K] = 0;
    }
    prev = m[K][K];
  }
  return sign * m[static_cast<std::size_t>(size - 1)]
                 [static_cast<std::size_t>(size - 1)];
}

}  // namespace cycpres
