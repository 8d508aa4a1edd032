#pragma once

// Exact integer linear algebra: Smith normal form with unimodular
// transforms, relation matrices of presentations, abelianization structure.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cycpres/intpoly.hpp"
#include "cycpres/present.hpp"
#include "cycpres/words.hpp"

namespace cycpres {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols)
      : rows_(rows),
        cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              0) {
    if (rows < 0 || cols < 0)
      throw std::invalid_argument("IntMatrix: negative dimension");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& at(int r, int c) {
    return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(c)];
  }
  const mpz_class& at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(c)];
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dim mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const mpz_class& a = at(i, k);
        if (a == 0) continue;
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
      }
    return r;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<mpz_class> data_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
inline mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

struct SmithForm {
  IntMatrix d;  // diagonal
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix v;  // cols x cols, unimodular
  std::vector<mpz_class> invariant_factors;  // d_1 | d_2 | ... (>= 0)
};

namespace detail {

inline mpz_class abs_z(const mpz_class& x) { return x < 0 ? mpz_class(-x) : x; }

}  // namespace detail

// Exact SNF via elementary row/column operations with transform
// accumulation.  Pivot rule: smallest nonzero absolute value, ties broken
// row-major.  Postcondition U * M * V = D is re-verified before returning.
inline SmithForm smith_normal_form(const IntMatrix& m) {
  int rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < rows; ++c) std::swap(u.at(i, c), u.at(j, c));
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < cols; ++r) std::swap(v.at(r, i), v.at(r, j));
  };
  auto add_row = [&](int dst, int src, const mpz_class& f) {
    for (int c = 0; c < cols; ++c) a.at(dst, c) += f * a.at(src, c);
    for (int c = 0; c < rows; ++c) u.at(dst, c) += f * u.at(src, c);
  };
  auto add_col = [&](int dst, int src, const mpz_class& f) {
    for (int r = 0; r < rows; ++r) a.at(r, dst) += f * a.at(r, src);
    for (int r = 0; r < cols; ++r) v.at(r, dst) += f * v.at(r, src);
  };
  auto negate_row = [&](int i) {
    for (int c = 0; c < cols; ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < rows; ++c) u.at(i, c) = -u.at(i, c);
  };

  int k = 0;
  int limit = std::min(rows, cols);
  while (k < limit) {
    // Pivot: smallest nonzero |entry| in the trailing block, row-major ties.
    int pr = -1, pc = -1;
    mpz_class best;
    for (int i = k; i < rows; ++i)
      for (int j = k; j < cols; ++j) {
        if (a.at(i, j) == 0) continue;
        mpz_class mag = detail::abs_z(a.at(i, j));
        if (pr < 0 || mag < best) {
          best = mag;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;  // trailing block is zero
    swap_rows(k, pr);
    swap_cols(k, pc);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = k + 1; i < rows; ++i) {
        if (a.at(i, k) == 0) continue;
        mpz_class q = a.at(i, k) / a.at(k, k);  // truncated division
        add_row(i, k, -q);
        if (a.at(i, k) != 0) {
          // Remainder smaller than pivot: swap it up and restart.
          swap_rows(k, i);
          clean = false;
        }
      }
      for (int j = k + 1; j < cols; ++j) {
        if (a.at(k, j) == 0) continue;
        mpz_class q = a.at(k, j) / a.at(k, k);
        add_col(j, k, -q);
        if (a.at(k, j) != 0) {
          swap_cols(k, j);
          clean = false;
        }
      }
    }
    if (a.at(k, k) < 0) negate_row(k);
    ++k;
  }

  // Enforce the divisibility chain d_i | d_{i+1}.
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i + 1 < k; ++i) {
      if (a.at(i + 1, i + 1) % a.at(i, i) == 0) continue;
      // Fold d_{i+1} into row i, then rediagonalize the 2x2 block.
      add_row(i, i + 1, 1);
      mpz_class g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
                 a.at(i, i).get_mpz_t(), a.at(i, i + 1).get_mpz_t());
      // Column transform sending (d_i, d_{i+1}) to (g, 0) on row i.
      mpz_class di = a.at(i, i) / g, dj = a.at(i, i + 1) / g;
      // col_i' = x*col_i + y*col_{i+1}; col_{i+1}' = -dj*col_i + di*col_{i+1}
      for (int r = 0; r < rows; ++r) {
        mpz_class ci = a.at(r, i), cj = a.at(r, i + 1);
        a.at(r, i) = x * ci + y * cj;
        a.at(r, i + 1) = -dj * ci + di * cj;
      }
      for (int r = 0; r < cols; ++r) {
        mpz_class ci = v.at(r, i), cj = v.at(r, i + 1);
        v.at(r, i) = x * ci + y * cj;
        v.at(r, i + 1) = -dj * ci + di * cj;
      }
      // Row i+1 still has its old d_{i+1} in column i+1's spot; clear the
      // off-diagonal residue with row operations.
      mpz_class q = a.at(i + 1, i) / a.at(i, i);
      add_row(i + 1, i, -q);
      if (a.at(i + 1, i) != 0)
        throw std::logic_error("smith_normal_form: chain repair failed");
      if (a.at(i, i) < 0) negate_row(i);
      if (a.at(i + 1, i + 1) < 0) negate_row(i + 1);
      changed = true;
    }
  }

  SmithForm s;
  s.d = IntMatrix(rows, cols);
  for (int i = 0; i < limit; ++i) s.d.at(i, i) = a.at(i, i);
  s.u = u;
  s.v = v;
  for (int i = 0; i < limit; ++i) s.invariant_factors.push_back(a.at(i, i));

  // Exact re-verification of the transform identity and unimodularity.
  if (s.u * m * s.v != s.d)
    throw std::logic_error("smith_normal_form: U*M*V != D");
  mpz_class du = determinant(s.u), dv = determinant(s.v);
  if ((du != 1 && du != -1) || (dv != 1 && dv != -1))
    throw std::logic_error("smith_normal_form: transforms not unimodular");
  for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
    const mpz_class& a0 = s.invariant_factors[i];
    const mpz_class& a1 = s.invariant_factors[i + 1];
    if (a0 == 0 && a1 != 0)
      throw std::logic_error("smith_normal_form: zero before nonzero");
    if (a0 != 0 && a1 % a0 != 0)
      throw std::logic_error("smith_normal_form: divisibility chain broken");
  }
  return s;
}

// Relators x generators exponent-sum matrix.
inline IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(static_cast<int>(p.relators.size()), p.num_generators);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    auto sums = abelianize_word(p.relators[r]);
    for (int c = 0; c < p.num_generators; ++c)
      m.at(static_cast<int>(r), c) =
          mpz_class(static_cast<long>(sums[static_cast<std::size_t>(c)]));
  }
  return m;
}

struct AbelianGroupStructure {
  int free_rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1, divisibility order

  friend bool operator==(const AbelianGroupStructure&,
                         const AbelianGroupStructure&) = default;
};

inline AbelianGroupStructure cokernel_structure(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  AbelianGroupStructure g;
  int rank = 0;
  for (const auto& f : s.invariant_factors) {
    if (f == 0) continue;
    ++rank;
    if (f > 1) g.torsion.push_back(f);
  }
  g.free_rank = m.cols() - rank;
  return g;
}

inline AbelianGroupStructure abelianization(const Presentation& p) {
  return cokernel_structure(relation_matrix(p));
}

// n x n circulant whose row i is the coefficient vector of t^i * f modulo
// t^n - 1; this is the relation matrix of G_n(v) when f = f_v.
inline IntMatrix circulant(const IntPolynomial& f, int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= f.degree(); ++j)
      m.at(i, (i + j) % n) += f.coeff(j);
  return m;
}

}  // namespace cycpres
