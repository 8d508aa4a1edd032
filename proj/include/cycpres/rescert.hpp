#pragma once

// Residual-finiteness machinery for ascending HNN extensions of free groups:
// finite-index subgroups as coset tables, pullback orbits under an
// endomorphism, the abelianized determinant test, truncated Magnus
// expansions mod p, and auditable certificates.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycpres/abelian.hpp"
#include "cycpres/words.hpp"

namespace cycpres {

// Finite-index subgroup of F_r given by the permutation action of the free
// generators on its cosets; coset 0 is the subgroup itself.  Canonical form
// is the breadth-first relabeling from the basepoint with fixed generator
// order, so two subgroups are equal iff their canonical tables are equal.
struct FiniteIndexSubgroup {
  int rank = 0;
  int index = 0;
  std::vector<std::vector<int>> tables;  // tables[g][coset] = coset * x_g

  void validate() const {
    if (rank < 1 || index < 1)
      throw std::invalid_argument("FiniteIndexSubgroup: bad dimensions");
    if (static_cast<int>(tables.size()) != rank)
      throw std::invalid_argument("FiniteIndexSubgroup: table count != rank");
    for (const auto& t : tables) {
      if (static_cast<int>(t.size()) != index)
        throw std::invalid_argument("FiniteIndexSubgroup: table size != index");
      std::vector<bool> seen(static_cast<std::size_t>(index), false);
      for (int x : t) {
        if (x < 0 || x >= index || seen[static_cast<std::size_t>(x)])
          throw std::invalid_argument("FiniteIndexSubgroup: not a bijection");
        seen[static_cast<std::size_t>(x)] = true;
      }
    }
    if (!is_transitive())
      throw std::invalid_argument("FiniteIndexSubgroup: not transitive");
  }

  std::vector<int> inverse_table(int g) const {
    std::vector<int> inv(static_cast<std::size_t>(index));
    for (int i = 0; i < index; ++i)
      inv[static_cast<std::size_t>(
          tables[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)])] = i;
    return inv;
  }

  bool is_transitive() const {
    std::vector<bool> seen(static_cast<std::size_t>(index), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    std::vector<std::vector<int>> invs;
    for (int g = 0; g < rank; ++g) invs.push_back(inverse_table(g));
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int g = 0; g < rank; ++g) {
        for (int d : {tables[static_cast<std::size_t>(g)]
                          [static_cast<std::size_t>(c)],
                      invs[static_cast<std::size_t>(g)]
                          [static_cast<std::size_t>(c)]}) {
          if (!seen[static_cast<std::size_t>(d)]) {
            seen[static_cast<std::size_t>(d)] = true;
            ++count;
            stack.push_back(d);
          }
        }
      }
    }
    return count == index;
  }

  // Coset reached from c by the word w.
  int act(int c, const Word& w) const {
    if (w.rank() > rank)
      throw std::invalid_argument("FiniteIndexSubgroup: word rank too large");
    for (const auto& s : w.runs()) {
      const auto& fwd = tables[static_cast<std::size_t>(s.gen)];
      if (s.exp > 0) {
        for (std::int64_t i = 0; i < s.exp; ++i)
          c = fwd[static_cast<std::size_t>(c)];
      } else {
        auto inv = inverse_table(s.gen);
        for (std::int64_t i = 0; i < -s.exp; ++i)
          c = inv[static_cast<std::size_t>(c)];
      }
    }
    return c;
  }

  bool contains(const Word& w) const { return act(0, w) == 0; }

  // Breadth-first relabeling from the basepoint with generator order
  // x_0, x_0^-1, x_1, x_1^-1, ...
  FiniteIndexSubgroup canonical() const {
    std::vector<int> relabel(static_cast<std::size_t>(index), -1);
    std::vector<int> order;
    relabel[0] = 0;
    order.push_back(0);
    std::vector<std::vector<int>> invs;
    for (int g = 0; g < rank; ++g) invs.push_back(inverse_table(g));
    for (std::size_t head = 0; head < order.size(); ++head) {
      int c = order[head];
      for (int g = 0; g < rank; ++g) {
        for (int d : {tables[static_cast<std::size_t>(g)]
                          [static_cast<std::size_t>(c)],
                      invs[static_cast<std::size_t>(g)]
                          [static_cast<std::size_t>(c)]}) {
          if (relabel[static_cast<std::size_t>(d)] < 0) {
            relabel[static_cast<std::size_t>(d)] =
                static_cast<int>(order.size());
            order.push_back(d);
          }
        }
      }
    }
    FiniteIndexSubgroup out;
    out.rank = rank;
    out.index = index;
    out.tables.assign(static_cast<std::size_t>(rank),
                      std::vector<int>(static_cast<std::size_t>(index)));
    for (int g = 0; g < rank; ++g)
      for (int c = 0; c < index; ++c)
        out.tables[static_cast<std::size_t>(g)]
                  [static_cast<std::size_t>(relabel[static_cast<std::size_t>(c)])] =
            relabel[static_cast<std::size_t>(
                tables[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)])];
    return out;
  }

  friend bool operator==(const FiniteIndexSubgroup&,
                         const FiniteIndexSubgroup&) = default;
  friend auto operator<=>(const FiniteIndexSubgroup& a,
                          const FiniteIndexSubgroup& b) {
    if (auto c = a.rank <=> b.rank; c != 0) return c;
    if (auto c = a.index <=> b.index; c != 0) return c;
    return a.tables <=> b.tables;
  }

  // The whole group as an index-1 subgroup.
  static FiniteIndexSubgroup whole(int rank) {
    FiniteIndexSubgroup h;
    h.rank = rank;
    h.index = 1;
    h.tables.assign(static_cast<std::size_t>(rank), {0});
    return h;
  }

  // Kernel of the functional x_g -> values[g] into C_m (requires the values
  // to generate C_m so the table is transitive).
  static FiniteIndexSubgroup functional_kernel(int rank,
                                               const std::vector<int>& values,
                                               int m) {
    FiniteIndexSubgroup h;
    h.rank = rank;
    h.index = m;
    for (int g = 0; g < rank; ++g) {
      std::vector<int> t(static_cast<std::size_t>(m));
      for (int c = 0; c < m; ++c)
        t[static_cast<std::size_t>(c)] =
            ((c + values[static_cast<std::size_t>(g)]) % m + m) % m;
      h.tables.push_back(std::move(t));
    }
    h.validate();
    return h;
  }
};

// theta^{-1}(H): the stabilizer of the basepoint under g -> action of
// theta(g), realized as the transitive constituent of the basepoint orbit.
inline FiniteIndexSubgroup preimage_subgroup(const Endomorphism& theta,
                                             const FiniteIndexSubgroup& h) {
  if (theta.rank != h.rank)
    throw std::invalid_argument("preimage_subgroup: rank mismatch");
  int m = h.index;
  // Composed action of each generator.
  std::vector<std::vector<int>> composed;
  for (int g = 0; g < h.rank; ++g) {
    std::vector<int> t(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c)
      t[static_cast<std::size_t>(c)] =
          h.act(c, theta.images[static_cast<std::size_t>(g)]);
    composed.push_back(std::move(t));
  }
  // Orbit of the basepoint (images of theta are injective words, so each
  // composed table is a bijection on cosets; invert by lookup).
  std::vector<std::vector<int>> inv;
  for (int g = 0; g < h.rank; ++g) {
    std::vector<int> t(static_cast<std::size_t>(m), -1);
    for (int c = 0; c < m; ++c)
      t[static_cast<std::size_t>(
          composed[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)])] = c;
    inv.push_back(std::move(t));
  }
  std::vector<int> orbit_label(static_cast<std::size_t>(m), -1);
  std::vector<int> orbit;
  orbit_label[0] = 0;
  orbit.push_back(0);
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    int c = orbit[head];
    for (int g = 0; g < h.rank; ++g) {
      for (int d : {composed[static_cast<std::size_t>(g)]
                        [static_cast<std::size_t>(c)],
                    inv[static_cast<std::size_t>(g)]
                        [static_cast<std::size_t>(c)]}) {
        if (orbit_label[static_cast<std::size_t>(d)] < 0) {
          orbit_label[static_cast<std::size_t>(d)] =
              static_cast<int>(orbit.size());
          orbit.push_back(d);
        }
      }
    }
  }
  FiniteIndexSubgroup out;
  out.rank = h.rank;
  out.index = static_cast<int>(orbit.size());
  out.tables.assign(static_cast<std::size_t>(h.rank),
                    std::vector<int>(orbit.size()));
  for (int g = 0; g < h.rank; ++g)
    for (std::size_t i = 0; i < orbit.size(); ++i)
      out.tables[static_cast<std::size_t>(g)][i] =
          orbit_label[static_cast<std::size_t>(
              composed[static_cast<std::size_t>(g)]
                      [static_cast<std::size_t>(orbit[i])])];
  out.validate();
  return out.canonical();
}

// True iff the composed coset action is transitive on all of H's cosets,
// equivalently [F : theta^{-1}(H)] = [F : H].
inline bool composed_action_transitive(const Endomorphism& theta,
                                       const FiniteIndexSubgroup& h) {
  FiniteIndexSubgroup probe;
  probe.rank = h.rank;
  probe.index = h.index;
  for (int g = 0; g < h.rank; ++g) {
    std::vector<int> t(static_cast<std::size_t>(h.index));
    for (int c = 0; c < h.index; ++c)
      t[static_cast<std::size_t>(c)] =
          h.act(c, theta.images[static_cast<std::size_t>(g)]);
    probe.tables.push_back(std::move(t));
  }
  return probe.is_transitive();
}

struct PullbackOrbit {
  int preperiod = 0;  // k
  int period = 0;     // l
  std::vector<FiniteIndexSubgroup> chain;  // canonical tables, chain[0] = H
};

// Iterates H, theta^{-1}(H), theta^{-2}(H), ... until the first repeat.
inline PullbackOrbit pullback_orbit(const Endomorphism& theta,
                                    const FiniteIndexSubgroup& h,
                                    int table_bound = 10'000) {
  PullbackOrbit orbit;
  std::map<FiniteIndexSubgroup, int> seen;
  FiniteIndexSubgroup current = h.canonical();
  for (int step = 0; step <= table_bound; ++step) {
    auto it = seen.find(current);
    if (it != seen.end()) {
      orbit.preperiod = it->second;
      orbit.period = step - it->second;
      return orbit;
    }
    seen[current] = step;
    orbit.chain.push_back(current);
    current = preimage_subgroup(theta, current);
  }
  throw std::runtime_error("pullback_orbit: table bound exceeded");
}

// Prop-6.1-style check: the minimal l > 0 with theta^{-l}(H) = H, if any.
inline std::optional<int> prop61_check(const Endomorphism& theta,
                                       const FiniteIndexSubgroup& h,
                                       int table_bound = 10'000) {
  PullbackOrbit orbit = pullback_orbit(theta, h, table_bound);
  if (orbit.preperiod != 0) return std::nullopt;
  return orbit.period;
}

// All subgroups of F_rank with index <= max_index, as canonical coset
// tables, deduplicated, sorted.
inline std::vector<FiniteIndexSubgroup> all_subgroups_up_to_index(
    int rank, int max_index) {
  std::vector<FiniteIndexSubgroup> out;
  for (int m = 1; m <= max_index; ++m) {
    // All permutations of m points.
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<std::size_t> choice(static_cast<std::size_t>(rank), 0);
    std::vector<FiniteIndexSubgroup> found;
    while (true) {
      FiniteIndexSubgroup h;
      h.rank = rank;
      h.index = m;
      for (int g = 0; g < rank; ++g)
        h.tables.push_back(perms[choice[static_cast<std::size_t>(g)]]);
      if (h.is_transitive()) found.push_back(h.canonical());
      // Odometer over the rank-tuple of permutations.
      int g = rank - 1;
      while (g >= 0 && ++choice[static_cast<std::size_t>(g)] == perms.size()) {
        choice[static_cast<std::size_t>(g)] = 0;
        --g;
      }
      if (g < 0) break;
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

// --- abelianized endomorphism and prime selection --------------------------

// Column i = exponent-sum vector of theta(x_i).
inline IntMatrix abelianized_matrix(const Endomorphism& theta) {
  IntMatrix m(theta.rank, theta.rank);
  for (int i = 0; i < theta.rank; ++i) {
    auto col = abelianize_word(theta.images[static_cast<std::size_t>(i)]);
    for (int j = 0; j < theta.rank; ++j)
      m.at(j, i) = mpz_class(static_cast<long>(col[static_cast<std::size_t>(j)]));
  }
  return m;
}

// Determinant of the mod-p reduction by Gaussian elimination over F_p.
inline int det_mod_p(const IntMatrix& m, int p) {
  int n = m.rows();
  std::vector<std::vector<int>> a(
      static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mpz_class r = m.at(i, j) % p;
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          ((static_cast<int>(r.get_si()) % p) + p) % p;
    }
  auto inv_mod = [p](int x) {
    for (int i = 1; i < p; ++i)
      if (i * x % p == 1) return i;
    throw std::logic_error("det_mod_p: not invertible");
  };
  int det = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != k) {
      std::swap(a[static_cast<std::size_t>(pivot)],
                a[static_cast<std::size_t>(k)]);
      det = (p - det) % p;
    }
    int pv = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    det = det * pv % p;
    int pinv = inv_mod(pv);
    for (int i = k + 1; i < n; ++i) {
      int f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
              pinv % p;
      if (f == 0) continue;
      for (int j = k; j < n; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            ((a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
              f * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) %
                 p +
             p) %
            p;
    }
  }
  return det;
}

// Kernel basis of the mod-p reduction (vectors over F_p).
inline std::vector<std::vector<int>> kernel_mod_p(const IntMatrix& m, int p) {
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<int>> a(
      static_cast<std::size_t>(rows),
      std::vector<int>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      mpz_class r = m.at(i, j) % p;
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          ((static_cast<int>(r.get_si()) % p) + p) % p;
    }
  auto inv_mod = [p](int x) {
    for (int i = 1; i < p; ++i)
      if (i * x % p == 1) return i;
    throw std::logic_error("kernel_mod_p: not invertible");
  };
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[static_cast<std::size_t>(pr)], a[static_cast<std::size_t>(r)]);
    int pinv = inv_mod(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    for (int j = 0; j < cols; ++j)
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
          a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] * pinv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      int f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            ((a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
              f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) %
                 p +
             p) %
            p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<int>> kernel;
  for (int c = 0; c < cols; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end())
      continue;
    std::vector<int> v(static_cast<std::size_t>(cols), 0);
    v[static_cast<std::size_t>(c)] = 1;
    for (int i = 0; i < r; ++i)
      v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] =
          (p - a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) % p;
    kernel.push_back(std::move(v));
  }
  return kernel;
}

struct DeterminantZeroError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Smallest prime not dividing |det|; invertibility mod p re-certified by
// Gaussian elimination on the reduced matrix.
inline int choose_prime(const mpz_class& det, const IntMatrix& theta_bar) {
  if (det == 0)
    throw DeterminantZeroError("choose_prime: det = 0, test inapplicable");
  mpz_class abs_det = det < 0 ? mpz_class(-det) : det;
  for (int p = 2;; ++p) {
    bool prime = p >= 2;
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    if (mpz_divisible_ui_p(abs_det.get_mpz_t(),
                           static_cast<unsigned long>(p)))
      continue;
    if (det_mod_p(theta_bar, p) == 0)
      throw std::logic_error("choose_prime: mod-p invertibility check failed");
    return p;
  }
}

// --- Magnus expansion -------------------------------------------------------

// Element of the free associative algebra over F_p truncated at total degree
// < truncation; monomials are generator-index sequences.
struct TruncatedSeries {
  int p = 2;
  int truncation = 2;  // D: monomial lengths < D are kept
  std::map<std::vector<int>, int> terms;  // nonzero coefficients in 1..p-1

  static TruncatedSeries one(int p, int truncation) {
    TruncatedSeries s;
    s.p = p;
    s.truncation = truncation;
    s.terms[{}] = 1;
    return s;
  }

  bool is_one() const {
    return terms.size() == 1 && terms.begin()->first.empty() &&
           terms.begin()->second == 1;
  }

  TruncatedSeries operator*(const TruncatedSeries& o) const {
    if (p != o.p || truncation != o.truncation)
      throw std::invalid_argument("TruncatedSeries: parameter mismatch");
    TruncatedSeries r;
    r.p = p;
    r.truncation = truncation;
    for (const auto& [ma, ca] : terms)
      for (const auto& [mb, cb] : o.terms) {
        if (static_cast<int>(ma.size() + mb.size()) >= truncation) continue;
        std::vector<int> m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        int& c = r.terms[m];
        c = (c + ca * cb) % p;
        if (c == 0) r.terms.erase(m);
      }
    return r;
  }

  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;
};

namespace detail {

// (1 + X_g)^e truncated: coefficients binom(e, k) mod p, valid for any
// integer e (negative e gives the inverse power series).
inline TruncatedSeries generator_power(int g, std::int64_t e, int p, int d) {
  TruncatedSeries s;
  s.p = p;
  s.truncation = d;
  mpz_class binom = 1;
  for (int k = 0; k < d; ++k) {
    if (k > 0) {
      binom *= mpz_class(static_cast<long>(e)) - (k - 1);
      binom /= k;  // exact: product of k consecutive integers over k!
    }
    mpz_class c = binom % p;
    int ci = ((static_cast<int>(c.get_si()) % p) + p) % p;
    if (ci != 0)
      s.terms[std::vector<int>(static_cast<std::size_t>(k), g)] = ci;
  }
  return s;
}

}  // namespace detail

// Image of g under x_i -> 1 + X_i in the truncated algebra mod p.
inline TruncatedSeries magnus_expand(const Word& g, int p, int truncation) {
  if (truncation < 2) throw std::invalid_argument("magnus_expand: D < 2");
  if (p < 2) throw std::invalid_argument("magnus_expand: p < 2");
  TruncatedSeries s = TruncatedSeries::one(p, truncation);
  for (const auto& run : g.runs())
    s = s * detail::generator_power(run.gen, run.exp, p, truncation);
  return s;
}

// Smallest D with magnus_expand(g, p, D) != 1; the unit group of the
// truncated algebra is a finite p-group, so D names a finite p-quotient
// separating g.
inline int separating_degree(const Word& g, int p, int max_degree = 16) {
  if (g.empty())
    throw std::invalid_argument("separating_degree: empty word");
  for (int d = 2; d <= max_degree; ++d)
    if (!magnus_expand(g, p, d).is_one()) return d;
  throw std::runtime_error(
      "separating_degree: no nontrivial term up to degree bound " +
      std::to_string(max_degree) +
      " (word may lie too deep in the mod-" + std::to_string(p) +
      " filtration)");
}

// --- residual-finiteness certificates ---------------------------------------

// Witness words live in F_r * <t> with t as the last generator (index r).
struct WitnessSeparation {
  Word witness;                      // rank r+1, index r = t
  std::int64_t t_exponent = 0;       // nonzero: separated by a cyclic quotient
  std::optional<Word> fiber_form;    // conjugated into F_r when t-exponent 0
  std::optional<int> degree;         // separating Magnus degree for fiber_form
};

struct RFCertificate {
  Endomorphism theta;
  IntMatrix theta_bar;
  mpz_class det;
  int prime = 0;
  std::vector<WitnessSeparation> witnesses;
};

// Conjugates a t-exponent-zero word into the fiber F_r by rewriting
// t^k x t^-k = theta^k(x) on the ascending normal form.
inline Word rewrite_into_fiber(const Endomorphism& theta, const Word& w,
                               std::int64_t length_bound = 1 << 16) {
  int r = theta.rank;
  int t = r;
  if (w.rank() != r + 1)
    throw std::invalid_argument("rewrite_into_fiber: expected rank r+1 word");
  std::int64_t depth = 0, min_depth = 0, total = 0;
  for (const auto& run : w.runs()) {
    if (run.gen == t) {
      depth += run.exp;
      min_depth = std::min(min_depth, depth);
    }
  }
  total = depth;
  if (total != 0)
    throw std::invalid_argument("rewrite_into_fiber: nonzero t-exponent");
  std::int64_t shift = min_depth < 0 ? -min_depth : 0;

  // t^shift w t^-shift = product of theta^{shift+depth}(x^e) over the fiber
  // letters of w.
  std::vector<Endomorphism> powers{Endomorphism::identity(r)};
  Word out(r);
  depth = 0;
  for (const auto& run : w.runs()) {
    if (run.gen == t) {
      depth += run.exp;
      continue;
    }
    std::int64_t k = shift + depth;
    while (static_cast<std::int64_t>(powers.size()) <= k)
      powers.push_back(compose(theta, powers.back()));
    Word letter = Word::from_runs(r, {{run.gen, run.exp}});
    out.push_word(apply_endo(powers[static_cast<std::size_t>(k)], letter));
    if (out.length() > length_bound)
      throw std::runtime_error("rewrite_into_fiber: length bound exceeded");
  }
  return out;
}

inline std::int64_t t_exponent(const Word& w, int t_index) {
  std::int64_t e = 0;
  for (const auto& run : w.runs())
    if (run.gen == t_index) e += run.exp;
  return e;
}

inline RFCertificate rf_certificate(const Endomorphism& theta,
                                    const std::vector<Word>& witnesses) {
  RFCertificate cert;
  cert.theta = theta;
  cert.theta_bar = abelianized_matrix(theta);
  cert.det = determinant(cert.theta_bar);
  cert.prime = choose_prime(cert.det, cert.theta_bar);  // throws if det = 0
  for (const auto& w : witnesses) {
    if (w.empty())
      throw std::invalid_argument("rf_certificate: identity witness");
    WitnessSeparation sep;
    sep.witness = w;
    sep.t_exponent = t_exponent(w, theta.rank);
    if (sep.t_exponent == 0) {
      Word fiber = rewrite_into_fiber(theta, w);
      if (fiber.empty())
        throw std::invalid_argument(
            "rf_certificate: witness is trivial in the extension");
      sep.degree = separating_degree(fiber, cert.prime);
      sep.fiber_form = std::move(fiber);
    }
    cert.witnesses.push_back(std::move(sep));
  }
  return cert;
}

}  // namespace cycpres
