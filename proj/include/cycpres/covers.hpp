#pragma once

// Semidirect products F_r x| Z, cyclic-cover presentations, the period of a
// finite quotient under the fiber automorphism, and the lifting pipeline
// that produces explicit surjections G_n(v) ->> finite groups.

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycpres/homsearch.hpp"
#include "cycpres/permgrp.hpp"
#include "cycpres/present.hpp"
#include "cycpres/words.hpp"

namespace cycpres {

// F_r x|_alpha Z with a verified inverse (alpha is an automorphism).  The
// exponent functional is implicit: the t-exponent sum.
struct SemidirectOverZ {
  int rank = 0;
  Endomorphism alpha;
  Endomorphism alpha_inverse;

  SemidirectOverZ(int r, Endomorphism a, Endomorphism a_inv)
      : rank(r), alpha(std::move(a)), alpha_inverse(std::move(a_inv)) {
    alpha.validate();
    alpha_inverse.validate();
    Endomorphism id = Endomorphism::identity(rank);
    if (compose(alpha, alpha_inverse) != id ||
        compose(alpha_inverse, alpha) != id)
      throw std::invalid_argument("SemidirectOverZ: alpha not invertible");
  }

  explicit SemidirectOverZ(const FreeByCyclicData& fbc)
      : SemidirectOverZ(fbc.rank, fbc.alpha, fbc.alpha_inverse) {}
};

// The cyclic cover <F_r, s = t^n>: generators y_0..y_{r-1}, s; relators
// s y_i s^-1 (alpha^n(y_i))^-1.
inline Presentation cover_presentation(const SemidirectOverZ& g, int n) {
  if (n < 1) throw std::invalid_argument("cover_presentation: n < 1");
  Endomorphism an = endo_power(g.alpha, n);
  Presentation p;
  p.num_generators = g.rank + 1;
  int s = g.rank;
  for (int i = 0; i < g.rank; ++i) {
    Word rel(g.rank + 1);
    rel.push(s, 1);
    rel.push(i, 1);
    rel.push(s, -1);
    rel.push_word(an.images[static_cast<std::size_t>(i)]
                      .widened(g.rank + 1)
                      .inverse());
    p.relators.push_back(std::move(rel));
  }
  for (int i = 0; i < g.rank; ++i) p.labels.push_back("y" + std::to_string(i));
  p.labels.push_back("s");
  p.validate();
  return p;
}

// Minimal n > 0 with phi o alpha^n = phi as generator-image maps.  Exists
// because precomposition by the automorphism permutes the finite set of
// homomorphisms F_r -> T.
inline int cover_degree_for_target(const SemidirectOverZ& g,
                                   const std::vector<Permutation>& phi,
                                   const PermGroup& target,
                                   int iteration_bound = 1 << 20) {
  if (static_cast<int>(phi.size()) != g.rank)
    throw std::invalid_argument("cover_degree_for_target: arity mismatch");
  if (!is_surjective(phi, target))
    throw std::invalid_argument("cover_degree_for_target: phi not surjective");
  int degree = target.degree();
  std::vector<Permutation> current = phi;
  for (int n = 1; n <= iteration_bound; ++n) {
    std::vector<Permutation> next;
    next.reserve(current.size());
    for (int i = 0; i < g.rank; ++i)
      next.push_back(evaluate_word(
          g.alpha.images[static_cast<std::size_t>(i)], current, degree));
    if (next == phi) return n;
    current = std::move(next);
  }
  throw std::runtime_error("cover_degree_for_target: iteration bound exceeded");
}

struct CoverSurjection {
  int n = 0;                          // cover degree
  int period = 0;                     // minimal period of phi under alpha
  std::string target_name;
  int target_degree = 0;
  std::vector<Permutation> fiber_images;  // phi on y_0..y_{r-1}
  std::vector<Permutation> images;        // images of x_0..x_{n-1}
};

// Images x_i -> phi(alpha^i(y_0)) for the normalized family; every relator of
// G_n(v) is re-verified and surjectivity is checked by order.
inline CoverSurjection lift_to_cyclic_presentation(
    const CyclicWordFamily& family, const FreeByCyclicData& fbc,
    const std::vector<Permutation>& phi, const PermGroup& target,
    const std::string& target_name, int n) {
  if (n < family.d)
    throw std::invalid_argument("lift_to_cyclic_presentation: n < d");
  SemidirectOverZ g(fbc);
  int period = cover_degree_for_target(g, phi, target);
  if (n % period != 0)
    throw std::invalid_argument(
        "lift_to_cyclic_presentation: n not a multiple of the period");

  CyclicWordFamily norm = normalized_family(family);
  int degree = target.degree();

  CoverSurjection out;
  out.n = n;
  out.period = period;
  out.target_name = target_name;
  out.target_degree = degree;
  out.fiber_images = phi;

  // x_i -> phi(alpha^i(y_0)); alpha applied as endomorphism of the fiber.
  Word y0 = Word::from_runs(fbc.rank, {{0, 1}});
  Word word = y0;
  for (int i = 0; i < n; ++i) {
    out.images.push_back(evaluate_word(word, phi, degree));
    word = apply_endo(g.alpha, word);
  }

  // Well-definedness across wraparound: phi(alpha^n(y_0)) = phi(y_0).
  if (evaluate_word(word, phi, degree) != out.images.front())
    throw std::logic_error("lift: wraparound consistency failed");

  Presentation p = cyclic_presentation(norm, n);
  auto hom = verify_hom(p, out.images, degree);
  if (!hom)
    throw std::logic_error("lift: relator check failed");
  if (!is_surjective(out.images, target))
    throw std::runtime_error("lift: image subgroup is proper");
  return out;
}

struct QuotientSchedule {
  int n = 0;           // common cover degree, >= family.d
  int lcm_period = 1;  // the arithmetic progression is {k * lcm_period}
  std::vector<CoverSurjection> surjections;
};

// Corollary-style schedule: one fiber surjection per target (found in
// canonical order unless pinned), periods combined by lcm, degree bumped to
// the smallest multiple >= d.  Reported progression: {k*lcm : k >= 1, k*lcm >= d}.
inline QuotientSchedule simple_quotient_schedule(
    const CyclicWordFamily& family, const FreeByCyclicData& fbc,
    const std::vector<std::pair<std::string, PermGroup>>& targets,
    std::int64_t budget = kDefaultBudget) {
  SemidirectOverZ g(fbc);
  QuotientSchedule sched;
  if (targets.empty()) {
    sched.n = family.d;
    return sched;
  }
  Presentation free_rank_r;
  free_rank_r.num_generators = fbc.rank;
  for (int i = 0; i < fbc.rank; ++i)
    free_rank_r.labels.push_back("y" + std::to_string(i));

  std::vector<std::vector<Permutation>> phis;
  std::vector<int> periods;
  for (const auto& [name, target] : targets) {
    auto phi = find_surjection(free_rank_r, target, budget);
    if (!phi)
      throw std::runtime_error("no surjection F_r ->> " + name +
                               " found under budget");
    phis.push_back(phi->images);
    periods.push_back(cover_degree_for_target(g, phi->images, target));
  }
  int lcm = 1;
  for (int p : periods) lcm = std::lcm(lcm, p);
  sched.lcm_period = lcm;
  int n = lcm;
  while (n < family.d) n += lcm;
  sched.n = n;
  for (std::size_t i = 0; i < targets.size(); ++i)
    sched.surjections.push_back(lift_to_cyclic_presentation(
        family, fbc, phis[i], targets[i].second, targets[i].first, n));
  return sched;
}

}  // namespace cycpres
