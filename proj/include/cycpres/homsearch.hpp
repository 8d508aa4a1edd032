#pragma once

// Backtracking enumeration of homomorphisms from a finite presentation into
// a finite permutation group; surjection search and quotient reports.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycpres/permgrp.hpp"
#include "cycpres/present.hpp"
#include "cycpres/words.hpp"

namespace cycpres {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kDefaultBudget = 100'000'000;

// Evaluates a word at the given generator images.
inline Permutation evaluate_word(const Word& w,
                                 const std::vector<Permutation>& images,
                                 int degree) {
  Permutation r = Permutation::identity(degree);
  for (const auto& s : w.runs())
    r = r * images[static_cast<std::size_t>(s.gen)].power(s.exp);
  return r;
}

// Letter-by-letter evaluation; independent path used to re-verify results of
// evaluate_word.
inline Permutation evaluate_word_letters(const Word& w,
                                         const std::vector<Permutation>& images,
                                         int degree) {
  Permutation r = Permutation::identity(degree);
  for (const auto& s : w.runs()) {
    const Permutation& base = images[static_cast<std::size_t>(s.gen)];
    Permutation step = s.exp > 0 ? base : base.inverse();
    std::int64_t n = s.exp > 0 ? s.exp : -s.exp;
    for (std::int64_t i = 0; i < n; ++i) r = r * step;
  }
  return r;
}

struct Homomorphism {
  Presentation source;
  int target_degree = 0;
  std::vector<Permutation> images;  // one per source generator

  PermGroup image_group() const {
    return PermGroup(target_degree, images);
  }
};

inline std::optional<Homomorphism> verify_hom(
    const Presentation& p, const std::vector<Permutation>& images,
    int degree) {
  if (static_cast<int>(images.size()) != p.num_generators)
    throw std::invalid_argument("verify_hom: arity mismatch");
  for (const auto& img : images)
    if (img.degree() != degree)
      throw std::invalid_argument("verify_hom: degree mismatch");
  for (const auto& r : p.relators)
    if (!evaluate_word(r, images, degree).is_identity()) return std::nullopt;
  return Homomorphism{p, degree, images};
}

namespace detail {

// Largest generator index occurring in w, or -1 for the empty word.
inline int max_support(const Word& w) {
  int m = -1;
  for (const auto& s : w.runs()) m = std::max(m, s.gen);
  return m;
}

}  // namespace detail

// Exhaustive deterministic enumeration, lexicographic in element indices of
// the target's sorted element list.  Relators are evaluated as soon as their
// support is covered by the assigned prefix of generators; each evaluation
// costs one budget unit.  A surjectivity check (when requested by callers)
// also costs one unit.
class HomEnumerator {
 public:
  HomEnumerator(const Presentation& p, const PermGroup& target,
                std::int64_t budget = kDefaultBudget)
      : p_(p), target_(target), budget_(budget) {
    p_.validate();
    elements_ = target.elements();
    by_support_.assign(static_cast<std::size_t>(p_.num_generators) + 1, {});
    for (std::size_t i = 0; i < p_.relators.size(); ++i) {
      int m = detail::max_support(p_.relators[i]);
      by_support_[static_cast<std::size_t>(m + 1)].push_back(i);
    }
  }

  std::int64_t budget_left() const { return budget_; }
  const std::vector<Permutation>& target_elements() const { return elements_; }

  // Calls fn on every homomorphism; fn returning false stops the search.
  void for_each(const std::function<bool(const std::vector<Permutation>&)>& fn) {
    // Empty-support relators (empty words) are vacuously satisfied.
    std::vector<Permutation> images;
    recurse(images, fn);
  }

  std::vector<Homomorphism> all() {
    std::vector<Homomorphism> out;
    for_each([&](const std::vector<Permutation>& images) {
      out.push_back(Homomorphism{p_, target_.degree(), images});
      return true;
    });
    return out;
  }

  std::int64_t spend(std::int64_t units = 1) {
    budget_ -= units;
    if (budget_ < 0)
      throw BudgetExceeded("homomorphism search budget exceeded");
    return budget_;
  }

 private:
  bool recurse(std::vector<Permutation>& images,
               const std::function<bool(const std::vector<Permutation>&)>& fn) {
    int k = static_cast<int>(images.size());
    // Relators whose support just became fully assigned.
    for (std::size_t idx : by_support_[static_cast<std::size_t>(k)]) {
      spend();
      if (!evaluate_word(p_.relators[idx], images, target_.degree())
               .is_identity())
        return true;  // prune this branch
    }
    if (k == p_.num_generators) return fn(images);
    for (const auto& e : elements_) {
      images.push_back(e);
      bool keep_going = recurse(images, fn);
      images.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  Presentation p_;
  const PermGroup& target_;
  std::vector<Permutation> elements_;
  std::vector<std::vector<std::size_t>> by_support_;
  std::int64_t budget_;
};

inline std::vector<Homomorphism> enumerate_homs(
    const Presentation& p, const PermGroup& target,
    std::int64_t budget = kDefaultBudget) {
  return HomEnumerator(p, target, budget).all();
}

inline bool is_surjective(const std::vector<Permutation>& images,
                          const PermGroup& target) {
  return PermGroup(target.degree(), images).order() == target.order();
}

// First surjection in canonical (lexicographic) order, or nullopt.
inline std::optional<Homomorphism> find_surjection(
    const Presentation& p, const PermGroup& target,
    std::int64_t budget = kDefaultBudget) {
  HomEnumerator e(p, target, budget);
  mpz_class target_order = target.order();
  std::optional<Homomorphism> found;
  e.for_each([&](const std::vector<Permutation>& images) {
    e.spend();
    if (PermGroup(target.degree(), images).order() == target_order) {
      found = Homomorphism{p, target.degree(), images};
      return false;
    }
    return true;
  });
  return found;
}

struct QuotientReport {
  std::string target_name;
  std::int64_t hom_count = 0;
  std::int64_t surjection_count = 0;
  std::optional<Homomorphism> sample_surjection;  // canonical-least
  bool all_images_cyclic = true;
};

inline bool is_cyclic_subgroup(const std::vector<Permutation>& images,
                               int degree) {
  PermGroup g(degree, images);
  mpz_class o = g.order();
  if (o == 1) return true;
  for (const auto& e : g.elements()) {
    // Element order equals group order iff it generates.
    if (PermGroup(degree, {e}).order() == o) return true;
  }
  return false;
}

inline QuotientReport quotient_scan(const Presentation& p,
                                    const PermGroup& target,
                                    const std::string& target_name,
                                    std::int64_t budget = kDefaultBudget) {
  QuotientReport report;
  report.target_name = target_name;
  HomEnumerator e(p, target, budget);
  mpz_class target_order = target.order();
  e.for_each([&](const std::vector<Permutation>& images) {
    ++report.hom_count;
    e.spend();
    PermGroup img(target.degree(), images);
    if (img.order() == target_order) {
      ++report.surjection_count;
      if (!report.sample_surjection)
        report.sample_surjection = Homomorphism{p, target.degree(), images};
    }
    if (report.all_images_cyclic && !is_cyclic_subgroup(images, target.degree()))
      report.all_images_cyclic = false;
    return true;
  });
  return report;
}

}  // namespace cycpres
