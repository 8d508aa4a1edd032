#pragma once

// Finite presentations, the cyclic families G_n(v) and H_n(w), the
// free-by-cyclic word criterion and the fiber automorphism it yields.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycpres/words.hpp"

namespace cycpres {

struct Presentation {
  int num_generators = 0;
  std::vector<Word> relators;            // each of rank num_generators
  std::vector<std::string> labels;       // optional generator names

  void validate() const {
    if (num_generators < 1)
      throw std::invalid_argument("Presentation: need at least one generator");
    for (const auto& r : relators)
      if (r.rank() != num_generators)
        throw std::invalid_argument("Presentation: relator rank mismatch");
    if (!labels.empty() &&
        static_cast<int>(labels.size()) != num_generators)
      throw std::invalid_argument("Presentation: label count mismatch");
  }
};

// A cyclically reduced word v in F_d defining the family {G_n(v) : n >= d}.
// The shift automorphism is realized as index rotation.
struct CyclicWordFamily {
  Word v;
  int d = 0;

  CyclicWordFamily(Word word, int ambient_rank)
      : v(std::move(word)), d(ambient_rank) {
    if (d < 1) throw std::invalid_argument("CyclicWordFamily: d < 1");
    if (v.rank() > d)
      throw std::invalid_argument("CyclicWordFamily: word exceeds rank d");
    v = v.widened(d);
    if (!is_cyclically_reduced(v))
      throw std::invalid_argument("CyclicWordFamily: v not cyclically reduced");
  }

  explicit CyclicWordFamily(Word word)
      : CyclicWordFamily(word, word.rank() > 0 ? word.rank() : 1) {}
};

// Data of the splitting <x,t | w> = F_r x| Z when the extreme-index
// single-occurrence criterion holds.
struct FreeByCyclicData {
  int smallest_index = 0;  // s
  int largest_index = 0;   // l
  int rank = 0;            // r = l - s
  Endomorphism alpha;
  Endomorphism alpha_inverse;
};

// The n relators of G_n(v): index-shifts of v with subscripts mod n.
inline Presentation cyclic_presentation(const CyclicWordFamily& family,
                                        int n) {
  if (n < family.d)
    throw std::invalid_argument("cyclic_presentation: n < d");
  Presentation p;
  p.num_generators = n;
  for (int i = 0; i < n; ++i)
    p.relators.push_back(family.v.shifted_mod(i, n));
  for (int i = 0; i < n; ++i) p.labels.push_back("x" + std::to_string(i));
  p.validate();
  return p;
}

// w(x,t) = v(x, txt^-1, ..., t^{d-1} x t^{-(d-1)}), a word in F_2 = <x,t>.
inline Word v_to_w(const CyclicWordFamily& family) {
  Word w(2);  // generator 0 = x, generator 1 = t
  for (const auto& s : family.v.runs()) {
    w.push(1, s.gen);
    w.push(0, s.exp);
    w.push(1, -s.gen);
  }
  return w;
}

// H_n(w) = <x,t | w(x,t), t^n>.
inline Presentation h_n_presentation(const Word& w, int n) {
  if (w.rank() > 2)
    throw std::invalid_argument("h_n_presentation: w must be two-generator");
  if (n < 1) throw std::invalid_argument("h_n_presentation: n < 1");
  Presentation p;
  p.num_generators = 2;
  p.relators.push_back(w.widened(2));
  p.relators.push_back(Word::from_runs(2, {{1, n}}));
  p.labels = {"x", "t"};
  p.validate();
  return p;
}

namespace detail {

// Occurrence count of generator g in v (letters, not exponent sums).
inline std::int64_t occurrences(const Word& v, int g) {
  std::int64_t n = 0;
  for (const auto& s : v.runs())
    if (s.gen == g) n += s.exp < 0 ? -s.exp : s.exp;
  return n;
}

struct IndexRange {
  int smallest;
  int largest;
};

inline IndexRange occurring_range(const Word& v) {
  int s = v.rank(), l = -1;
  for (const auto& run : v.runs()) {
    s = std::min(s, run.gen);
    l = std::max(l, run.gen);
  }
  return {s, l};
}

// Solves relation = 1 for the unique occurrence of `target` (letters allowed
// to carry indices shifted by `offset`, so index -1 is representable).
// Returns the solved word over generators 0..rank-1.
inline Word solve_unique_occurrence(const std::vector<Syllable>& relation,
                                    int target, int rank) {
  int pos = -1;
  for (std::size_t i = 0; i < relation.size(); ++i) {
    if (relation[i].gen == target) {
      if (pos >= 0 || (relation[i].exp != 1 && relation[i].exp != -1))
        throw std::logic_error("solve_unique_occurrence: not unique");
      pos = static_cast<int>(i);
    }
  }
  if (pos < 0) throw std::logic_error("solve_unique_occurrence: missing");
  // relation = A * target^eps * B = 1  =>  target^eps = A^-1 B^-1.
  Word a(rank), b(rank);
  for (int i = 0; i < pos; ++i) a.push(relation[i].gen, relation[i].exp);
  for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < relation.size();
       ++i)
    b.push(relation[i].gen, relation[i].exp);
  std::int64_t eps = relation[static_cast<std::size_t>(pos)].exp;
  Word rhs = a.inverse() * b.inverse();
  return eps == 1 ? rhs : rhs.inverse();
}

}  // namespace detail

// The paper-style criterion: both extreme generators occur exactly once.
// Rank l - s must be at least 1.
inline bool is_free_by_cyclic(const CyclicWordFamily& family) {
  if (family.v.empty()) throw std::invalid_argument("empty word");
  auto [s, l] = detail::occurring_range(family.v);
  if (l - s < 1) return false;
  return detail::occurrences(family.v, s) == 1 &&
         detail::occurrences(family.v, l) == 1;
}

// Builds the fiber automorphism on basis y_0..y_{r-1}, y_i = t^i x t^{-i},
// after normalizing indices so the smallest occurring index is 0.
inline FreeByCyclicData fiber_automorphism(const CyclicWordFamily& family) {
  if (!is_free_by_cyclic(family))
    throw std::invalid_argument("fiber_automorphism: not free-by-cyclic");
  auto [s, l] = detail::occurring_range(family.v);
  int r = l - s;

  // Single occurrences force the associated polynomial to be monic at both
  // ends; anything else is a bug in the occurrence count.
  auto ab = abelianize_word(family.v);
  if ((ab[static_cast<std::size_t>(s)] != 1 &&
       ab[static_cast<std::size_t>(s)] != -1) ||
      (ab[static_cast<std::size_t>(l)] != 1 &&
       ab[static_cast<std::size_t>(l)] != -1))
    throw std::logic_error("fiber_automorphism: polynomial not monic at ends");

  // Normalized relation in y_0..y_r with y_r occurring once.
  std::vector<Syllable> rel;
  for (const auto& run : family.v.runs()) rel.push_back({run.gen - s, run.exp});

  FreeByCyclicData data;
  data.smallest_index = s;
  data.largest_index = l;
  data.rank = r;

  data.alpha.rank = r;
  for (int i = 0; i + 1 < r; ++i)
    data.alpha.images.push_back(Word::from_runs(r, {{i + 1, 1}}));
  data.alpha.images.push_back(detail::solve_unique_occurrence(rel, r, r));

  // Solve the relation for y_0 (a word in y_1..y_r), then shift every index
  // down by one: this is the (-1)-shifted relation solved for y_{-1}, giving
  // alpha^{-1}(y_0) as a word in y_0..y_{r-1}.
  Word solved = detail::solve_unique_occurrence(rel, 0, r + 1);
  Word inv0(r);
  for (const auto& run : solved.runs()) inv0.push(run.gen - 1, run.exp);

  data.alpha_inverse.rank = r;
  data.alpha_inverse.images.push_back(inv0);
  for (int i = 1; i < r; ++i)
    data.alpha_inverse.images.push_back(Word::from_runs(r, {{i - 1, 1}}));

  data.alpha.validate();
  data.alpha_inverse.validate();
  Endomorphism id = Endomorphism::identity(r);
  if (compose(data.alpha, data.alpha_inverse) != id ||
      compose(data.alpha_inverse, data.alpha) != id)
    throw std::logic_error("fiber_automorphism: inverse check failed");
  return data;
}

inline std::optional<FreeByCyclicData> free_by_cyclic_check(
    const CyclicWordFamily& family) {
  if (!is_free_by_cyclic(family)) return std::nullopt;
  return fiber_automorphism(family);
}

// The family with indices shifted down so the smallest occurring index is 0.
// Shifting v permutes the relator set of every G_n(v), so the groups are
// unchanged up to generator relabeling.
inline CyclicWordFamily normalized_family(const CyclicWordFamily& family) {
  auto [s, l] = detail::occurring_range(family.v);
  (void)l;
  if (s <= 0) return family;
  Word v(family.d);
  for (const auto& run : family.v.runs()) v.push(run.gen - s, run.exp);
  return CyclicWordFamily(v, family.d);
}

}  // namespace cycpres
