#pragma once

// Reduced-word arithmetic in finitely generated free groups, plus
// endomorphisms given by generator images.
//
// Words are stored as runs (generator, signed exponent); inverse letters are
// encoded by the sign of the exponent.  All values are immutable once built.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cycpres {

struct Syllable {
  int gen;           // generator index, 0 <= gen < rank
  std::int64_t exp;  // nonzero signed exponent

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(int rank) : rank_(rank) {
    if (rank < 0) throw std::invalid_argument("Word: negative rank");
  }

  // Builds a freely reduced word from a raw run sequence.
  static Word from_runs(int rank,
                        const std::vector<std::pair<int, std::int64_t>>& runs) {
    Word w(rank);
    for (const auto& [g, e] : runs) w.push(g, e);
    return w;
  }

  int rank() const { return rank_; }
  bool empty() const { return runs_.empty(); }
  const std::vector<Syllable>& runs() const { return runs_; }

  // Word length counted in letters.
  std::int64_t length() const {
    std::int64_t n = 0;
    for (const auto& s : runs_) n += s.exp < 0 ? -s.exp : s.exp;
    return n;
  }

  // Appends g^e with free cancellation against the current suffix.
  void push(int gen, std::int64_t exp) {
    if (gen < 0 || gen >= rank_)
      throw std::invalid_argument("Word: generator index " +
                                  std::to_string(gen) + " out of rank " +
                                  std::to_string(rank_));
    if (exp == 0) return;
    if (!runs_.empty() && runs_.back().gen == gen) {
      runs_.back().exp += exp;
      if (runs_.back().exp == 0) runs_.pop_back();
      return;
    }
    runs_.push_back({gen, exp});
  }

  void push_word(const Word& w) {
    if (w.rank_ > rank_) throw std::invalid_argument("Word: rank mismatch");
    for (const auto& s : w.runs_) push(s.gen, s.exp);
  }

  Word inverse() const {
    Word r(rank_);
    r.runs_.reserve(runs_.size());
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it)
      r.runs_.push_back({it->gen, -it->exp});
    return r;
  }

  Word operator*(const Word& o) const {
    Word r(rank_ >= o.rank_ ? rank_ : o.rank_);
    r.runs_ = runs_;
    for (const auto& s : o.runs_) r.push(s.gen, s.exp);
    return r;
  }

  Word pow(std::int64_t k) const {
    Word base = k < 0 ? inverse() : *this;
    std::int64_t n = k < 0 ? -k : k;
    Word r(rank_);
    for (std::int64_t i = 0; i < n; ++i) r.push_word(base);
    return r;
  }

  // Same word viewed inside a larger free group.
  Word widened(int new_rank) const {
    if (new_rank < rank_) {
      for (const auto& s : runs_)
        if (s.gen >= new_rank)
          throw std::invalid_argument("Word: cannot narrow below support");
    }
    Word r(new_rank);
    r.runs_ = runs_;
    return r;
  }

  // Adds delta to every generator index modulo n (requires rank <= n).
  Word shifted_mod(int delta, int n) const {
    Word r(n);
    for (const auto& s : runs_) {
      int g = ((s.gen + delta) % n + n) % n;
      r.push(g, s.exp);
    }
    return r;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.rank_ == b.rank_ && a.runs_ == b.runs_;
  }

 private:
  int rank_ = 0;
  std::vector<Syllable> runs_;
};

// Freely reduces a raw letter sequence over F_rank.
inline Word reduce(int rank,
                   const std::vector<std::pair<int, std::int64_t>>& letters) {
  return Word::from_runs(rank, letters);
}

// Returns (core, c) with w = c * core * c^{-1} and core cyclically reduced.
inline std::pair<Word, Word> cyclic_reduce(const Word& w) {
  std::vector<Syllable> runs = w.runs();
  Word conj(w.rank());
  while (runs.size() >= 2 && runs.front().gen == runs.back().gen) {
    Syllable& f = runs.front();
    Syllable& b = runs.back();
    // Peel min(|f.exp|,|b.exp|) letters if the signs cancel across the ends.
    if ((f.exp > 0) == (b.exp > 0)) break;
    std::int64_t k = std::min(f.exp < 0 ? -f.exp : f.exp,
                              b.exp < 0 ? -b.exp : b.exp);
    std::int64_t peel = f.exp > 0 ? k : -k;
    conj.push(f.gen, peel);
    f.exp -= peel;
    b.exp += peel;
    if (b.exp == 0) runs.pop_back();
    if (f.exp == 0) runs.erase(runs.begin());
  }
  // A single syllable left over is already cyclically reduced.
  Word core(w.rank());
  for (const auto& s : runs) core.push(s.gen, s.exp);
  return {core, conj};
}

inline bool is_cyclically_reduced(const Word& w) {
  auto [core, conj] = cyclic_reduce(w);
  return conj.empty();
}

// Exponent-sum vector of w, one entry per generator.
inline std::vector<std::int64_t> abelianize_word(const Word& w) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(w.rank()), 0);
  for (const auto& s : w.runs()) v[static_cast<std::size_t>(s.gen)] += s.exp;
  return v;
}

struct Endomorphism {
  int rank = 0;
  std::vector<Word> images;  // images[i] = image of generator i

  static Endomorphism identity(int rank) {
    Endomorphism e;
    e.rank = rank;
    for (int i = 0; i < rank; ++i)
      e.images.push_back(Word::from_runs(rank, {{i, 1}}));
    return e;
  }

  void validate() const {
    if (static_cast<int>(images.size()) != rank)
      throw std::invalid_argument("Endomorphism: image count != rank");
    for (const auto& w : images)
      if (w.rank() != rank)
        throw std::invalid_argument("Endomorphism: image rank mismatch");
  }

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;
};

inline Word apply_endo(const Endomorphism& e, const Word& w) {
  if (w.rank() != e.rank)
    throw std::invalid_argument("apply_endo: rank mismatch");
  Word r(e.rank);
  for (const auto& s : w.runs())
    r.push_word(e.images[static_cast<std::size_t>(s.gen)].pow(s.exp));
  return r;
}

// compose(e1, e2) acts as e1 after e2.
inline Endomorphism compose(const Endomorphism& e1, const Endomorphism& e2) {
  if (e1.rank != e2.rank) throw std::invalid_argument("compose: rank mismatch");
  Endomorphism r;
  r.rank = e1.rank;
  r.images.reserve(e2.images.size());
  for (const auto& img : e2.images) r.images.push_back(apply_endo(e1, img));
  return r;
}

inline Endomorphism endo_power(const Endomorphism& e, int n) {
  if (n < 0) throw std::invalid_argument("endo_power: negative exponent");
  Endomorphism r = Endomorphism::identity(e.rank);
  for (int i = 0; i < n; ++i) r = compose(e, r);
  return r;
}

}  // namespace cycpres
