#pragma once

// Finite permutation groups: stabilizer chains (deterministic
// Schreier-Sims), order, membership, parity, element enumeration, and the
// regular-representation embedding into alternating groups.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycpres {

struct Permutation {
  std::vector<int> img;

  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img(std::move(images)) {
    std::vector<bool> seen(img.size(), false);
    for (int x : img) {
      if (x < 0 || x >= static_cast<int>(img.size()) ||
          seen[static_cast<std::size_t>(x)])
        throw std::invalid_argument("Permutation: not a bijection");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  // Builds a permutation from disjoint cycles on n points.
  static Permutation from_cycles(int n,
                                 const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(n);
    for (const auto& cyc : cycles)
      for (std::size_t i = 0; i < cyc.size(); ++i)
        p.img[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
    return Permutation(std::move(p.img));
  }

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[static_cast<std::size_t>(x)]; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  // (a * b)(x) = a(b(x)): b acts first.
  Permutation operator*(const Permutation& o) const {
    if (degree() != o.degree())
      throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<int> v(img.size());
    for (std::size_t i = 0; i < img.size(); ++i)
      v[i] = img[static_cast<std::size_t>(o.img[i])];
    Permutation p;
    p.img = std::move(v);
    return p;
  }

  Permutation inverse() const {
    std::vector<int> v(img.size());
    for (std::size_t i = 0; i < img.size(); ++i)
      v[static_cast<std::size_t>(img[i])] = static_cast<int>(i);
    Permutation p;
    p.img = std::move(v);
    return p;
  }

  Permutation power(std::int64_t k) const {
    Permutation base = k < 0 ? inverse() : *this;
    std::int64_t n = k < 0 ? -k : k;
    Permutation r = identity(degree());
    while (n > 0) {
      if (n & 1) r = base * r;
      base = base * base;
      n >>= 1;
    }
    return r;
  }

  bool is_even() const {
    std::vector<bool> seen(img.size(), false);
    int transpositions = 0;
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img[j])) {
        seen[j] = true;
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions % 2 == 0;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.img <=> b.img;
  }
};

class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Permutation> generators)
      : degree_(degree), gens_(std::move(generators)) {
    if (degree < 1) throw std::invalid_argument("PermGroup: degree < 1");
    for (const auto& g : gens_)
      if (g.degree() != degree)
        throw std::invalid_argument("PermGroup: generator degree mismatch");
  }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  // One-time chain construction; afterwards concurrent readers are safe.
  void finalize() const {
    if (!chain_) build_chain();
  }

  mpz_class order() const {
    finalize();
    mpz_class o = 1;
    for (const auto& lvl : chain_->levels)
      o *= static_cast<unsigned long>(lvl.orbit.size());
    return o;
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_)
      throw std::invalid_argument("contains: degree mismatch");
    finalize();
    auto [residue, level] = chain_->strip(g, 0);
    return level == chain_->levels.size() && residue.is_identity();
  }

  // All elements in lexicographic order of image arrays; throws if the order
  // exceeds `limit`.
  std::vector<Permutation> elements(std::size_t limit = 1 << 20) const {
    if (order() > static_cast<unsigned long>(limit))
      throw std::runtime_error("PermGroup::elements: group too large");
    std::set<Permutation> closed;
    std::vector<Permutation> frontier{Permutation::identity(degree_)};
    closed.insert(frontier.front());
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& e : frontier)
        for (const auto& g : gens_) {
          Permutation p = g * e;
          if (closed.insert(p).second) next.push_back(std::move(p));
        }
      frontier = std::move(next);
    }
    return {closed.begin(), closed.end()};
  }

  bool is_transitive() const {
    std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& g : gens_) {
        for (int y : {g(x), g.inverse()(x)}) {
          if (!seen[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = true;
            ++count;
            stack.push_back(y);
          }
        }
      }
    }
    return count == degree_;
  }

  // --- named constructors -------------------------------------------------

  static PermGroup trivial(int degree = 1) { return PermGroup(degree, {}); }

  static PermGroup cyclic(int k) {
    if (k < 1) throw std::invalid_argument("cyclic: k < 1");
    if (k == 1) return trivial();
    std::vector<int> cyc(static_cast<std::size_t>(k));
    std::iota(cyc.begin(), cyc.end(), 0);
    return PermGroup(k, {Permutation::from_cycles(k, {cyc})});
  }

  static PermGroup symmetric(int n) {
    if (n < 1) throw std::invalid_argument("symmetric: n < 1");
    if (n == 1) return trivial();
    std::vector<int> cyc(static_cast<std::size_t>(n));
    std::iota(cyc.begin(), cyc.end(), 0);
    return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}),
                         Permutation::from_cycles(n, {cyc})});
  }

  static PermGroup alternating(int n) {
    if (n < 1) throw std::invalid_argument("alternating: n < 1");
    if (n <= 2) return trivial(n);
    if (n == 3)
      return PermGroup(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
    std::vector<int> cyc;
    for (int i = n % 2 == 0 ? 1 : 0; i < n; ++i) cyc.push_back(i);
    return PermGroup(n, {Permutation::from_cycles(n, {{0, 1, 2}}),
                         Permutation::from_cycles(n, {cyc})});
  }

  static PermGroup dihedral(int k) {
    if (k < 3) throw std::invalid_argument("dihedral: k < 3");
    std::vector<int> rot(static_cast<std::size_t>(k));
    std::iota(rot.begin(), rot.end(), 0);
    std::vector<int> refl(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) refl[static_cast<std::size_t>(i)] = (k - i) % k;
    Permutation r;
    r.img = std::move(refl);
    return PermGroup(k, {Permutation::from_cycles(k, {rot}), r});
  }

  // Action on the projective line over F_p: points 0..p-1 and infinity = p.
  static PermGroup psl2(int p) {
    if (p < 2) throw std::invalid_argument("psl2: p < 2");
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) throw std::invalid_argument("psl2: p not prime");
    int n = p + 1;
    auto inv_mod = [p](int z) {
      for (int i = 1; i < p; ++i)
        if (i * z % p == 1) return i;
      throw std::logic_error("psl2: no inverse");
    };
    std::vector<int> shift(static_cast<std::size_t>(n));
    for (int z = 0; z < p; ++z)
      shift[static_cast<std::size_t>(z)] = (z + 1) % p;
    shift[static_cast<std::size_t>(p)] = p;
    std::vector<int> invert(static_cast<std::size_t>(n));
    invert[0] = p;
    invert[static_cast<std::size_t>(p)] = 0;
    for (int z = 1; z < p; ++z)
      invert[static_cast<std::size_t>(z)] = (p - inv_mod(z)) % p;
    Permutation a, b;
    a.img = std::move(shift);
    b.img = std::move(invert);
    return PermGroup(n, {a, b});
  }

 private:
  struct Level {
    int base = 0;
    std::vector<Permutation> gens;         // strong gens assigned here
    std::vector<int> transversal_index;    // point -> slot, -1 if outside
    std::vector<Permutation> transversal;  // u with u(base) = point
    std::vector<int> orbit;                // BFS discovery order
  };

  struct Chain {
    int degree = 0;
    std::vector<Level> levels;

    // Strong generators usable at level i are those assigned to levels >= i
    // (they fix all earlier base points).
    std::vector<const Permutation*> gens_from(std::size_t i) const {
      std::vector<const Permutation*> out;
      for (std::size_t j = i; j < levels.size(); ++j)
        for (const auto& g : levels[j].gens) out.push_back(&g);
      return out;
    }

    void rebuild_orbit(std::size_t i) {
      Level& lvl = levels[i];
      lvl.transversal_index.assign(static_cast<std::size_t>(degree), -1);
      lvl.transversal.clear();
      lvl.orbit.clear();
      lvl.transversal_index[static_cast<std::size_t>(lvl.base)] = 0;
      lvl.transversal.push_back(Permutation::identity(degree));
      lvl.orbit.push_back(lvl.base);
      auto gens = gens_from(i);
      for (std::size_t head = 0; head < lvl.orbit.size(); ++head) {
        int p = lvl.orbit[head];
        const Permutation& up =
            lvl.transversal[static_cast<std::size_t>(
                lvl.transversal_index[static_cast<std::size_t>(p)])];
        for (const Permutation* g : gens) {
          int q = (*g)(p);
          if (lvl.transversal_index[static_cast<std::size_t>(q)] >= 0)
            continue;
          lvl.transversal_index[static_cast<std::size_t>(q)] =
              static_cast<int>(lvl.transversal.size());
          lvl.transversal.push_back(*g * up);
          lvl.orbit.push_back(q);
        }
      }
    }

    std::pair<Permutation, std::size_t> strip(Permutation g,
                                              std::size_t from) const {
      for (std::size_t i = from; i < levels.size(); ++i) {
        const Level& lvl = levels[i];
        int x = g(lvl.base);
        int slot = lvl.transversal_index[static_cast<std::size_t>(x)];
        if (slot < 0) return {std::move(g), i};
        g = lvl.transversal[static_cast<std::size_t>(slot)].inverse() * g;
      }
      return {std::move(g), levels.size()};
    }
  };

  static int first_moved(const Permutation& g) {
    for (int i = 0; i < g.degree(); ++i)
      if (g(i) != i) return i;
    return -1;
  }

  // Deterministic Schreier-Sims: place generators, then iterate Schreier
  // generator closure until every level's Schreier generators strip to the
  // identity.
  void build_chain() const {
    auto chain = std::make_unique<Chain>();
    chain->degree = degree_;

    auto place = [&](Permutation g) {
      auto [residue, level] = chain->strip(std::move(g), 0);
      if (residue.is_identity()) return false;
      if (level == chain->levels.size()) {
        Level lvl;
        lvl.base = first_moved(residue);
        chain->levels.push_back(std::move(lvl));
      }
      chain->levels[level].gens.push_back(std::move(residue));
      for (std::size_t i = 0; i <= level && i < chain->levels.size(); ++i)
        chain->rebuild_orbit(i);
      return true;
    };

    for (const auto& g : gens_) place(g);

    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < chain->levels.size() && !changed; ++i) {
        chain->rebuild_orbit(i);
        Level& lvl = chain->levels[i];
        auto gens = chain->gens_from(i);
        for (int p : lvl.orbit) {
          const Permutation& up =
              lvl.transversal[static_cast<std::size_t>(
                  lvl.transversal_index[static_cast<std::size_t>(p)])];
          for (const Permutation* g : gens) {
            int q = (*g)(p);
            const Permutation& uq =
                lvl.transversal[static_cast<std::size_t>(
                    lvl.transversal_index[static_cast<std::size_t>(q)])];
            Permutation schreier = uq.inverse() * (*g * up);
            auto [residue, level] = chain->strip(schreier, i + 1);
            if (level < chain->levels.size() || !residue.is_identity()) {
              if (place(residue)) {
                changed = true;
                break;
              }
            }
          }
          if (changed) break;
        }
      }
    }
    chain_ = std::move(chain);
  }

  int degree_ = 1;
  std::vector<Permutation> gens_;
  mutable std::unique_ptr<Chain> chain_;
};

// Finite group given by a multiplication table (row g, column h = g*h).
struct GroupTable {
  int size = 0;
  std::vector<std::vector<int>> mult;

  void validate() const {
    if (size < 1 || static_cast<int>(mult.size()) != size)
      throw std::invalid_argument("GroupTable: bad size");
    for (const auto& row : mult) {
      if (static_cast<int>(row.size()) != size)
        throw std::invalid_argument("GroupTable: ragged table");
      for (int x : row)
        if (x < 0 || x >= size)
          throw std::invalid_argument("GroupTable: entry out of range");
    }
  }

  int identity() const {
    for (int e = 0; e < size; ++e)
      if (mult[static_cast<std::size_t>(e)][0] == 0 &&
          mult[0][static_cast<std::size_t>(e)] == 0)
        return e;
    throw std::invalid_argument("GroupTable: no identity");
  }

  static GroupTable from_permgroup(const PermGroup& g,
                                   std::size_t limit = 4096) {
    auto elems = g.elements(limit);
    std::map<Permutation, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i)
      index[elems[i]] = static_cast<int>(i);
    GroupTable t;
    t.size = static_cast<int>(elems.size());
    t.mult.assign(static_cast<std::size_t>(t.size),
                  std::vector<int>(static_cast<std::size_t>(t.size)));
    for (int a = 0; a < t.size; ++a)
      for (int b = 0; b < t.size; ++b)
        t.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            index.at(elems[static_cast<std::size_t>(a)] *
                     elems[static_cast<std::size_t>(b)]);
    return t;
  }
};

struct AlternatingEmbedding {
  int degree = 0;                    // N with image inside A_N
  std::vector<Permutation> images;   // one per group element
};

// Regular representation on |F| points; if any image is odd, extend the
// degree by 2 and multiply the odd images by the transposition on the two
// new points, so every image becomes even.
inline AlternatingEmbedding embed_in_alternating(const GroupTable& f) {
  f.validate();
  int n = f.size;
  std::vector<Permutation> regular;
  regular.reserve(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int h = 0; h < n; ++h)
      img[static_cast<std::size_t>(h)] =
          f.mult[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
    regular.emplace_back(std::move(img));
  }
  bool any_odd = false;
  for (const auto& p : regular)
    if (!p.is_even()) {
      any_odd = true;
      break;
    }
  AlternatingEmbedding out;
  if (!any_odd) {
    out.degree = n;
    out.images = std::move(regular);
    return out;
  }
  out.degree = n + 2;
  Permutation swap2 = Permutation::from_cycles(n + 2, {{n, n + 1}});
  for (const auto& p : regular) {
    std::vector<int> img(static_cast<std::size_t>(n + 2));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = p(i);
    img[static_cast<std::size_t>(n)] = n;
    img[static_cast<std::size_t>(n + 1)] = n + 1;
    Permutation q;
    q.img = std::move(img);
    if (!q.is_even()) q = q * swap2;
    out.images.push_back(std::move(q));
  }
  return out;
}

// Resolves CLI-style target names: A5, S6, C12, D4, PSL2_7.
inline PermGroup named_group(const std::string& name) {
  auto num = [&](std::size_t from) { return std::stoi(name.substr(from)); };
  if (name.size() >= 2 && name[0] == 'A') return PermGroup::alternating(num(1));
  if (name.size() >= 2 && name[0] == 'S') return PermGroup::symmetric(num(1));
  if (name.size() >= 2 && name[0] == 'C') return PermGroup::cyclic(num(1));
  if (name.size() >= 2 && name[0] == 'D') return PermGroup::dihedral(num(1));
  if (name.rfind("PSL2_", 0) == 0) return PermGroup::psl2(num(5));
  throw std::invalid_argument("unknown group name: " + name);
}

}  // namespace cycpres
