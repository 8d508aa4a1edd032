#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cycpres/permgrp.hpp"

using namespace cycpres;

namespace {

// Brute-force order by closure, independent of the stabilizer chain.
std::size_t brute_force_order(const PermGroup& g) {
  return g.elements().size();
}

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("order on reference groups") {
  CHECK(PermGroup::alternating(5).order() == 60);
  CHECK(PermGroup::trivial().order() == 1);
  PermGroup g(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}),
                  Permutation::from_cycles(5, {{0, 1}, {2, 3}})});
  CHECK(g.order() == 60);
  CHECK(brute_force_order(g) == 60);
}

TEST_CASE("order of A_n is n!/2 for n = 3..8") {
  for (int n = 3; n <= 8; ++n)
    CHECK(PermGroup::alternating(n).order() == factorial(n) / 2);
  for (int n = 2; n <= 7; ++n)
    CHECK(PermGroup::symmetric(n).order() == factorial(n));
}

TEST_CASE("contains: sifting verdicts") {
  PermGroup a4 = PermGroup::alternating(4);
  CHECK(a4.contains(Permutation::identity(4)));
  CHECK_FALSE(a4.contains(Permutation::from_cycles(4, {{0, 1}})));

  std::mt19937 rng(4242);
  PermGroup g(6, {Permutation::from_cycles(6, {{0, 1, 2}}),
                  Permutation::from_cycles(6, {{1, 2, 3, 4, 5}})});
  const auto& gens = g.generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(1, 12), inv(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    Permutation p = Permutation::identity(6);
    int L = len(rng);
    for (int i = 0; i < L; ++i) {
      const Permutation& s = gens[pick(rng)];
      p = (inv(rng) ? s.inverse() : s) * p;
    }
    CHECK(g.contains(p));
  }
}

TEST_CASE("sifting agrees with exhaustive enumeration at degree <= 6") {
  std::vector<PermGroup> groups;
  groups.push_back(PermGroup::alternating(5));
  groups.push_back(PermGroup::symmetric(4));
  groups.push_back(PermGroup::dihedral(6));
  groups.push_back(PermGroup::cyclic(6));
  groups.push_back(
      PermGroup(6, {Permutation::from_cycles(6, {{0, 1, 2}, {3, 4, 5}}),
                    Permutation::from_cycles(6, {{0, 3}})}));
  std::vector<Permutation> all_s6;
  {
    std::vector<int> v{0, 1, 2, 3, 4, 5};
    do {
      all_s6.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
  }
  for (const auto& g : groups) {
    if (g.degree() != 6) continue;
    auto elems = g.elements();
    std::set<Permutation> in_group(elems.begin(), elems.end());
    CHECK(g.order() == static_cast<unsigned long>(elems.size()));
    for (const auto& p : all_s6)
      CHECK(g.contains(p) == (in_group.count(p) > 0));
  }
  // Degree-4/5 groups: order vs brute force.
  CHECK(PermGroup::alternating(5).order() ==
        static_cast<unsigned long>(brute_force_order(PermGroup::alternating(5))));
  CHECK(PermGroup::symmetric(4).order() ==
        static_cast<unsigned long>(brute_force_order(PermGroup::symmetric(4))));
}

TEST_CASE("named constructors and CLI names") {
  CHECK(PermGroup::dihedral(4).order() == 8);
  CHECK(PermGroup::cyclic(12).order() == 12);
  CHECK(PermGroup::psl2(5).order() == 60);
  CHECK(PermGroup::psl2(7).order() == 168);
  CHECK(named_group("A5").order() == 60);
  CHECK(named_group("S6").order() == 720);
  CHECK(named_group("C12").order() == 12);
  CHECK(named_group("D4").order() == 8);
  CHECK(named_group("PSL2_7").order() == 168);
  CHECK_THROWS_AS(named_group("Q8"), std::invalid_argument);
}

TEST_CASE("embed_in_alternating reference embeddings") {
  // C_3: regular representation is a 3-cycle, already even.
  auto c3 = embed_in_alternating(GroupTable::from_permgroup(PermGroup::cyclic(3)));
  CHECK(c3.degree == 3);
  for (const auto& p : c3.images) CHECK(p.is_even());

  // C_2: regular rep is odd, so degree grows to 4 and the nontrivial element
  // becomes a double transposition.
  auto c2 = embed_in_alternating(GroupTable::from_permgroup(PermGroup::cyclic(2)));
  CHECK(c2.degree == 4);
  bool found_double = false;
  for (const auto& p : c2.images) {
    CHECK(p.is_even());
    if (p == Permutation::from_cycles(4, {{0, 1}, {2, 3}})) found_double = true;
  }
  CHECK(found_double);

  auto triv = embed_in_alternating(GroupTable::from_permgroup(PermGroup::trivial()));
  CHECK(triv.degree == 1);
  CHECK(triv.images.size() == 1);
}

TEST_CASE("embed_in_alternating is an injective all-even homomorphism") {
  std::vector<GroupTable> fixtures;
  for (int k : {1, 2, 3, 4, 6, 8, 12, 24})
    fixtures.push_back(GroupTable::from_permgroup(PermGroup::cyclic(k)));
  for (int k : {3, 4, 5, 6})
    fixtures.push_back(GroupTable::from_permgroup(PermGroup::dihedral(k)));
  fixtures.push_back(GroupTable::from_permgroup(PermGroup::symmetric(3)));
  fixtures.push_back(GroupTable::from_permgroup(PermGroup::alternating(4)));
  fixtures.push_back(GroupTable::from_permgroup(PermGroup::symmetric(4)));

  for (const auto& f : fixtures) {
    auto emb = embed_in_alternating(f);
    REQUIRE(static_cast<int>(emb.images.size()) == f.size);
    // Injectivity: all images distinct.
    std::set<Permutation> distinct(emb.images.begin(), emb.images.end());
    CHECK(static_cast<int>(distinct.size()) == f.size);
    // All even; homomorphism law on every pair.
    for (const auto& p : emb.images) CHECK(p.is_even());
    for (int a = 0; a < f.size; ++a)
      for (int b = 0; b < f.size; ++b)
        CHECK(emb.images[static_cast<std::size_t>(a)] *
                  emb.images[static_cast<std::size_t>(b)] ==
              emb.images[static_cast<std::size_t>(
                  f.mult[static_cast<std::size_t>(a)]
                        [static_cast<std::size_t>(b)])]);
  }
}
