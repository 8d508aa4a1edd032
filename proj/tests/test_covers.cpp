#include <catch2/catch_amalgamated.hpp>

#include "cycpres/covers.hpp"
#include "cycpres/io.hpp"

using namespace cycpres;

namespace {

Endomorphism shift3() {
  Endomorphism e;
  e.rank = 3;
  e.images = {Word::from_runs(3, {{1, 1}}), Word::from_runs(3, {{2, 1}}),
              Word::from_runs(3, {{0, 1}})};
  return e;
}

}  // namespace

TEST_CASE("cover_presentation relators conjugate by s = t^n") {
  SemidirectOverZ g(3, shift3(), endo_power(shift3(), 2));
  Presentation p = cover_presentation(g, 2);
  REQUIRE(p.num_generators == 4);
  REQUIRE(p.relators.size() == 3);
  // s y_i s^-1 = alpha^2(y_i) = y_{i+2 mod 3}.
  for (int i = 0; i < 3; ++i)
    CHECK(p.relators[static_cast<std::size_t>(i)] ==
          Word::from_runs(4, {{3, 1}, {i, 1}, {3, -1}, {(i + 2) % 3, -1}}));

  // alpha^n = identity gives the direct-product presentation F_r x Z.
  Presentation q = cover_presentation(g, 3);
  for (int i = 0; i < 3; ++i)
    CHECK(q.relators[static_cast<std::size_t>(i)] ==
          Word::from_runs(4, {{3, 1}, {i, 1}, {3, -1}, {i, -1}}));

  // r = 1, alpha = identity, n = 1: Z^2.
  SemidirectOverZ z2(1, Endomorphism::identity(1), Endomorphism::identity(1));
  Presentation r = cover_presentation(z2, 1);
  REQUIRE(r.relators.size() == 1);
  CHECK(r.relators[0] == Word::from_runs(2, {{1, 1}, {0, 1}, {1, -1}, {0, -1}}));
}

TEST_CASE("cover_degree_for_target minimal period") {
  PermGroup a5 = PermGroup::alternating(5);

  SemidirectOverZ ident(2, Endomorphism::identity(2),
                        Endomorphism::identity(2));
  std::vector<Permutation> gen_pair{
      Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}),
      Permutation::from_cycles(5, {{0, 1}, {2, 3}})};
  CHECK(cover_degree_for_target(ident, gen_pair, a5) == 1);

  SemidirectOverZ rot(3, shift3(), endo_power(shift3(), 2));
  std::vector<Permutation> phi{Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}),
                               Permutation::from_cycles(5, {{0, 1}, {2, 3}}),
                               Permutation::identity(5)};
  int period = cover_degree_for_target(rot, phi, a5);
  CHECK(period == 3);
  // Minimality: phi o alpha^j != phi for 0 < j < period.
  for (int j = 1; j < period; ++j) {
    Endomorphism aj = endo_power(rot.alpha, j);
    bool fixed = true;
    for (int i = 0; i < 3; ++i)
      fixed = fixed && evaluate_word(aj.images[static_cast<std::size_t>(i)],
                                     phi, 5) ==
                           phi[static_cast<std::size_t>(i)];
    CHECK_FALSE(fixed);
  }

  // Swap automorphism with equal images is fixed immediately.
  Endomorphism swap;
  swap.rank = 2;
  swap.images = {Word::from_runs(2, {{1, 1}}), Word::from_runs(2, {{0, 1}})};
  SemidirectOverZ sw(2, swap, swap);
  std::vector<Permutation> equal_pair{gen_pair[0], gen_pair[0]};
  CHECK(cover_degree_for_target(sw, equal_pair, PermGroup(5, {gen_pair[0]})) ==
        1);

  CHECK_THROWS_AS(
      cover_degree_for_target(rot, {Permutation::identity(5),
                                    Permutation::identity(5),
                                    Permutation::identity(5)},
                              a5),
      std::invalid_argument);
}

TEST_CASE("lift_to_cyclic_presentation produces verified surjections") {
  CyclicWordFamily family(parse_word("x3 x0^-1"));
  auto fbc = free_by_cyclic_check(family);
  REQUIRE(fbc.has_value());
  PermGroup a5 = PermGroup::alternating(5);
  std::vector<Permutation> phi{Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}),
                               Permutation::from_cycles(5, {{0, 1}, {2, 3}}),
                               Permutation::identity(5)};
  CoverSurjection lift =
      lift_to_cyclic_presentation(family, *fbc, phi, a5, "A5", 6);
  CHECK(lift.n == 6);
  CHECK(lift.period == 3);
  CHECK(lift.images.size() == 6);
  // Independent re-verification of every relator and the image order.
  Presentation g6 = cyclic_presentation(normalized_family(family), 6);
  for (const auto& r : g6.relators)
    CHECK(evaluate_word_letters(r, lift.images, 5).is_identity());
  CHECK(PermGroup(5, lift.images).order() == 60);
  // x_i and x_{i+3} share images (period 3).
  for (int i = 0; i < 3; ++i)
    CHECK(lift.images[static_cast<std::size_t>(i)] ==
          lift.images[static_cast<std::size_t>(i + 3)]);

  // Trivial target works at any valid n.
  PermGroup c1 = PermGroup::trivial();
  std::vector<Permutation> triv{Permutation::identity(1),
                                Permutation::identity(1),
                                Permutation::identity(1)};
  CoverSurjection tl =
      lift_to_cyclic_presentation(family, *fbc, triv, c1, "C1", 5);
  CHECK(tl.period == 1);
  CHECK(tl.n == 5);

  // Rank-1 word: alpha = id, period 1, C_5 reached for any n >= d.
  CyclicWordFamily rank1(parse_word("x1 x0^-1"));
  auto fbc1 = free_by_cyclic_check(rank1);
  REQUIRE(fbc1.has_value());
  PermGroup c5 = PermGroup::cyclic(5);
  std::vector<Permutation> five{Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})};
  for (int n : {2, 3, 7}) {
    CoverSurjection l5 =
        lift_to_cyclic_presentation(rank1, *fbc1, five, c5, "C5", n);
    CHECK(l5.period == 1);
    CHECK(PermGroup(5, l5.images).order() == 5);
  }

  // n not a multiple of the period is rejected.
  CHECK_THROWS_AS(
      lift_to_cyclic_presentation(family, *fbc, phi, a5, "A5", 7),
      std::invalid_argument);
}

TEST_CASE("simple_quotient_schedule combines periods by lcm") {
  CyclicWordFamily family(parse_word("x3 x0^-1"));
  auto fbc = free_by_cyclic_check(family);
  REQUIRE(fbc.has_value());

  std::vector<std::pair<std::string, PermGroup>> a5_only;
  a5_only.emplace_back("A5", PermGroup::alternating(5));
  QuotientSchedule s = simple_quotient_schedule(family, *fbc, a5_only);
  CHECK(s.lcm_period == 3);
  CHECK(s.n == 6);  // smallest multiple of 3 that is >= d = 4
  REQUIRE(s.surjections.size() == 1);
  CHECK(s.surjections[0].n == 6);
  CHECK(s.n % s.surjections[0].period == 0);

  // Rank-2 word with abelian targets.
  CyclicWordFamily rank2(parse_word("x2 x0^-1"));
  auto fbc2 = free_by_cyclic_check(rank2);
  REQUIRE(fbc2.has_value());
  std::vector<std::pair<std::string, PermGroup>> cyc;
  cyc.emplace_back("C2", PermGroup::cyclic(2));
  cyc.emplace_back("C3", PermGroup::cyclic(3));
  QuotientSchedule s2 = simple_quotient_schedule(rank2, *fbc2, cyc);
  CHECK(s2.n >= rank2.d);
  REQUIRE(s2.surjections.size() == 2);
  for (const auto& cs : s2.surjections) {
    CHECK(s2.n % cs.period == 0);
    CHECK(cs.n == s2.n);
  }

  // Empty target list degenerates to n = d.
  QuotientSchedule s3 = simple_quotient_schedule(family, *fbc, {});
  CHECK(s3.n == family.d);
  CHECK(s3.surjections.empty());
}

TEST_CASE("a second member of the arithmetic progression also lifts") {
  CyclicWordFamily family(parse_word("x3 x0^-1"));
  auto fbc = free_by_cyclic_check(family);
  REQUIRE(fbc.has_value());
  std::vector<std::pair<std::string, PermGroup>> a5_only;
  a5_only.emplace_back("A5", PermGroup::alternating(5));
  QuotientSchedule s = simple_quotient_schedule(family, *fbc, a5_only);
  int next_n = s.n + s.lcm_period;
  CoverSurjection again = lift_to_cyclic_presentation(
      family, *fbc, s.surjections[0].fiber_images, a5_only[0].second, "A5",
      next_n);
  CHECK(again.n == next_n);
  CHECK(PermGroup(5, again.images).order() == 60);
}
