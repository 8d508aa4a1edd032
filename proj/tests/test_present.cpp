#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "cycpres/io.hpp"
#include "cycpres/present.hpp"

using namespace cycpres;

TEST_CASE("cyclic_presentation shifts indices mod n") {
  CyclicWordFamily family(parse_word("x3 x0^-1"));
  Presentation p = cyclic_presentation(family, 6);
  REQUIRE(p.num_generators == 6);
  REQUIRE(p.relators.size() == 6);
  for (int i = 0; i < 6; ++i)
    CHECK(p.relators[static_cast<std::size_t>(i)] ==
          Word::from_runs(6, {{(i + 3) % 6, 1}, {i, -1}}));

  CyclicWordFamily trivial(parse_word("x0"), 1);
  Presentation q = cyclic_presentation(trivial, 3);
  for (int i = 0; i < 3; ++i)
    CHECK(q.relators[static_cast<std::size_t>(i)] ==
          Word::from_runs(3, {{i, 1}}));

  CyclicWordFamily fib(parse_word("x0^2 x1^-3"));
  Presentation r = cyclic_presentation(fib, 2);
  CHECK(r.relators[0] == Word::from_runs(2, {{0, 2}, {1, -3}}));
  CHECK(r.relators[1] == Word::from_runs(2, {{1, 2}, {0, -3}}));

  CHECK_THROWS_AS(cyclic_presentation(family, 3), std::invalid_argument);
}

TEST_CASE("cyclic_presentation relators are closed under rotation") {
  for (const char* text : {"x3 x0^-1", "x0^2 x1^-3", "x1 x0 x1^-1 x0^-2"}) {
    CyclicWordFamily family(parse_word(text));
    for (int n = family.d; n <= family.d + 3; ++n) {
      Presentation p = cyclic_presentation(family, n);
      for (int i = 0; i < n; ++i)
        CHECK(p.relators[static_cast<std::size_t>(i)].shifted_mod(1, n) ==
              p.relators[static_cast<std::size_t>((i + 1) % n)]);
    }
  }
}

TEST_CASE("v_to_w produces the two-generator word") {
  NameTable xt = NameTable::two_generator();
  CHECK(v_to_w(CyclicWordFamily(parse_word("x3 x0^-1"))) ==
        parse_word("t^3 x t^-3 x^-1", xt));
  CHECK(v_to_w(CyclicWordFamily(parse_word("x1 x0 x1^-1 x0^-2"))) ==
        parse_word("t x t^-1 x t x^-1 t^-1 x^-2", xt));
  CHECK(v_to_w(CyclicWordFamily(parse_word("x0"), 1)) == parse_word("x", xt));

  // The t-exponent sum of w is always zero.
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> gen(0, 3), sign(0, 1), len(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    Word v(4);
    int L = len(rng);
    for (int i = 0; i < L; ++i) v.push(gen(rng), sign(rng) ? 1 : -1);
    if (!is_cyclically_reduced(v) || v.empty()) continue;
    Word w = v_to_w(CyclicWordFamily(v, 4));
    CHECK(abelianize_word(w)[1] == 0);
  }
}

TEST_CASE("h_n_presentation builds <x,t | w, t^n>") {
  NameTable xt = NameTable::two_generator();
  Word w53 = v_to_w(CyclicWordFamily(parse_word("x3 x0^-1")));
  Presentation p = h_n_presentation(w53, 6);
  REQUIRE(p.num_generators == 2);
  REQUIRE(p.relators.size() == 2);
  CHECK(p.relators[0] == w53);
  CHECK(p.relators[1] == parse_word("t^6", xt));

  Presentation c5 = h_n_presentation(parse_word("x", xt), 5);
  CHECK(c5.relators[0] == parse_word("x", xt));
  CHECK(c5.relators[1] == parse_word("t^5", xt));

  Word bg = parse_word("t x t^-1 x t x^-1 t^-1 x^-2", xt);
  Presentation h4 = h_n_presentation(bg, 4);
  CHECK(h4.relators[0] == bg);
  CHECK(h4.relators[1] == parse_word("t^4", xt));
}

TEST_CASE("free_by_cyclic_check applies the single-occurrence criterion") {
  auto data = free_by_cyclic_check(CyclicWordFamily(parse_word("x3 x0^-1")));
  REQUIRE(data.has_value());
  CHECK(data->rank == 3);
  CHECK(data->smallest_index == 0);
  CHECK(data->largest_index == 3);

  CHECK_FALSE(
      free_by_cyclic_check(CyclicWordFamily(parse_word("x0^2 x1^-3"))));
  CHECK_FALSE(free_by_cyclic_check(
      CyclicWordFamily(parse_word("x1 x0 x1^-1 x0^-2"))));
}

TEST_CASE("fiber_automorphism on the shift example") {
  auto data = fiber_automorphism(CyclicWordFamily(parse_word("x3 x0^-1")));
  REQUIRE(data.rank == 3);
  CHECK(data.alpha.images[0] == Word::from_runs(3, {{1, 1}}));
  CHECK(data.alpha.images[1] == Word::from_runs(3, {{2, 1}}));
  CHECK(data.alpha.images[2] == Word::from_runs(3, {{0, 1}}));
  CHECK(data.alpha_inverse.images[0] == Word::from_runs(3, {{2, 1}}));
}

TEST_CASE("fiber_automorphism rank-1 example is the identity") {
  auto data =
      fiber_automorphism(CyclicWordFamily(parse_word("x1 x0^-1"), 2));
  CHECK(data.rank == 1);
  CHECK(data.alpha == Endomorphism::identity(1));
  CHECK(data.alpha_inverse == Endomorphism::identity(1));
}

TEST_CASE("fiber_automorphism inverse law and abelianized determinant") {
  // A small set of accepted free-by-cyclic words, including non-shift ones.
  for (const char* text :
       {"x3 x0^-1", "x1 x0^-1", "x2 x1^2 x0^-1", "x2 x1^-3 x0",
        "x0 x1 x2 x1 x3^-1", "x4 x2^2 x1^-1 x2 x0^-1"}) {
    CyclicWordFamily family(parse_word(text));
    auto data = free_by_cyclic_check(family);
    REQUIRE(data.has_value());
    Endomorphism id = Endomorphism::identity(data->rank);
    CHECK(compose(data->alpha, data->alpha_inverse) == id);
    CHECK(compose(data->alpha_inverse, data->alpha) == id);

    // Abelianized alpha must be invertible over Z: det = +-1, computed here
    // by integer row reduction on the r x r exponent-sum matrix.
    int r = data->rank;
    std::vector<std::vector<std::int64_t>> a(
        static_cast<std::size_t>(r),
        std::vector<std::int64_t>(static_cast<std::size_t>(r), 0));
    for (int i = 0; i < r; ++i) {
      auto col = abelianize_word(data->alpha.images[static_cast<std::size_t>(i)]);
      for (int j = 0; j < r; ++j)
        a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
            col[static_cast<std::size_t>(j)];
    }
    std::int64_t prev = 1, sign = 1;
    bool singular = false;
    for (int k = 0; k + 1 < r && !singular; ++k) {
      if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
        int s = -1;
        for (int i = k + 1; i < r; ++i)
          if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
            s = i;
            break;
          }
        if (s < 0) {
          singular = true;
          break;
        }
        std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(s)]);
        sign = -sign;
      }
      for (int i = k + 1; i < r; ++i) {
        for (int j = k + 1; j < r; ++j)
          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                   a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
               a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                   a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) /
              prev;
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
      }
      prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    REQUIRE_FALSE(singular);
    std::int64_t det =
        sign * a[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(r - 1)];
    CHECK(std::abs(det) == 1);
  }
}

TEST_CASE("normalized_family relabels so the smallest index is zero") {
  CyclicWordFamily family(parse_word("x3 x1^-1"));
  CyclicWordFamily norm = normalized_family(family);
  CHECK(norm.v == parse_word("x2 x0^-1").widened(4));
  CHECK(norm.d == family.d);
}
