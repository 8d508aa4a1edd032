#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cycpres/io.hpp"
#include "cycpres/words.hpp"

using namespace cycpres;

namespace {

Word random_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> gen(0, rank - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  Word w(rank);
  for (int i = 0; i < len; ++i) w.push(gen(rng), sign(rng) ? 1 : -1);
  return w;
}

Endomorphism random_endo(std::mt19937& rng, int rank, int len) {
  Endomorphism e;
  e.rank = rank;
  for (int i = 0; i < rank; ++i) e.images.push_back(random_word(rng, rank, len));
  return e;
}

}  // namespace

TEST_CASE("reduce cancels adjacent inverse letters") {
  CHECK(parse_word("x0 x0^-1").empty());
  CHECK(parse_word("x1 x0 x0^-1 x1") == parse_word("x1^2"));
  Word v = parse_word("x3 x0^-1");
  REQUIRE(v.runs().size() == 2);
  CHECK(v.runs()[0] == Syllable{3, 1});
  CHECK(v.runs()[1] == Syllable{0, -1});
}

TEST_CASE("cyclic_reduce returns core and conjugator") {
  auto [core1, conj1] = cyclic_reduce(parse_word("x0 x1 x0^-1"));
  CHECK(core1 == Word::from_runs(2, {{1, 1}}));
  CHECK(conj1 == Word::from_runs(2, {{0, 1}}));

  auto [core2, conj2] = cyclic_reduce(Word(3));
  CHECK(core2.empty());
  CHECK(conj2.empty());

  Word bg = parse_word("x1 x0 x1^-1 x0^-2");
  auto [core3, conj3] = cyclic_reduce(bg);
  CHECK(core3 == bg);
  CHECK(conj3.empty());

  // Reconstruction: w = c * core * c^-1.
  std::mt19937 rng(20240817);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng, 3, 12);
    auto [core, conj] = cyclic_reduce(w);
    CHECK(conj * core * conj.inverse() == w);
    CHECK(is_cyclically_reduced(core));
  }
}

TEST_CASE("apply_endo substitutes generator images") {
  auto [theta, names] = parse_endomorphism("a->b; b->a^2");
  CHECK(apply_endo(theta, parse_word("a b", names)) ==
        parse_word("b a^2", names));
  CHECK(apply_endo(theta, parse_word("a b a^-1", names)) ==
        parse_word("b a^2 b^-1", names));

  Endomorphism id = Endomorphism::identity(2);
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    Word w = random_word(rng, 2, 10);
    CHECK(apply_endo(id, w) == w);
  }
}

TEST_CASE("compose satisfies the composition law") {
  auto [theta, names] = parse_endomorphism("a->b; b->a^2");
  Endomorphism id = Endomorphism::identity(2);
  CHECK(compose(theta, id) == theta);
  CHECK(compose(id, theta) == theta);

  Endomorphism theta2 = compose(theta, theta);
  CHECK(theta2.images[0] == parse_word("a^2", names));
  CHECK(theta2.images[1] == parse_word("b^2", names));

  // Cyclic shift of order 3.
  Endomorphism shift;
  shift.rank = 3;
  shift.images = {Word::from_runs(3, {{1, 1}}), Word::from_runs(3, {{2, 1}}),
                  Word::from_runs(3, {{0, 1}})};
  CHECK(endo_power(shift, 3) == Endomorphism::identity(3));
  CHECK(endo_power(shift, 1) == shift);

  std::mt19937 rng(12345);
  for (int i = 0; i < 100; ++i) {
    Endomorphism e1 = random_endo(rng, 3, 4);
    Endomorphism e2 = random_endo(rng, 3, 4);
    Word w = random_word(rng, 3, 8);
    CHECK(apply_endo(compose(e1, e2), w) == apply_endo(e1, apply_endo(e2, w)));
  }
}

TEST_CASE("abelianize_word gives exponent sums") {
  CHECK(abelianize_word(parse_word("x3 x0^-1")) ==
        std::vector<std::int64_t>{-1, 0, 0, 1});
  CHECK(abelianize_word(Word(4)) == std::vector<std::int64_t>{0, 0, 0, 0});
  CHECK(abelianize_word(parse_word("x1 x0 x1^-1 x0^-2")) ==
        std::vector<std::int64_t>{-1, 0});

  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(rng, 3, 9);
    Word v = random_word(rng, 3, 9);
    auto au = abelianize_word(u), av = abelianize_word(v),
         auv = abelianize_word(u * v);
    for (int j = 0; j < 3; ++j)
      CHECK(auv[static_cast<std::size_t>(j)] ==
            au[static_cast<std::size_t>(j)] + av[static_cast<std::size_t>(j)]);
  }
}

TEST_CASE("reduce is idempotent and kills w * w^-1") {
  std::mt19937 rng(42);
  for (int i = 0; i < 1000; ++i) {
    Word w = random_word(rng, 4, 16);
    // Re-pushing an already reduced word changes nothing.
    Word again(4);
    for (const auto& s : w.runs()) again.push(s.gen, s.exp);
    CHECK(again == w);
    CHECK((w * w.inverse()).empty());
    CHECK((w.inverse() * w).empty());
  }
}

TEST_CASE("word grammar round-trips") {
  for (const char* text : {"x0 x1^-2 x3", "x1 x0 x1^-1 x0^-2", "x2^5"}) {
    Word w = parse_word(text);
    CHECK(parse_word(print_word(w)) == w);
  }
  // Letter names map alphabetically; '*' is a separator.
  NameTable ab({"a", "b"});
  CHECK(parse_word("a*b^-1*a") == parse_word("a b^-1 a", ab));
  // 't' goes last in stable-letter contexts.
  auto texts = std::vector<WordText>{tokenize_word("t a t^-1 a^-1")};
  NameTable names = infer_names(texts, /*stable_t=*/true);
  CHECK(names.names() == std::vector<std::string>{"a", "t"});
  CHECK_THROWS_AS(parse_word("x0 q!"), ParseError);
}
