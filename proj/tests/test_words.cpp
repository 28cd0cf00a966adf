#include <map>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace emcg;
using testing::W;
using testing::X;

TEST_SUITE("words") {
  TEST_CASE("reduce examples") {
    CHECK(reduce(std::vector<Letter>{sigma(1), sigma(1, -1)}).empty());
    CHECK(reduce(std::vector<Letter>{}).empty());
    CHECK(reduce(std::vector<Letter>{sigma(1), sigma(2), sigma(2, -1), sigma(1)}) == W("s1 s1"));
  }

  TEST_CASE("concat and invert examples") {
    CHECK(concat(W("s1"), W("S1")).empty());
    CHECK(invert(W("s1 s2")) == W("S2 S1"));
    CHECK(concat(W("s1 s2"), W("S2 s3")) == W("s1 s3"));
    CHECK_THROWS_AS(concat(W("s1"), X("x1")), std::invalid_argument);
  }

  TEST_CASE("cyclic_reduce examples") {
    auto r = cyclic_reduce(W("s1 s2 S1"));
    CHECK(r.core == W("s2"));
    CHECK(r.conjugator == W("s1"));
    r = cyclic_reduce(W("s2"));
    CHECK(r.core == W("s2"));
    CHECK(r.conjugator.empty());
    r = cyclic_reduce(W("s1 s2 s3 S2 S1"));
    CHECK(r.core == W("s3"));
    CHECK(r.conjugator == W("s1 s2"));
  }

  TEST_CASE("solve_conjugacy examples") {
    CHECK(solve_conjugacy(W("s1 s2 S1"), W("s2")) == W("s1"));
    CHECK(solve_conjugacy(W("s2"), W("s2")) == Word{});
    CHECK_FALSE(solve_conjugacy(W("s1"), W("s2")).has_value());
  }

  TEST_CASE("solve_conjugacy shortest with zero trailing power") {
    // x1^3 x2 x1^-3 is also x1^3 x2 (x1^3)^-1; extra x2 powers must not appear.
    const Word u = X("x1 x1 x1 x2 X1 X1 X1");
    const auto c = solve_conjugacy(u, X("x2"));
    REQUIRE(c);
    CHECK(*c == X("x1 x1 x1"));
    CHECK(solve_conjugacy(X("x2 x1 X2"), X("x1")) == X("x2"));
  }

  TEST_CASE("substitute examples") {
    const std::map<int, Word> f{{1, X("x1 x2 X1")}};
    CHECK(substitute(X("x1"), f) == X("x1 x2 X1"));
    CHECK(substitute(X("X1"), f) == X("x1 X2 X1"));
    const std::map<int, Word> swap{{1, X("x2")}, {2, X("x1")}};
    CHECK(substitute(X("x1 x2"), swap) == X("x2 x1"));
    CHECK(substitute(Word::identity(Alphabet::free), f).empty());
    CHECK_THROWS_AS(substitute(X("x3"), f), std::out_of_range);
  }

  TEST_CASE("text grammar") {
    CHECK(to_string(W("s3 S1 t")) == "s3 S1 t");
    CHECK(to_string(Word{}) == "1");
    CHECK(to_string(X("x1 X2")) == "x1 X2");
    CHECK(W("T") == Word({reflection(-1)}));
    CHECK(W("  s1   s2 ") == W("s1 s2"));
    CHECK_THROWS_AS(parse_word("s0", 5), ParseError);
    CHECK_THROWS_AS(parse_word("s6", 5), ParseError);
    CHECK_THROWS_AS(parse_word("q1", 5), ParseError);
    CHECK_THROWS_AS(parse_word("s", 5), ParseError);
    CHECK(count_reflections(W("t s1 T")) == 2);
    CHECK(count_sigmas(W("t s1 S2")) == 2);
  }

  TEST_CASE("power and commutator") {
    CHECK(power(W("s1 s2"), 3) == W("s1 s2 s1 s2 s1 s2"));
    CHECK(power(W("s1 s2"), -1) == W("S2 S1"));
    CHECK(power(W("s1"), 0).empty());
    CHECK(commutator(W("s1"), W("s3")) == W("s1 s3 S1 S3"));
    CHECK(conjugate(W("s1"), W("s2")) == W("s1 s2 S1"));
  }

  TEST_CASE("property: reduce idempotent and length nonincreasing") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 500; ++i) {
      const auto raw = testing::raw_letters(rng, 4, 20);
      const Word r = reduce(raw, Alphabet::free);
      CHECK(r.size() <= raw.size());
      CHECK(reduce(r.letters(), Alphabet::free) == r);
      for (std::size_t k = 1; k < r.size(); ++k) CHECK_FALSE(r[k - 1].cancels(r[k]));
    }
  }

  TEST_CASE("property: group laws of concat and invert") {
    std::mt19937_64 rng(2);
    const Word e = Word::identity(Alphabet::free);
    for (int i = 0; i < 500; ++i) {
      const Word u = testing::free_word(rng, 3, 10);
      const Word v = testing::free_word(rng, 3, 10);
      const Word w = testing::free_word(rng, 3, 10);
      CHECK((u * v) * w == u * (v * w));
      CHECK(u * e == u);
      CHECK(e * u == u);
      CHECK(invert(invert(u)) == u);
      CHECK(invert(u * v) == invert(v) * invert(u));
      CHECK((u * invert(u)).empty());
    }
  }

  TEST_CASE("property: cyclic_reduce reassembles") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
      const Word u = testing::free_word(rng, 3, 16);
      const auto r = cyclic_reduce(u);
      CHECK(conjugate(r.conjugator, r.core) == u);
      if (r.core.size() > 1) CHECK_FALSE(r.core[0].cancels(r.core[r.core.size() - 1]));
    }
  }

  TEST_CASE("property: planted conjugators are recovered") {
    std::mt19937_64 rng(4);
    int solved = 0;
    for (int i = 0; i < 1000; ++i) {
      const Word v = testing::free_word(rng, 3, 8);
      const Word c = testing::free_word(rng, 3, 8);
      const Word u = conjugate(c, v);
      const auto w = solve_conjugacy(u, v);
      REQUIRE(w);
      CHECK(conjugate(*w, v) == u);
      ++solved;
    }
    CHECK(solved == 1000);
  }

  TEST_CASE("property: substitute is a homomorphism") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
      const std::map<int, Word> f{{1, testing::free_word(rng, 3, 5)},
                                  {2, testing::free_word(rng, 3, 5)},
                                  {3, testing::free_word(rng, 3, 5)}};
      const Word u = testing::free_word(rng, 3, 10);
      const Word v = testing::free_word(rng, 3, 10);
      CHECK(substitute(u * v, f) == substitute(u, f) * substitute(v, f));
    }
  }
}
