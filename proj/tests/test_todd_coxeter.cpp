#include <algorithm>
#include <random>

#include "doctest.h"
#include "emcg/harness.hpp"
#include "emcg/presentation.hpp"
#include "emcg/todd_coxeter.hpp"
#include "helpers.hpp"

using namespace emcg;
using testing::W;

namespace {

std::vector<Word> sigmas(int n) {
  std::vector<Word> out;
  for (int i = 1; i < n; ++i) out.push_back(Word({sigma(i)}));
  return out;
}

std::size_t index_of(const Presentation& p, const std::vector<Word>& gens) {
  const auto r = enumerate(p, gens);
  REQUIRE(r.finished());
  CHECK(verify_table(r.table, p, gens));
  return r.index;
}

}  // namespace

TEST_SUITE("todd_coxeter") {
  TEST_CASE("enumerate examples") {
    const Presentation p6 = build_presentation(6, Flavor::extended);
    CHECK(index_of(p6, sigmas(6)) == 2);
    CHECK(index_of(p6, {named_word({Named::a}, 6), named_word({Named::b}, 6)}) == 1);
    CHECK(index_of(build_presentation(3, Flavor::extended), {}) == 12);
    const Presentation p5 = build_presentation(5, Flavor::extended);
    CHECK(index_of(p5, {W("t s1", 5), parse_expression("t a0", 5)}) == 1);
  }

  TEST_CASE("small groups") {
    CHECK(index_of(build_presentation(3, Flavor::oriented), {}) == 6);
    CHECK(index_of(build_presentation(3, Flavor::extended), {W("t", 3)}) == 6);
  }

  TEST_CASE("n = 3 index agrees with the oracle Cayley closure") {
    const auto closure = cayley_closure_order(3, Flavor::extended);
    REQUIRE(closure);
    CHECK(*closure == 12);
    const auto oriented = cayley_closure_order(3, Flavor::oriented);
    REQUIRE(oriented);
    CHECK(*oriented == 6);
  }

  TEST_CASE("errors and overflow") {
    const Presentation p = build_presentation(6, Flavor::oriented);
    CHECK_THROWS_AS(enumerate(p, {W("t")}), std::invalid_argument);
    EnumerationLimits zero;
    zero.max_cosets = 0;
    CHECK_THROWS_AS(enumerate(p, {}, zero), std::invalid_argument);
    EnumerationLimits tiny;
    tiny.max_cosets = 50;
    const auto r = enumerate(p, {W("s1")}, tiny);
    CHECK_FALSE(r.finished());
    CHECK_FALSE(r.overflow_reason.empty());
  }

  TEST_CASE("standardized table is invariant under relator order") {
    Presentation p = build_presentation(4, Flavor::extended);
    const std::vector<Word> gens{W("t", 4), W("s1", 4), W("s2", 4)};
    const auto base = enumerate(p, {W("s1 s2", 4), W("t", 4)});
    REQUIRE(base.finished());
    std::mt19937_64 rng(41);
    for (int i = 0; i < 5; ++i) {
      std::shuffle(p.relators.begin(), p.relators.end(), rng);
      const auto r = enumerate(p, {W("s1 s2", 4), W("t", 4)});
      REQUIRE(r.finished());
      CHECK(r.table == base.table);
    }
  }

  TEST_CASE("monotonicity in the subgroup generators") {
    const Presentation p = build_presentation(5, Flavor::extended);
    const Word a0 = parse_expression("a0", 5);
    const std::vector<std::vector<Word>> chain{
        {a0, W("s1", 5)},
        {a0, W("s1", 5), W("s2", 5)},
        {a0, W("s1", 5), W("t", 5)},
    };
    CHECK(index_of(p, chain[0]) == 2);
    CHECK(index_of(p, chain[1]) <= index_of(p, chain[0]));
    CHECK(index_of(p, chain[2]) <= index_of(p, chain[0]));
    CHECK(index_of(p, chain[2]) == 1);
    const Presentation p3 = build_presentation(3, Flavor::extended);
    CHECK(index_of(p3, {}) >= index_of(p3, {W("s1", 3)}));
    CHECK(index_of(p3, {W("s1", 3)}) >= index_of(p3, {W("s1", 3), W("t", 3)}));
  }

  TEST_CASE("trace and act") {
    const Presentation p = build_presentation(3, Flavor::extended);
    const auto r = enumerate(p, {});
    REQUIRE(r.finished());
    for (const auto& rel : p.relators) {
      for (std::size_t c = 0; c < r.index; ++c) CHECK(r.table.trace(c, rel) == c);
    }
    CHECK(r.table.act(r.table.act(0, sigma(1)), sigma(1, -1)) == 0);
    CHECK_THROWS_AS(r.table.act(0, sigma(5)), std::out_of_range);
  }

  TEST_CASE("determinism") {
    const Presentation p = build_presentation(6, Flavor::extended);
    const std::vector<Word> gens{named_word({Named::a}, 6), named_word({Named::b}, 6)};
    const auto r1 = enumerate(p, gens);
    const auto r2 = enumerate(p, gens);
    CHECK(r1.table == r2.table);
    CHECK(r1.stats.defined == r2.stats.defined);
  }
}
