#include <algorithm>
#include <random>

#include "doctest.h"
#include "emcg/dnb_action.hpp"
#include "emcg/presentation.hpp"
#include "emcg/properties.hpp"
#include "helpers.hpp"

using namespace emcg;
using testing::W;

TEST_SUITE("presentation") {
  TEST_CASE("build_presentation shapes") {
    const Presentation p3 = build_presentation(3, Flavor::extended);
    CHECK(p3.generators.size() == 3);
    CHECK(p3.relators.size() == 6);

    const Presentation p6 = build_presentation(6, Flavor::extended);
    CHECK(p6.generators.size() == 6);
    CHECK(std::count(p6.relators.begin(), p6.relators.end(), power(W("s1 s2 s3 s4 s5"), 6)) == 1);

    const Presentation o6 = build_presentation(6, Flavor::oriented);
    for (const auto& r : o6.relators) CHECK(count_reflections(r) == 0);
    // commutations for |i-j| >= 2 include [s1, s3]
    CHECK(std::count(o6.relators.begin(), o6.relators.end(), commutator(W("s1"), W("s3"))) == 1);
    // extended contains oriented
    for (const auto& r : o6.relators) {
      CHECK(std::count(p6.relators.begin(), p6.relators.end(), r) == 1);
    }
    for (const auto& r : p6.relators) CHECK_FALSE(r.empty());
    CHECK(p6.relators.size() == p6.relator_names.size());
    CHECK_THROWS_AS(build_presentation(2, Flavor::extended), std::invalid_argument);
  }

  TEST_CASE("dump format") {
    const std::string text = dump(build_presentation(3, Flavor::oriented));
    CHECK(text.rfind("n=3 flavor=oriented\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  }

  TEST_CASE("named_word examples") {
    CHECK(named_word({Named::a}, 6) == W("s3 t s1 s2 s3 s4 s5 S3"));
    CHECK(named_word({Named::alpha2}, 6) == W("s1 s2 s3 s4 s4"));
    CHECK(named_word({Named::gamma, 1}, 6) == W("s1 s3 S5"));
    CHECK(named_word({Named::phi}, 6) == W("s1 s2 s1 s3 s2 s1 s4 s3 s2 s1"));
    CHECK(named_word({Named::alpha0}, 6) == W("s1 s2 s3 s4 s5"));
    CHECK(named_word({Named::alpha1}, 6) == W("s1 s2 s3 s4"));
    CHECK(named_word({Named::b}, 6) == W("t S5 s1 s2 s3 s4 s4"));
    CHECK(named_word({Named::y}, 6) == W("s1 s3 s5"));
    CHECK(named_word({Named::z}, 6) == W("s1 s4"));
    CHECK(named_word({Named::w}, 6) == W("S4 s1"));
    CHECK(named_word({Named::delta, 1}, 6) == W("s1 s2 s4"));
    // gamma subscripts wrap modulo n
    CHECK(named_word({Named::gamma, 5}, 6) == W("s5 s1 S3"));
  }

  TEST_CASE("named_word domain errors") {
    CHECK_THROWS_AS(named_word({Named::gamma, 2}, 6), std::invalid_argument);
    CHECK_THROWS_AS(named_word({Named::delta, 2}, 6), std::invalid_argument);
    CHECK_THROWS_AS(named_word({Named::y}, 7), std::invalid_argument);
    CHECK_THROWS_AS(named_word({Named::a}, 3), std::invalid_argument);
    CHECK_THROWS_AS(wrap_index(6, 6), std::logic_error);
    CHECK(wrap_index(7, 6) == 1);
  }

  TEST_CASE("alpha2 emitted form reduces to the table form") {
    for (int n = 4; n <= 10; ++n) {
      const Word a0 = named_word({Named::alpha0}, n);
      const Word emitted = a0 * Word({sigma(n - 1, -1), sigma(n - 2)});
      CHECK(emitted == named_word({Named::alpha2}, n));
    }
  }

  TEST_CASE("t_normal_form examples") {
    auto f = t_normal_form(W("t s1 t s2"));
    CHECK(f.parity == 0);
    CHECK(f.sigma_word == W("S1 s2"));
    f = t_normal_form(W("t"));
    CHECK(f.parity == 1);
    CHECK(f.sigma_word.empty());
    f = t_normal_form(W("s1 t"));
    CHECK(f.parity == 1);
    CHECK(f.sigma_word == W("S1"));
  }

  TEST_CASE("property: t_normal_form preserves the element and T parity") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
      const Word u = random_word(rng, 6, 12);
      const auto f = t_normal_form(u);
      CHECK(f.parity == count_reflections(u) % 2);
      CHECK(count_reflections(f.sigma_word) == 0);
      const Word rebuilt = (f.parity ? W("t") : Word{}) * f.sigma_word;
      CHECK(equal_in_group(u, rebuilt, 6));
    }
  }

  TEST_CASE("parse_expression") {
    CHECK(parse_expression("t a0 t", 6) == W("t s1 s2 s3 s4 s5 t"));
    CHECK(parse_expression("a0^-1", 6) == W("S5 S4 S3 S2 S1"));
    CHECK(parse_expression("g1^2", 6) == power(W("s1 s3 S5"), 2));
    CHECK(parse_expression("a b", 6) == named_word({Named::a}, 6) * named_word({Named::b}, 6));
    CHECK(parse_expression("d1 phi", 6) ==
          named_word({Named::delta, 1}, 6) * named_word({Named::phi}, 6));
    CHECK(parse_expression("s1^3", 6) == W("s1 s1 s1"));
    CHECK_THROWS_AS(parse_expression("a0^", 6), ParseError);
    CHECK_THROWS_AS(parse_expression("g2", 6), ParseError);
    CHECK_THROWS_AS(parse_expression("zz", 6), ParseError);
    CHECK_THROWS_AS(parse_expression("y", 7), ParseError);
  }
}
