#include "ordram/ordinal.hpp"
#include "ordram/parse.hpp"
#include "test_support.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace ordram;
using ordram::testing::O;
using ordram::testing::random_ordinal;

TEST_CASE("grammar examples") {
  CHECK(O("w^2*2+w+2") == O("w^2") * O("2") + O("w") + O("2"));
  CHECK(O("1+w") == O("w"));  // normalization
  CHECK(O("w^(w^2)*3+w*5+7") ==
        omega_power(O("w^2")) * O("3") + O("w") * O("5") + O("7"));
  CHECK(O("  w ^ 2 + 1 ") == O("w^2+1"));
  CHECK(O("w*0") == O("0"));
  CHECK(O("w^0") == O("1"));
}

TEST_CASE("formatting examples") {
  CHECK(format_ordinal(O("w^2+1")) == "w^2+1");
  CHECK(format_ordinal(O("0")) == "0");
  CHECK(format_ordinal(O("w^(w*2)+1")) == "w^(w*2)+1");
  CHECK(format_ordinal(O("w^w")) == "w^w");
  CHECK(format_ordinal(O("w^(w^w)")) == "w^(w^w)");
  CHECK(format_ordinal(O("w*3")) == "w*3");
  CHECK(format_ordinal(O("42")) == "42");
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(O(""), ParseError);
  CHECK_THROWS_AS(O("w^"), ParseError);
  CHECK_THROWS_AS(O("w+"), ParseError);
  CHECK_THROWS_AS(O("w^(w"), ParseError);
  CHECK_THROWS_AS(O("3w"), ParseError);
  CHECK_THROWS_AS(O("x"), ParseError);
  try {
    O("w^2 + q");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 6);
  }
}

TEST_CASE("round trip on random ordinals") {
  std::mt19937_64 rng(909);
  for (int i = 0; i < 2000; ++i) {
    Ordinal a = random_ordinal(rng, 3, 4, 60);
    CHECK(parse_ordinal(format_ordinal(a)) == a);
  }
}
