#include <doctest.h>

#include "test_support.hpp"

using namespace ggtest;

namespace {
const RingPtr QQ2 = make_ring(FieldSpec::rationals(), {"z1", "z2"});
}

TEST_CASE("grammar basics") {
  auto p = poly_parse("2*z1*z2", QQ2);
  CHECK(p.term_count() == 1);
  CHECK(p.str() == "2*z1*z2");
  CHECK(poly_parse("0", QQ2).is_zero());
  CHECK(poly_parse("z1^2 - z1^2", QQ2).is_zero());
  CHECK(poly_parse("-z1^2", QQ2) == poly_parse("0 - z1^2", QQ2));
  CHECK(poly_parse("(z1 + z2)^2", QQ2) ==
        poly_parse("z1^2 + 2*z1*z2 + z2^2", QQ2));
  CHECK(poly_parse("2^3", QQ2) == poly_parse("8", QQ2));
  CHECK(poly_parse("1 - -1", QQ2) == poly_parse("2", QQ2));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_WITH_AS(poly_parse("2*z1*", QQ2),
                       doctest::Contains("position 6"), InputError);
  CHECK_THROWS_WITH_AS(poly_parse("2*q7", QQ2),
                       doctest::Contains("unknown parameter name 'q7'"),
                       InputError);
  CHECK_THROWS_WITH_AS(poly_parse("2.5*z1", QQ2),
                       doctest::Contains("non-integer literal"), InputError);
  CHECK_THROWS_AS(poly_parse("2 z1", QQ2), InputError);   // implicit product
  CHECK_THROWS_AS(poly_parse("z1^z2", QQ2), InputError);  // symbolic exponent
  CHECK_THROWS_AS(poly_parse("z1^2^3", QQ2), InputError);
  CHECK_THROWS_AS(poly_parse("(z1", QQ2), InputError);
}

TEST_CASE("division only in ratfunc mode") {
  CHECK_THROWS_WITH_AS(poly_parse("z1/z2", QQ2),
                       doctest::Contains("division is not allowed"), InputError);
  auto q = ratfunc_parse("z1/z2", QQ2);
  CHECK(q.num() == poly_parse("z1", QQ2));
  CHECK(q.den() == poly_parse("z2", QQ2));
  CHECK_THROWS_AS(ratfunc_parse("z1/0", QQ2), InputError);
  CHECK(ratfunc_parse("(z1^2 - z2^2)/(z1 - z2)", QQ2) ==
        RatFunc(poly_parse("z1 + z2", QQ2)));
}

TEST_CASE("printing round-trips through the grammar") {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    RatFunc r = random_ratfunc(QQ2, 3, rng);
    CHECK(ratfunc_parse(r.str(), QQ2) == r);
  }
  auto GF5 = make_ring(FieldSpec::prime_field(5), {"z1", "z2"});
  for (int trial = 0; trial < 20; ++trial) {
    RatFunc r = random_ratfunc(GF5, 3, rng);
    CHECK(ratfunc_parse(r.str(), GF5) == r);
  }
  // fractional coefficients print grammar-safe
  auto half = RatFunc(poly_parse("z1", QQ2)) / RatFunc(poly_parse("2", QQ2));
  CHECK(half.str() == "(z1)/(2)");
  CHECK(ratfunc_parse(half.str(), QQ2) == half);
}
