#include <doctest.h>

#include "test_support.hpp"

using namespace ggtest;

TEST_CASE("field spec validation") {
  CHECK(FieldSpec::rationals().str() == "QQ");
  CHECK(FieldSpec::prime_field(5).str() == "GF 5");
  CHECK_THROWS_AS(FieldSpec::prime_field(4), InputError);
  CHECK_THROWS_AS(FieldSpec::prime_field(1), InputError);
  CHECK_THROWS_AS(FieldSpec::prime_field(91), InputError);  // 7*13
  CHECK(parse_field_spec("GF:7") == FieldSpec::prime_field(7));
  CHECK(parse_field_spec("GF 7") == FieldSpec::prime_field(7));
  CHECK_THROWS_AS(parse_field_spec("RR"), InputError);
}

TEST_CASE("rational arithmetic stays reduced") {
  auto F = FieldSpec::rationals();
  auto half = FieldElem::rational(F, 1, 2);
  auto third = FieldElem::rational(F, 1, 3);
  CHECK((half + third).str() == "5/6");
  CHECK((half * third).str() == "1/6");
  CHECK((half - half).is_zero());
  CHECK(FieldElem::rational(F, 2, -4).str() == "-1/2");
  CHECK((half / third).str() == "3/2");
  CHECK_THROWS_AS(half / FieldElem::zero(F), MathError);
}

TEST_CASE("prime field residues") {
  auto F = FieldSpec::prime_field(5);
  auto a = FieldElem::integer(F, 7);
  CHECK(a.str() == "2");
  CHECK(a.neg().str() == "3");
  CHECK((a * a).str() == "4");
  CHECK(a.inv().str() == "3");  // 2*3 = 6 = 1 mod 5
  CHECK(FieldElem::integer(F, -1).str() == "4");
  CHECK(a.pow(4).is_one());  // Fermat
}

TEST_CASE("mixed-field arithmetic is rejected") {
  auto a = FieldElem::one(FieldSpec::rationals());
  auto b = FieldElem::one(FieldSpec::prime_field(5));
  CHECK_THROWS_AS(a + b, MathError);
}
