#include <doctest.h>

#include "test_support.hpp"

using namespace ggtest;

namespace {

const RingPtr QQ2 = make_ring(FieldSpec::rationals(), {"z1", "z2"});

Matrix<RatFunc> motion_matrix(const RingPtr& ring) {
  Matrix<RatFunc> A(4, 3, RatFunc::zero(ring));
  A(0, 0) = rf("1", ring);
  A(0, 2) = rf("2*z2", ring);
  A(1, 1) = rf("1", ring);
  A(1, 2) = rf("2*z1", ring);
  A(2, 1) = rf("1", ring);
  A(2, 2) = rf("2*z1", ring);
  return A;
}

}  // namespace

TEST_CASE("rank and pivots of the worked 4x3 matrix") {
  auto A = motion_matrix(QQ2);
  auto rp = mat_rank_pivots(A);
  CHECK(rp.rank == 2);
  CHECK(rp.pivot_cols == std::vector<std::size_t>{0, 1});

  auto GF5 = make_ring(FieldSpec::prime_field(5), {"z1", "z2"});
  CHECK(mat_rank_pivots(motion_matrix(GF5)).rank == 2);
}

TEST_CASE("identity matrix rank") {
  Matrix<RatFunc> I(3, 3, RatFunc::zero(QQ2));
  for (int i = 0; i < 3; ++i) I(i, i) = RatFunc::one(QQ2);
  auto rp = mat_rank_pivots(I);
  CHECK(rp.rank == 3);
  CHECK(rp.pivot_cols == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rank is transpose-invariant on random matrices") {
  Rng rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    Matrix<RatFunc> M(3, 4, RatFunc::zero(QQ2));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        M(i, j) = random_ratfunc(QQ2, 2, rng);
      }
    }
    CHECK(mat_rank_pivots(M).rank == mat_rank_pivots(M.transposed()).rank);
  }
}

TEST_CASE("solve the worked pivot relation") {
  auto A = motion_matrix(QQ2);
  Matrix<RatFunc> piv(4, 2, RatFunc::zero(QQ2));
  Matrix<RatFunc> rhs(4, 1, RatFunc::zero(QQ2));
  for (int i = 0; i < 4; ++i) {
    piv(i, 0) = A(i, 0);
    piv(i, 1) = A(i, 1);
    rhs(i, 0) = A(i, 2);
  }
  auto X = mat_solve(piv, rhs);
  CHECK(X(0, 0) == rf("2*z2", QQ2));
  CHECK(X(1, 0) == rf("2*z1", QQ2));
}

TEST_CASE("solve with identity returns the rhs") {
  Matrix<RatFunc> I(2, 2, RatFunc::zero(QQ2));
  I(0, 0) = I(1, 1) = RatFunc::one(QQ2);
  Matrix<RatFunc> B(2, 2, RatFunc::zero(QQ2));
  B(0, 0) = rf("z1", QQ2);
  B(1, 1) = rf("z2/(z1+1)", QQ2);
  auto X = mat_solve(I, B);
  CHECK(X(0, 0) == B(0, 0));
  CHECK(X(1, 1) == B(1, 1));
}

TEST_CASE("solve round-trips a constructed solution") {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix<RatFunc> A(3, 2, RatFunc::zero(QQ2));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 2; ++j) A(i, j) = random_ratfunc(QQ2, 2, rng);
    }
    if (mat_rank_pivots(A).rank < 2) continue;
    Matrix<RatFunc> X0(2, 1, RatFunc::zero(QQ2));
    X0(0, 0) = random_ratfunc(QQ2, 2, rng);
    X0(1, 0) = random_ratfunc(QQ2, 2, rng);
    Matrix<RatFunc> B(3, 1, RatFunc::zero(QQ2));
    for (std::size_t i = 0; i < 3; ++i) {
      B(i, 0) = A(i, 0) * X0(0, 0) + A(i, 1) * X0(1, 0);
    }
    auto X = mat_solve(A, B);
    CHECK(X(0, 0) == X0(0, 0));
    CHECK(X(1, 0) == X0(1, 0));
  }
}

TEST_CASE("inconsistent systems are detected") {
  Matrix<RatFunc> A(2, 1, RatFunc::zero(QQ2));
  A(0, 0) = rf("z1", QQ2);
  A(1, 0) = rf("z1", QQ2);
  Matrix<RatFunc> B(2, 1, RatFunc::zero(QQ2));
  B(0, 0) = rf("1", QQ2);
  B(1, 0) = rf("2", QQ2);
  CHECK_THROWS_WITH_AS(mat_solve(A, B), doctest::Contains("inconsistent"),
                       MathError);
}
