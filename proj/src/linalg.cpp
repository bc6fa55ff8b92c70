#include "gaussgrass/linalg.hpp"

namespace gaussgrass {

namespace {

// Multiply each row by the lcm of its denominators. Row scaling by a nonzero
// polynomial changes neither the rank nor the pivot pattern, and for solving
// it is a legal row operation on the augmented system.
Matrix<MultiPoly> clear_denominators(const Matrix<RatFunc>& M) {
  const RingPtr& ring = M(0, 0).ring();
  Matrix<MultiPoly> P(M.rows(), M.cols(), MultiPoly::zero(ring));
  for (std::size_t i = 0; i < M.rows(); ++i) {
    MultiPoly l = MultiPoly::from_int(ring, 1);
    for (std::size_t j = 0; j < M.cols(); ++j) {
      if (!M(i, j).den().is_constant()) l = poly_lcm(l, M(i, j).den());
    }
    for (std::size_t j = 0; j < M.cols(); ++j) {
      const RatFunc& e = M(i, j);
      P(i, j) = e.num() * divexact(l, e.den());
    }
  }
  return P;
}

// Fraction-free elimination on columns [0, limit_cols); pivot selection is
// leftmost nonzero column, topmost nonzero row. Divisions by the previous
// pivot are exact (Sylvester's identity); divexact throwing means a broken
// invariant, never a data-dependent failure.
std::vector<std::size_t> bareiss(Matrix<MultiPoly>& P, std::size_t limit_cols) {
  std::vector<std::size_t> pivots;
  if (P.empty()) return pivots;
  const RingPtr& ring = P(0, 0).ring();
  MultiPoly prev = MultiPoly::from_int(ring, 1);
  const MultiPoly zero = MultiPoly::zero(ring);
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit_cols && r < P.rows(); ++c) {
    std::size_t pr = r;
    while (pr < P.rows() && P(pr, c).is_zero()) ++pr;
    if (pr == P.rows()) continue;
    P.swap_rows(r, pr);
    for (std::size_t i = r + 1; i < P.rows(); ++i) {
      for (std::size_t j = c + 1; j < P.cols(); ++j) {
        P(i, j) = divexact(P(r, c) * P(i, j) - P(i, c) * P(r, j), prev);
      }
      P(i, c) = zero;
    }
    prev = P(r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RankPivots mat_rank_pivots(const Matrix<RatFunc>& M) {
  if (M.empty()) return RankPivots{0, {}};
  Matrix<MultiPoly> P = clear_denominators(M);
  auto pivots = bareiss(P, P.cols());
  return RankPivots{static_cast<int>(pivots.size()), std::move(pivots)};
}

Matrix<RatFunc> mat_solve(const Matrix<RatFunc>& A, const Matrix<RatFunc>& B) {
  if (A.rows() != B.rows()) throw MathError("mat_solve: row count mismatch");
  const RingPtr ring = A.empty() ? (B.empty() ? nullptr : B(0, 0).ring())
                                 : A(0, 0).ring();
  if (A.empty()) {
    // No unknowns: consistent only if B is zero.
    for (std::size_t i = 0; i < B.rows(); ++i)
      for (std::size_t j = 0; j < B.cols(); ++j)
        if (!B(i, j).is_zero()) throw MathError("inconsistent linear system");
    Matrix<RatFunc> X;
    return X;
  }
  const RatFunc rf_zero = RatFunc::zero(ring);
  Matrix<RatFunc> aug(A.rows(), A.cols() + B.cols(), rf_zero);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    for (std::size_t j = 0; j < B.cols(); ++j) aug(i, A.cols() + j) = B(i, j);
  }
  Matrix<MultiPoly> P = clear_denominators(aug);
  auto pivots = bareiss(P, A.cols());

  for (std::size_t i = pivots.size(); i < P.rows(); ++i) {
    for (std::size_t j = A.cols(); j < P.cols(); ++j) {
      if (!P(i, j).is_zero()) throw MathError("inconsistent linear system");
    }
  }

  Matrix<RatFunc> X(A.cols(), B.cols(), rf_zero);
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t pc = pivots[k];
    const RatFunc pivot{P(k, pc)};
    for (std::size_t b = 0; b < B.cols(); ++b) {
      RatFunc acc{P(k, A.cols() + b)};
      for (std::size_t j = pc + 1; j < A.cols(); ++j) {
        if (P(k, j).is_zero() || X(j, b).is_zero()) continue;
        acc = acc - RatFunc(P(k, j)) * X(j, b);
      }
      X(pc, b) = acc / pivot;
    }
  }
  return X;
}

}  // namespace gaussgrass
