#ifndef GAUSSGRASS_LINALG_HPP
#define GAUSSGRASS_LINALG_HPP

#include "gaussgrass/matrix.hpp"
#include "gaussgrass/ratfunc.hpp"

namespace gaussgrass {

struct RankPivots {
  int rank = 0;
  std::vector<std::size_t> pivot_cols;  // leftmost-column, topmost-row rule
};

// Generic rank over the rational-function field, by fraction-free (Bareiss)
// elimination on the denominator-cleared polynomial matrix.
RankPivots mat_rank_pivots(const Matrix<RatFunc>& M);

// One exact solution X of A X = B; unique (and returned) when A has full
// column rank. Throws MathError on an inconsistent system.
Matrix<RatFunc> mat_solve(const Matrix<RatFunc>& A, const Matrix<RatFunc>& B);

// Reduced row echelon form over a field-like type (FieldElem or RatFunc);
// returns the pivot columns. Rows of zeros end up at the bottom.
template <class T>
std::vector<std::size_t> rref_inplace(Matrix<T>& M) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t pr = r;
    while (pr < M.rows() && M(pr, c).is_zero()) ++pr;
    if (pr == M.rows()) continue;
    M.swap_rows(r, pr);
    const T pivot = M(r, c);
    for (std::size_t j = c; j < M.cols(); ++j) M(r, j) = M(r, j) / pivot;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == r || M(i, c).is_zero()) continue;
      const T factor = M(i, c);
      for (std::size_t j = c; j < M.cols(); ++j) {
        M(i, j) = M(i, j) - factor * M(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace gaussgrass

#endif
