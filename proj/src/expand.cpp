#include "gaussgrass/expand.hpp"

#include <algorithm>

namespace gaussgrass {

Matrix<RatFunc> phi_matrix(const ChartFamily& fam) {
  const int N = fam.ambient, m = fam.plane_dim;
  const int n = fam.n_params();
  if (n == 0) throw MathError("zero-parameter family has no first-order motion");
  Matrix<RatFunc> phi(n * (m + 1), N - m, RatFunc::zero(fam.ring));
  for (int e = 0; e < n; ++e) {
    for (int i = 0; i <= m; ++i) {
      for (int t = 0; t < N - m; ++t) {
        phi(e * (m + 1) + i, t) = fam.chart(i, t).derivative(e);
      }
    }
  }
  return phi;
}

int expansion_rank(const ChartFamily& fam) {
  if (fam.plane_dim == fam.ambient) {
    throw MathError("no ambient room: the family already fills the space");
  }
  return mat_rank_pivots(phi_matrix(fam)).rank;
}

ExpansionResult expand(const ChartFamily& fam) {
  const int N = fam.ambient, m = fam.plane_dim;
  if (m == N) throw MathError("no ambient room: the family already fills the space");
  Matrix<RatFunc> phi = phi_matrix(fam);
  RankPivots rp = mat_rank_pivots(phi);
  if (rp.rank == 0) {
    throw MathError("parameters do not move the plane (constant family)");
  }
  const int r = rp.rank;
  const int m_out = m + r;

  std::vector<std::size_t> piv = rp.pivot_cols;
  std::vector<std::size_t> nonpiv;
  for (std::size_t t = 0; t < std::size_t(N - m); ++t) {
    if (!std::binary_search(piv.begin(), piv.end(), t)) nonpiv.push_back(t);
  }

  // g solves column_mu = sum_nu g(nu,mu) * column_nu exactly.
  const RatFunc rf_zero = RatFunc::zero(fam.ring);
  Matrix<RatFunc> A(phi.rows(), piv.size(), rf_zero);
  Matrix<RatFunc> B(phi.rows(), nonpiv.size(), rf_zero);
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    for (std::size_t k = 0; k < piv.size(); ++k) A(i, k) = phi(i, piv[k]);
    for (std::size_t l = 0; l < nonpiv.size(); ++l) B(i, l) = phi(i, nonpiv[l]);
  }
  Matrix<RatFunc> g = mat_solve(A, B);

  // Relabel stored slots so pivot columns occupy m+1..m_out.
  std::vector<int> perm(N + 1);
  for (int k = 0; k <= m; ++k) perm[k] = k;
  for (std::size_t k = 0; k < piv.size(); ++k) {
    perm[m + 1 + k] = m + 1 + static_cast<int>(piv[k]);
  }
  for (std::size_t l = 0; l < nonpiv.size(); ++l) {
    perm[m_out + 1 + l] = m + 1 + static_cast<int>(nonpiv[l]);
  }

  // Image chart: base rows f^mu_i - sum_nu g^mu_nu f^nu_i, then the g rows.
  Matrix<RatFunc> out(m_out + 1, N - m_out, rf_zero);
  for (std::size_t l = 0; l < nonpiv.size(); ++l) {
    for (int i = 0; i <= m; ++i) {
      RatFunc acc = fam.chart(i, nonpiv[l]);
      for (std::size_t k = 0; k < piv.size(); ++k) {
        acc = acc - g(k, l) * fam.chart(i, piv[k]);
      }
      out(i, l) = std::move(acc);
    }
    for (std::size_t k = 0; k < piv.size(); ++k) {
      out(m + 1 + k, l) = g(k, l);
    }
  }

  std::vector<int> pivots;
  for (std::size_t t : piv) pivots.push_back(m + 1 + static_cast<int>(t));

  ChartFamily family_out(N, m_out, fam.ring, std::move(out),
                         compose_perm(fam.coord_perm, perm));
  return ExpansionResult{MapDirection::expand, m_out,      std::move(pivots),
                         std::move(g),         family_out, std::move(perm)};
}

ExpansionResult shrink(const ChartFamily& fam) {
  const int N = fam.ambient;
  ExpansionResult inner = expand(dual_family(fam));
  const int m_minus = N - 1 - inner.m_out;
  if (m_minus < 0) {
    throw MathError("shrinking reached the empty plane (m- = -1)");
  }
  ChartFamily family_out = dual_family(inner.family_out);
  std::vector<int> pivots;
  for (int p : inner.pivots) pivots.push_back(N - p);
  std::sort(pivots.begin(), pivots.end());
  std::vector<int> perm =
      compose_perm(inverse_perm(fam.coord_perm), family_out.coord_perm);
  return ExpansionResult{MapDirection::shrink, m_minus,    std::move(pivots),
                         std::move(inner.g),   family_out, std::move(perm)};
}

ConormalParam conormal_param(const ChartFamily& fam) {
  ExpansionResult ex = expand(fam);
  if (ex.m_out == fam.ambient) {
    throw MathError("empty dual fiber: m+ = N");
  }
  return hyperplane_family(ex.family_out);
}

ExpansionResult gauss_map(const ProjParam& variety) {
  if (variety.has_fiber_params()) {
    throw MathError("gauss_map requires a fiber-free parametrization");
  }
  const RatFunc one = RatFunc::one(variety.ring);
  if (!(variety.coords[0] == one)) {
    throw MathError(
        "gauss_map: coordinate 0 must be identically 1 (re-chart the input)");
  }
  const int N = variety.ambient;
  Matrix<RatFunc> chart(1, N, RatFunc::zero(variety.ring));
  for (int j = 1; j <= N; ++j) chart(0, j - 1) = variety.coords[j];
  ChartFamily fam(N, 0, variety.ring, std::move(chart));
  return expand(fam);
}

}  // namespace gaussgrass
