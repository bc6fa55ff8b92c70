#include "gaussgrass/analysis.hpp"

namespace gaussgrass {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "true";
    case Verdict::no:
      return "false";
    default:
      return "not-applicable";
  }
}

namespace {

Matrix<RatFunc> dgamma_matrix_of(const ExpansionResult& ex, int n) {
  const std::size_t r = ex.g.rows(), q = ex.g.cols();
  Matrix<RatFunc> D(n, q * r, RatFunc::zero(ex.family_out.ring));
  for (int e = 0; e < n; ++e) {
    for (std::size_t l = 0; l < q; ++l) {
      for (std::size_t k = 0; k < r; ++k) {
        D(e, l * r + k) = ex.g(k, l).derivative(e);
      }
    }
  }
  return D;
}

Matrix<RatFunc> psi_matrix_of(const ExpansionResult& ex, int n) {
  const std::size_t r = ex.g.rows(), q = ex.g.cols();
  Matrix<RatFunc> P(r, q * n, RatFunc::zero(ex.family_out.ring));
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = 0; l < q; ++l) {
      for (int e = 0; e < n; ++e) {
        P(k, l * n + e) = ex.g(k, l).derivative(e);
      }
    }
  }
  return P;
}

bool matrix_is_zero(const Matrix<RatFunc>& M) {
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) {
      if (!M(i, j).is_zero()) return false;
    }
  }
  return true;
}

// m- without building the shrunk family, so m- = -1 stays reportable.
int m_minus_of(const ChartFamily& fam) {
  return fam.plane_dim - expansion_rank(dual_family(fam));
}

Verdict verify_identity_of(const ChartFamily& fam, const ExpansionResult& ex) {
  const int n = fam.n_params();
  Matrix<RatFunc> psi = psi_matrix_of(ex, n);
  if (mat_rank_pivots(psi).rank != ex.m_out - fam.plane_dim) {
    return Verdict::not_applicable;
  }
  if (!fam.field().is_rationals()) return Verdict::not_applicable;
  Matrix<RatFunc> dg = dgamma_matrix_of(ex, n);
  if (mat_rank_pivots(dg).rank != n) return Verdict::not_applicable;
  ExpansionResult back = shrink(ex.family_out);
  if (back.family_out.plane_dim != fam.plane_dim) return Verdict::no;
  return families_equal_as_maps(back.family_out, fam) ? Verdict::yes
                                                      : Verdict::no;
}

// The m = 0 family of the universal projection in stored slots (slot 0
// carries the constant 1), fiber parameters promoted to base parameters.
ChartFamily projection_as_point_family(const ChartFamily& fam) {
  ProjParam proj = universal_projection(fam);
  const int N = fam.ambient;
  Matrix<RatFunc> chart(1, N, RatFunc::zero(proj.ring));
  // stored slot s of the input family holds original label coord_perm[s]
  for (int s = 1; s <= N; ++s) {
    chart(0, s - 1) = proj.coords[fam.coord_perm[s]];
  }
  return ChartFamily(N, 0, proj.ring, std::move(chart), fam.coord_perm);
}

}  // namespace

RankedMatrix dgamma_rank(const ChartFamily& fam) {
  ExpansionResult ex = expand(fam);
  Matrix<RatFunc> D = dgamma_matrix_of(ex, fam.n_params());
  int r = mat_rank_pivots(D).rank;
  return RankedMatrix{std::move(D), r};
}

RankedMatrix psi_rank(const ChartFamily& fam) {
  ExpansionResult ex = expand(fam);
  Matrix<RatFunc> P = psi_matrix_of(ex, fam.n_params());
  int r = mat_rank_pivots(P).rank;
  return RankedMatrix{std::move(P), r};
}

ProjectionRank projection_rank(const ChartFamily& fam) {
  ProjParam proj = universal_projection(fam);
  const int N = fam.ambient, m = fam.plane_dim, n = fam.n_params();
  const RingPtr& ext = proj.ring;
  Matrix<RatFunc> F(n, N - m, RatFunc::zero(ext));
  std::vector<RatFunc> eta;
  eta.push_back(RatFunc::one(ext));
  for (int i = 1; i <= m; ++i) eta.push_back(RatFunc::variable(ext, n + i - 1));
  for (int e = 0; e < n; ++e) {
    for (int t = 0; t < N - m; ++t) {
      RatFunc acc = RatFunc::zero(ext);
      for (int i = 0; i <= m; ++i) {
        acc = acc + eta[i] * fam.chart(i, t).derivative(e).extend_to(ext);
      }
      F(e, t) = std::move(acc);
    }
  }
  int fr = mat_rank_pivots(F).rank;
  int rank = m + fr;
  return ProjectionRank{std::move(F), rank, rank == n + m};
}

ConormalRank conormal_rank(const ChartFamily& fam) {
  ExpansionResult ex = expand(fam);
  const int N = fam.ambient, n = fam.n_params();
  if (ex.m_out == N) throw MathError("empty dual fiber: m+ = N");
  const int r = static_cast<int>(ex.g.rows());
  const int q = static_cast<int>(ex.g.cols());

  std::vector<int> fiber_idx;
  for (int mu = ex.m_out + 1; mu <= N - 1; ++mu) fiber_idx.push_back(mu);
  std::vector<std::string> params = fam.ring->params;
  for (auto& name : fiber_param_names(params, "s", fiber_idx)) {
    params.push_back(std::move(name));
  }
  RingPtr ext = make_ring(fam.field(), std::move(params));

  std::vector<RatFunc> sbar;  // sbar[l] multiplies non-pivot column l
  for (int l = 0; l < q - 1; ++l) sbar.push_back(RatFunc::variable(ext, n + l));
  if (q > 0) sbar.push_back(RatFunc::one(ext));

  Matrix<RatFunc> G(n, r, RatFunc::zero(ext));
  for (int e = 0; e < n; ++e) {
    for (int k = 0; k < r; ++k) {
      RatFunc acc = RatFunc::zero(ext);
      for (int l = 0; l < q; ++l) {
        acc = acc + sbar[l] * ex.g(k, l).derivative(e).extend_to(ext);
      }
      G(e, k) = std::move(acc);
    }
  }
  int gr = mat_rank_pivots(G).rank;
  return ConormalRank{std::move(G), gr, N - ex.m_out - 1 + gr};
}

Verdict verify_identity(const ChartFamily& fam) {
  return verify_identity_of(fam, expand(fam));
}

bool verify_inclusion_chain(const ChartFamily& fam) {
  ExpansionResult ex = expand(fam);
  ExpansionResult back = shrink(ex.family_out);
  Matrix<RatFunc> x = symbolic_rows(fam);
  Matrix<RatFunc> gamma = symbolic_rows(ex.family_out);
  Matrix<RatFunc> sigma_gamma = symbolic_rows(back.family_out);
  return plane_contains(x, sigma_gamma) && plane_contains(sigma_gamma, gamma);
}

AnalysisReport developability(const ChartFamily& fam) {
  AnalysisReport rep;
  rep.ambient = fam.ambient;
  rep.plane_dim = fam.plane_dim;
  rep.n_params = fam.n_params();

  ExpansionResult ex = expand(fam);
  rep.m_plus = ex.m_out;
  rep.m_minus = m_minus_of(fam);
  rep.rank_dgamma = mat_rank_pivots(dgamma_matrix_of(ex, rep.n_params)).rank;
  rep.gamma_separable_dimension = rep.rank_dgamma;
  rep.rank_psi = mat_rank_pivots(psi_matrix_of(ex, rep.n_params)).rank;
  ProjectionRank pr = projection_rank(fam);
  rep.rank_proj = pr.rank;
  rep.proj_separable_genfinite = pr.separable_genfinite;
  if (ex.m_out < fam.ambient) {
    rep.rank_conormal = conormal_rank(fam).rank;
  }
  rep.developable = pr.separable_genfinite &&
                    (rep.n_params == rep.m_plus - rep.plane_dim);
  try {
    rep.identity_composition = verify_identity_of(fam, ex);
  } catch (const MathError&) {
    rep.identity_composition = Verdict::not_applicable;
  }
  try {
    rep.inclusion_chain =
        verify_inclusion_chain(fam) ? Verdict::yes : Verdict::no;
  } catch (const MathError&) {
    rep.inclusion_chain = Verdict::not_applicable;
  }
  if (rep.developable) {
    ExpansionResult gx = expand(projection_as_point_family(fam));
    // lift the expand output into the eta-extended ring entrywise
    Matrix<RatFunc> lifted_chart(ex.family_out.chart.rows(),
                                 ex.family_out.chart.cols(),
                                 RatFunc::zero(gx.family_out.ring));
    for (std::size_t i = 0; i < lifted_chart.rows(); ++i) {
      for (std::size_t j = 0; j < lifted_chart.cols(); ++j) {
        lifted_chart(i, j) =
            ex.family_out.chart(i, j).extend_to(gx.family_out.ring);
      }
    }
    ChartFamily expected(fam.ambient, ex.m_out, gx.family_out.ring,
                         std::move(lifted_chart), ex.family_out.coord_perm);
    rep.diagram_commutes = (gx.m_out == ex.m_out &&
                            families_equal_as_maps(gx.family_out, expected))
                               ? Verdict::yes
                               : Verdict::no;
  }
  return rep;
}

int chart_jacobian_rank(const ChartFamily& fam) {
  const int n = fam.n_params();
  const std::size_t width = fam.chart.rows() * fam.chart.cols();
  Matrix<RatFunc> J(n, width, RatFunc::zero(fam.ring));
  for (int e = 0; e < n; ++e) {
    std::size_t col = 0;
    for (std::size_t i = 0; i < fam.chart.rows(); ++i) {
      for (std::size_t j = 0; j < fam.chart.cols(); ++j) {
        J(e, col++) = fam.chart(i, j).derivative(e);
      }
    }
  }
  if (J.empty()) return 0;
  return mat_rank_pivots(J).rank;
}

std::vector<ChartFamily> iterate(const ChartFamily& fam, MapDirection direction,
                                 int k) {
  if (k < 1) throw InputError("iteration count must be at least 1");
  std::vector<ChartFamily> out;
  const ChartFamily* cur = &fam;
  for (int step = 1; step <= k; ++step) {
    try {
      ExpansionResult ex =
          direction == MapDirection::expand ? expand(*cur) : shrink(*cur);
      out.push_back(std::move(ex.family_out));
    } catch (const MathError& err) {
      throw MathError("step " + std::to_string(step) + ": " + err.what());
    }
    cur = &out.back();
  }
  return out;
}

ChartFamily maximal_developable(const ProjParam& variety) {
  ExpansionResult gx = gauss_map(variety);
  try {
    return shrink(gx.family_out).family_out;
  } catch (const MathError& err) {
    throw MathError(std::string("Gauss image is a point: ") + err.what());
  }
}

bool substitute_check(const ProjParam& variety, const MultiPoly& poly) {
  if (poly.ring()->arity() != std::size_t(variety.ambient + 1)) {
    throw InputError("polynomial must be in the N+1 homogeneous coordinates");
  }
  int deg = -1;
  for (const auto& [mono, c] : poly.terms()) {
    long d = 0;
    for (auto e : mono) d += e;
    if (deg >= 0 && d != deg) throw InputError("polynomial is not homogeneous");
    deg = static_cast<int>(d);
  }
  const RingPtr& ring = variety.ring;
  RatFunc value = poly.eval_generic<RatFunc>(
      variety.coords, RatFunc::zero(ring),
      [&](const FieldElem& c) { return RatFunc::constant(ring, c); });
  return value.is_zero();
}

PlanePoint tangent_oracle(const ProjParam& variety,
                          std::span<const FieldElem> point) {
  const std::size_t n = variety.ring->arity();
  if (point.size() != n) throw MathError("tangent_oracle: wrong arity");
  const int N = variety.ambient;
  Matrix<RatFunc> symbolic(n + 1, N + 1, RatFunc::zero(variety.ring));
  for (int j = 0; j <= N; ++j) {
    symbolic(0, j) = variety.coords[j];
    for (std::size_t e = 0; e < n; ++e) {
      symbolic(e + 1, j) = variety.coords[j].derivative(e);
    }
  }
  const int generic_rank = mat_rank_pivots(symbolic).rank;
  Matrix<FieldElem> numeric(n + 1, N + 1, FieldElem::zero(variety.field));
  for (std::size_t i = 0; i <= n; ++i) {
    for (int j = 0; j <= N; ++j) numeric(i, j) = symbolic(i, j).eval(point);
  }
  Matrix<FieldElem> tmp = numeric;
  if (static_cast<int>(rref_inplace(tmp).size()) < generic_rank) {
    throw MathError("rank drop at point (singular point); pick another point");
  }
  return PlanePoint::from_rows(N, std::move(numeric));
}

CurveReport curve_report(const ChartFamily& fam) {
  if (fam.n_params() != 1) {
    throw MathError("curve_report requires a one-parameter family");
  }
  CurveReport rep;
  ExpansionResult ex = expand(fam);
  rep.m_plus = ex.m_out;
  rep.m_minus = m_minus_of(fam);
  const int m = fam.plane_dim;
  rep.two_m_identity = (rep.m_plus + rep.m_minus == 2 * m);
  ProjectionRank pr = projection_rank(fam);
  rep.developable = pr.separable_genfinite && (1 == rep.m_plus - m);
  rep.mplus_is_m_plus_1 = (rep.m_plus == m + 1);
  rep.mminus_is_m_minus_1 = (rep.m_minus == m - 1);
  rep.equivalences_agree = (rep.developable == rep.mplus_is_m_plus_1) &&
                           (rep.mplus_is_m_plus_1 == rep.mminus_is_m_minus_1);
  if (fam.field().characteristic() == 2) {
    rep.char2_dgamma_zero =
        matrix_is_zero(dgamma_matrix_of(ex, 1)) ? Verdict::yes : Verdict::no;
  }
  return rep;
}

}  // namespace gaussgrass
