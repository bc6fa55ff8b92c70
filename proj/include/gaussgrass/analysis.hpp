#ifndef GAUSSGRASS_ANALYSIS_HPP
#define GAUSSGRASS_ANALYSIS_HPP

#include <optional>

#include "gaussgrass/expand.hpp"

namespace gaussgrass {

// Three-valued verdict: conditional statements whose hypotheses fail are
// "not applicable", which is distinct from false.
enum class Verdict { yes, no, not_applicable };
std::string verdict_str(Verdict v);

struct RankedMatrix {
  Matrix<RatFunc> matrix;
  int rank;
};

// Jacobian of the expanding map: rows are the base parameters, columns the
// derivatives of the g-coefficients, (mu,nu)-major/minor. Its rank equals
// the generic rank of the full differential.
RankedMatrix dgamma_rank(const ChartFamily& fam);

// The same derivative data regrouped by (mu, e) against rows nu; the rank of
// the induced map on the dual quotient, bounded by m+ - m.
RankedMatrix psi_rank(const ChartFamily& fam);

struct ProjectionRank {
  Matrix<RatFunc> f_matrix;  // n x (N-m) over the base + fiber parameters
  int rank;                  // m + rank(f_matrix)
  bool separable_genfinite;  // rank == n + m
};
// Rank of the differential of the projection from the universal family.
ProjectionRank projection_rank(const ChartFamily& fam);

struct ConormalRank {
  Matrix<RatFunc> g_matrix;  // n x (m+ - m) over base + dual fiber parameters
  int g_rank;
  int rank;  // N - m+ - 1 + g_rank
};
// Rank of the differential of the generalized conormal morphism.
ConormalRank conormal_rank(const ChartFamily& fam);

// Whether shrink ∘ expand is the identity on the family. Hypotheses: over
// the rationals, psi rank equal to m+ - m and dgamma rank equal to the
// parameter count; otherwise not applicable.
Verdict verify_identity(const ChartFamily& fam);

// x ⊂ σγ(x) ⊂ γ(x) over the function field.
bool verify_inclusion_chain(const ChartFamily& fam);

struct AnalysisReport {
  int ambient = 0, plane_dim = 0, n_params = 0;
  int m_plus = 0;
  int m_minus = 0;  // may be -1 (empty plane)
  int rank_dgamma = 0;
  int rank_psi = 0;
  int rank_proj = 0;
  std::optional<int> rank_conormal;  // absent when m+ = N
  int gamma_separable_dimension = 0;  // = rank_dgamma
  bool proj_separable_genfinite = false;
  bool developable = false;
  Verdict identity_composition = Verdict::not_applicable;
  Verdict inclusion_chain = Verdict::not_applicable;
  Verdict diagram_commutes = Verdict::not_applicable;  // developable case only
};

// Full diagnostic report. Developability criterion: the projection is
// separable and generically finite and n = m+ - m; in the developable case
// the Gauss map of the swept variety is checked against the expanding map.
AnalysisReport developability(const ChartFamily& fam);

// Generic rank of the differential of the family map itself (the n x
// (m+1)(N-m) derivative matrix of every chart entry): the separable
// dimension of the parametrized family, which is smaller than n exactly when
// the parametrization is redundant or inseparable.
int chart_jacobian_rank(const ChartFamily& fam);

// gamma^k or sigma^k, one family per step.
std::vector<ChartFamily> iterate(const ChartFamily& fam, MapDirection direction,
                                 int k);

// sigma ∘ gauss of a parametrized variety: the family of closures of the
// Gauss fibers. Errors with "Gauss image is a point" for linear varieties.
ChartFamily maximal_developable(const ProjParam& variety);

// Whether a homogeneous polynomial in Z0..ZN vanishes on the parametrized
// variety.
bool substitute_check(const ProjParam& variety, const MultiPoly& poly);

// Independent tangent-space oracle: the row span of the coordinate vector
// and its partials at a chart point, in normal form. Errors when the point
// leaves the chart or the rank drops below the generic rank.
PlanePoint tangent_oracle(const ProjParam& variety,
                          std::span<const FieldElem> point);

struct CurveReport {
  int m_plus = 0;
  int m_minus = 0;
  bool two_m_identity = false;  // m+ + m- = 2m
  bool developable = false;
  bool mplus_is_m_plus_1 = false;
  bool mminus_is_m_minus_1 = false;
  bool equivalences_agree = false;
  Verdict char2_dgamma_zero = Verdict::not_applicable;
};

// One-parameter families: the 2m identity, the developability equivalences,
// and (in characteristic two) whether the dgamma matrix vanishes
// identically.
CurveReport curve_report(const ChartFamily& fam);

}  // namespace gaussgrass

#endif
