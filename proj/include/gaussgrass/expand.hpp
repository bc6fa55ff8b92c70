#ifndef GAUSSGRASS_EXPAND_HPP
#define GAUSSGRASS_EXPAND_HPP

#include "gaussgrass/chart.hpp"

namespace gaussgrass {

enum class MapDirection { expand, shrink };

// First-order motion of the family: the n*(m+1) x (N-m) matrix whose column
// for chart slot j stacks the derivatives d f^j_i / d z^e, rows ordered
// e-major, i-minor. Its rank is m+ - m.
Matrix<RatFunc> phi_matrix(const ChartFamily& fam);

// Result of an expanding or shrinking step.
//
// For Expand: pivots are the stored-slot labels (m+1-based) of the chart
// columns chosen as the image basis; g(k, l) is the coefficient expressing
// non-pivot column l against pivot column k; family_out parametrizes the
// image over the same base parameters; perm is the stored-slot relabeling
// with family_out.coord_perm = input.coord_perm ∘ perm.
//
// For Shrink (computed as dual ∘ expand ∘ dual): pivots and g carry the
// dual-side expansion data, with pivot labels mapped back through slot
// k <-> N-k; perm relates the two coord_perms exactly as above.
struct ExpansionResult {
  MapDirection direction;
  int m_out;
  std::vector<int> pivots;
  Matrix<RatFunc> g;
  ChartFamily family_out;
  std::vector<int> perm;
};

// The expanding map on the chart. Errors: constant family ("parameters do
// not move the plane"), zero-parameter family, m = N.
ExpansionResult expand(const ChartFamily& fam);

// The shrinking map, via the chart-level duality involution. Additionally
// errors when the shrunk plane is empty (m- = -1).
ExpansionResult shrink(const ChartFamily& fam);

// Rank of the phi matrix alone (m+ = m + rank); shares expand's degeneracy
// checks but never builds the image family, so it also serves the m- = -1
// case through the dual.
int expansion_rank(const ChartFamily& fam);

// Hyperplanes through the expanded plane, with dual fiber coordinates
// s_{m+ +1}..s_{N-1} and s_N = 1; the coefficient of the last permuted
// coordinate is -1.
using ConormalParam = HyperplaneParam;
ConormalParam conormal_param(const ChartFamily& fam);

// The Gauss map as the m = 0 expanding map of a parametrized variety.
// Requires a fiber-free parametrization with coords[0] identically 1.
ExpansionResult gauss_map(const ProjParam& variety);

}  // namespace gaussgrass

#endif
