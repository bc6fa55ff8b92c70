#ifndef GAUSSGRASS_CHART_HPP
#define GAUSSGRASS_CHART_HPP

#include <span>
#include <string>
#include <vector>

#include "gaussgrass/linalg.hpp"

namespace gaussgrass {

// A family of m-planes in P^N written on the standard Grassmannian chart: the
// plane at parameter value z is the row span of [ I_{m+1} | f(z) ] with the
// columns placed into original homogeneous coordinates by coord_perm
// (stored slot s holds original coordinate coord_perm[s]).
//
// m == N is allowed as the degenerate full-space family (zero-width chart),
// so expansion results can always be represented.
struct ChartFamily {
  int ambient;                  // N
  int plane_dim;                // m
  RingPtr ring;                 // field + base parameters z1..zn
  Matrix<RatFunc> chart;        // (m+1) x (N-m)
  std::vector<int> coord_perm;  // size N+1; stored slot -> original label

  ChartFamily(int N, int m, RingPtr ring_in, Matrix<RatFunc> chart_in,
              std::vector<int> perm = {});

  const FieldSpec& field() const { return ring->field; }
  int n_params() const { return static_cast<int>(ring->arity()); }
  bool perm_is_identity() const;
  bool is_constant() const;  // every chart entry constant
};

// A single plane, held as the reduced row echelon form of a spanning row set
// (full row rank; unique normal form). For a family whose plane stays on the
// standard chart this is exactly [ I | a ].
struct PlanePoint {
  int ambient;
  Matrix<FieldElem> rows;

  static PlanePoint from_rows(int ambient, Matrix<FieldElem> spanning_rows);
  int plane_dim() const { return static_cast<int>(rows.rows()) - 1; }
  bool operator==(const PlanePoint& o) const {
    return ambient == o.ambient && rows == o.rows;
  }
};

// Parametrization of the projection of the universal family to P^N:
// N+1 coordinates over the base parameters plus affine fiber parameters.
struct ProjParam {
  FieldSpec field;
  int ambient;
  RingPtr ring;             // base params first, then fiber params
  std::size_t base_arity;   // number of leading base params
  std::vector<RatFunc> coords;  // size N+1, original label order

  bool has_fiber_params() const { return ring->arity() > base_arity; }
};

// Parametrization of a family of hyperplanes: N+1 coefficients (the pairing
// with a point of P^N is the label-wise sum of products).
struct HyperplaneParam {
  FieldSpec field;
  int ambient;
  RingPtr ring;
  std::size_t base_arity;
  std::vector<RatFunc> coeffs;  // size N+1, original label order
};

// Plane of the family at a chart point. Errors when a denominator vanishes
// (the point leaves the chart) or the arity is wrong.
PlanePoint plane_at(const ChartFamily& fam, std::span<const FieldElem> point);

// Row-span containment, numeric and symbolic.
bool plane_contains(const PlanePoint& inner, const PlanePoint& outer);
bool plane_contains(const Matrix<RatFunc>& inner_rows,
                    const Matrix<RatFunc>& outer_rows);

// Spanning rows of the family's plane over the function field, with columns
// in original label order.
Matrix<RatFunc> symbolic_rows(const ChartFamily& fam);

// (1 : eta1 : ... : etam : sum_i eta_i f_i^{m+1} : ...), columns re-ordered
// by coord_perm; eta0 = 1.
ProjParam universal_projection(const ChartFamily& fam);

// The same parametrization viewed as a variety over all parameters: fiber
// parameters become base parameters.
ProjParam promote_fiber_params(const ProjParam& proj);

// The (N-m-1)-plane family in the dual projective space: transpose the chart
// matrix, negate every entry, reverse the coordinate order (dual slot k is
// original slot N-k). An involution on the nose.
ChartFamily dual_family(const ChartFamily& fam);

// Hyperplanes through the family's planes, with the last dual fiber
// coordinate normalized to 1: coefficient of Z^i is sum_j zeta_j f^j_i,
// coefficient of Z^j is -zeta_j.
HyperplaneParam hyperplane_family(const ChartFamily& fam);

// Equality as rational maps to the Grassmannian: same ambient data and the
// same plane over the function field (generic-point row-span equality, which
// by uniqueness of the chart normal form is entrywise equality after
// aligning coord_perm).
bool families_equal_as_maps(const ChartFamily& a, const ChartFamily& b);

// Fiber parameter naming: base names stay, new names prefix1..prefixK are
// made unique against the base names by appending '_'.
std::vector<std::string> fiber_param_names(const std::vector<std::string>& base,
                                           const std::string& prefix,
                                           const std::vector<int>& indices);

std::vector<int> identity_perm(int N);
std::vector<int> inverse_perm(const std::vector<int>& p);
std::vector<int> compose_perm(const std::vector<int>& first,
                              const std::vector<int>& then);

}  // namespace gaussgrass

#endif
