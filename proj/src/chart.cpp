#include "gaussgrass/chart.hpp"

#include <algorithm>
#include <set>

namespace gaussgrass {

std::vector<int> identity_perm(int N) {
  std::vector<int> p(N + 1);
  for (int i = 0; i <= N; ++i) p[i] = i;
  return p;
}

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

// (outer ∘ inner)[k] = outer[inner[k]].
std::vector<int> compose_perm(const std::vector<int>& outer,
                              const std::vector<int>& inner) {
  std::vector<int> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

ChartFamily::ChartFamily(int N, int m, RingPtr ring_in, Matrix<RatFunc> chart_in,
                         std::vector<int> perm)
    : ambient(N),
      plane_dim(m),
      ring(std::move(ring_in)),
      chart(std::move(chart_in)),
      coord_perm(std::move(perm)) {
  if (N < 1 || m < 0 || m > N) {
    throw InputError("bad plane family dimensions: m = " + std::to_string(m) +
                     ", N = " + std::to_string(N));
  }
  if (chart.rows() != std::size_t(m + 1) || chart.cols() != std::size_t(N - m)) {
    throw InputError("chart matrix is " + std::to_string(chart.rows()) + "x" +
                     std::to_string(chart.cols()) + ", expected " +
                     std::to_string(m + 1) + "x" + std::to_string(N - m));
  }
  if (coord_perm.empty()) coord_perm = identity_perm(N);
  if (coord_perm.size() != std::size_t(N + 1)) {
    throw InputError("coordinate permutation must have length N+1");
  }
  std::set<int> seen;
  for (int v : coord_perm) {
    if (v < 0 || v > N || !seen.insert(v).second) {
      throw InputError("coordinate permutation is not a bijection on {0..N}");
    }
  }
  for (std::size_t i = 0; i < chart.rows(); ++i) {
    for (std::size_t j = 0; j < chart.cols(); ++j) {
      if (!same_ring(chart(i, j).ring(), ring)) {
        throw InputError("chart entry ring mismatch");
      }
    }
  }
}

bool ChartFamily::perm_is_identity() const {
  for (std::size_t i = 0; i < coord_perm.size(); ++i) {
    if (coord_perm[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool ChartFamily::is_constant() const {
  for (std::size_t i = 0; i < chart.rows(); ++i) {
    for (std::size_t j = 0; j < chart.cols(); ++j) {
      if (!chart(i, j).is_constant()) return false;
    }
  }
  return true;
}

PlanePoint PlanePoint::from_rows(int ambient, Matrix<FieldElem> spanning_rows) {
  if (spanning_rows.cols() != std::size_t(ambient + 1)) {
    throw MathError("plane rows have wrong width");
  }
  rref_inplace(spanning_rows);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < spanning_rows.rows(); ++i) {
    bool any = false;
    for (std::size_t j = 0; j < spanning_rows.cols(); ++j) {
      if (!spanning_rows(i, j).is_zero()) {
        any = true;
        break;
      }
    }
    if (any) nonzero = i + 1;
  }
  if (nonzero == 0) throw MathError("plane rows are all zero");
  Matrix<FieldElem> kept(nonzero, spanning_rows.cols(), spanning_rows(0, 0));
  for (std::size_t i = 0; i < nonzero; ++i) {
    for (std::size_t j = 0; j < spanning_rows.cols(); ++j) {
      kept(i, j) = spanning_rows(i, j);
    }
  }
  return PlanePoint{ambient, std::move(kept)};
}

PlanePoint plane_at(const ChartFamily& fam, std::span<const FieldElem> point) {
  if (point.size() != std::size_t(fam.n_params())) {
    throw MathError("plane_at: expected " + std::to_string(fam.n_params()) +
                    " coordinates, got " + std::to_string(point.size()));
  }
  const int N = fam.ambient, m = fam.plane_dim;
  const FieldElem zero = FieldElem::zero(fam.field());
  const FieldElem one = FieldElem::one(fam.field());
  Matrix<FieldElem> rows(m + 1, N + 1, zero);
  for (int i = 0; i <= m; ++i) {
    rows(i, fam.coord_perm[i]) = one;
    for (int t = 0; t < N - m; ++t) {
      rows(i, fam.coord_perm[m + 1 + t]) = fam.chart(i, t).eval(point);
    }
  }
  return PlanePoint::from_rows(N, std::move(rows));
}

namespace {

template <class T>
int rank_of(const Matrix<T>& M);

template <>
int rank_of(const Matrix<FieldElem>& M) {
  Matrix<FieldElem> tmp = M;
  return static_cast<int>(rref_inplace(tmp).size());
}

template <>
int rank_of(const Matrix<RatFunc>& M) {
  return mat_rank_pivots(M).rank;
}

template <class T>
bool contains_impl(const Matrix<T>& inner, const Matrix<T>& outer) {
  if (inner.cols() != outer.cols()) {
    throw MathError("plane containment: ambient dimension mismatch");
  }
  return rank_of(vstack(outer, inner)) == rank_of(outer);
}

}  // namespace

bool plane_contains(const PlanePoint& inner, const PlanePoint& outer) {
  return contains_impl(inner.rows, outer.rows);
}

bool plane_contains(const Matrix<RatFunc>& inner_rows,
                    const Matrix<RatFunc>& outer_rows) {
  return contains_impl(inner_rows, outer_rows);
}

Matrix<RatFunc> symbolic_rows(const ChartFamily& fam) {
  const int N = fam.ambient, m = fam.plane_dim;
  Matrix<RatFunc> rows(m + 1, N + 1, RatFunc::zero(fam.ring));
  const RatFunc one = RatFunc::one(fam.ring);
  for (int i = 0; i <= m; ++i) {
    rows(i, fam.coord_perm[i]) = one;
    for (int t = 0; t < N - m; ++t) {
      rows(i, fam.coord_perm[m + 1 + t]) = fam.chart(i, t);
    }
  }
  return rows;
}

std::vector<std::string> fiber_param_names(const std::vector<std::string>& base,
                                           const std::string& prefix,
                                           const std::vector<int>& indices) {
  std::set<std::string> taken(base.begin(), base.end());
  std::vector<std::string> names;
  names.reserve(indices.size());
  for (int idx : indices) {
    std::string name = prefix + std::to_string(idx);
    while (taken.count(name)) name += "_";
    taken.insert(name);
    names.push_back(std::move(name));
  }
  return names;
}

ProjParam universal_projection(const ChartFamily& fam) {
  const int N = fam.ambient, m = fam.plane_dim;
  std::vector<int> fiber_idx;
  for (int i = 1; i <= m; ++i) fiber_idx.push_back(i);
  std::vector<std::string> params = fam.ring->params;
  for (auto& name : fiber_param_names(params, "eta", fiber_idx)) {
    params.push_back(std::move(name));
  }
  RingPtr ext = make_ring(fam.field(), std::move(params));
  const std::size_t n = fam.ring->arity();

  // eta_0 = 1; eta_i lives at index n + i - 1 of the extended ring.
  std::vector<RatFunc> eta;
  eta.push_back(RatFunc::one(ext));
  for (int i = 1; i <= m; ++i) eta.push_back(RatFunc::variable(ext, n + i - 1));

  std::vector<RatFunc> stored(N + 1, RatFunc::zero(ext));
  for (int i = 0; i <= m; ++i) stored[i] = eta[i];
  for (int t = 0; t < N - m; ++t) {
    RatFunc acc = RatFunc::zero(ext);
    for (int i = 0; i <= m; ++i) {
      acc = acc + eta[i] * fam.chart(i, t).extend_to(ext);
    }
    stored[m + 1 + t] = std::move(acc);
  }
  std::vector<RatFunc> coords(N + 1, RatFunc::zero(ext));
  for (int s = 0; s <= N; ++s) coords[fam.coord_perm[s]] = stored[s];
  return ProjParam{fam.field(), N, ext, n, std::move(coords)};
}

ProjParam promote_fiber_params(const ProjParam& proj) {
  return ProjParam{proj.field, proj.ambient, proj.ring, proj.ring->arity(),
                   proj.coords};
}

ChartFamily dual_family(const ChartFamily& fam) {
  const int N = fam.ambient, m = fam.plane_dim;
  if (m == N) throw MathError("dual of the full-space family is empty");
  const int md = N - m - 1;
  Matrix<RatFunc> dual(md + 1, N - md, RatFunc::zero(fam.ring));
  for (int r = 0; r <= md; ++r) {
    for (int s = 0; s <= m; ++s) {
      dual(r, s) = fam.chart(m - s, N - m - 1 - r).neg();
    }
  }
  std::vector<int> perm(N + 1);
  for (int k = 0; k <= N; ++k) perm[k] = fam.coord_perm[N - k];
  return ChartFamily(N, md, fam.ring, std::move(dual), std::move(perm));
}

HyperplaneParam hyperplane_family(const ChartFamily& fam) {
  const int N = fam.ambient, m = fam.plane_dim;
  if (m == N) throw MathError("empty dual fiber: the family fills the space");
  // Free dual fiber params zeta at stored slots m+1..N-1; zeta_N = 1.
  std::vector<int> fiber_idx;
  for (int j = m + 1; j <= N - 1; ++j) fiber_idx.push_back(j);
  std::vector<std::string> params = fam.ring->params;
  for (auto& name : fiber_param_names(params, "s", fiber_idx)) {
    params.push_back(std::move(name));
  }
  RingPtr ext = make_ring(fam.field(), std::move(params));
  const std::size_t n = fam.ring->arity();

  std::vector<RatFunc> zeta;  // zeta[t] multiplies stored slot m+1+t
  for (int t = 0; t < N - m - 1; ++t) zeta.push_back(RatFunc::variable(ext, n + t));
  zeta.push_back(RatFunc::one(ext));

  std::vector<RatFunc> stored(N + 1, RatFunc::zero(ext));
  for (int i = 0; i <= m; ++i) {
    RatFunc acc = RatFunc::zero(ext);
    for (int t = 0; t < N - m; ++t) {
      acc = acc + zeta[t] * fam.chart(i, t).extend_to(ext);
    }
    stored[i] = std::move(acc);
  }
  for (int t = 0; t < N - m; ++t) stored[m + 1 + t] = zeta[t].neg();

  std::vector<RatFunc> coeffs(N + 1, RatFunc::zero(ext));
  for (int s = 0; s <= N; ++s) coeffs[fam.coord_perm[s]] = stored[s];
  return HyperplaneParam{fam.field(), N, ext, n, std::move(coeffs)};
}

bool families_equal_as_maps(const ChartFamily& a, const ChartFamily& b) {
  if (a.ambient != b.ambient || a.plane_dim != b.plane_dim) return false;
  if (!same_ring(a.ring, b.ring)) {
    throw MathError("families_equal_as_maps: parameter rings differ");
  }
  Matrix<RatFunc> ra = symbolic_rows(a);
  Matrix<RatFunc> rb = symbolic_rows(b);
  return mat_rank_pivots(vstack(ra, rb)).rank == a.plane_dim + 1;
}

}  // namespace gaussgrass
