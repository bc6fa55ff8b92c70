#ifndef GAUSSGRASS_TEST_SUPPORT_HPP
#define GAUSSGRASS_TEST_SUPPORT_HPP

#include <functional>
#include <random>

#include "gaussgrass/analysis.hpp"
#include "gaussgrass/parser.hpp"

namespace ggtest {

using namespace gaussgrass;

inline RatFunc rf(const char* text, const RingPtr& ring) {
  return ratfunc_parse(text, ring);
}

inline ChartFamily family_from(FieldSpec field, int N, int m,
                               std::vector<std::string> params,
                               const std::vector<std::vector<const char*>>& grid) {
  RingPtr ring = make_ring(field, std::move(params));
  Matrix<RatFunc> chart(m + 1, N - m, RatFunc::zero(ring));
  for (int i = 0; i <= m; ++i) {
    for (int t = 0; t < N - m; ++t) chart(i, t) = rf(grid[i][t], ring);
  }
  return ChartFamily(N, m, ring, std::move(chart));
}

// The worked line family in G(1,P^4) sweeping the twisted plane.
inline ChartFamily twisted_plane_lines(FieldSpec field = FieldSpec::rationals()) {
  return family_from(field, 4, 1, {"z1", "z2"},
                     {{"z1", "z2", "2*z1*z2"}, {"0", "z1", "z1^2"}});
}

// The developable line family in G(1,P^5) (power 3, drift z1^5).
inline ChartFamily developable_lines_p5(FieldSpec field = FieldSpec::rationals()) {
  return family_from(field, 5, 1, {"z1", "z2"},
                     {{"z1", "z2", "3*z1^2*z2", "z1^5"}, {"0", "z1", "z1^3", "0"}});
}

inline ChartFamily twisted_cubic(FieldSpec field = FieldSpec::rationals()) {
  return family_from(field, 3, 0, {"z1"}, {{"z1", "z1^2", "z1^3"}});
}

inline ChartFamily twisted_cubic_tangents(FieldSpec field = FieldSpec::rationals()) {
  return family_from(field, 3, 1, {"z1"},
                     {{"-z1^2", "-2*z1^3"}, {"2*z1", "3*z1^2"}});
}

inline ChartFamily rational_normal_quartic(FieldSpec field = FieldSpec::rationals()) {
  return family_from(field, 4, 0, {"z1"}, {{"z1", "z1^2", "z1^3", "z1^4"}});
}

using Rng = std::mt19937_64;

inline FieldElem random_coeff(const FieldSpec& field, Rng& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  long v = d(rng);
  if (v == 0) v = 1;
  return FieldElem::integer(field, v);
}

// Sparse random polynomial of total degree <= max_deg.
inline MultiPoly random_poly(const RingPtr& ring, int max_deg, Rng& rng,
                             bool allow_zero = true) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> nterms(allow_zero ? 0 : 1, 3);
  MultiPoly p = MultiPoly::zero(ring);
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial mono(ring->arity(), 0);
    int budget = deg(rng);
    for (std::size_t v = 0; v < ring->arity() && budget > 0; ++v) {
      std::uniform_int_distribution<int> e(0, budget);
      int ev = e(rng);
      mono[v] = static_cast<std::uint32_t>(ev);
      budget -= ev;
    }
    p.add_term(mono, random_coeff(ring->field, rng));
  }
  return p;
}

// Dense polynomial: every monomial of total degree <= deg gets a nonzero
// coefficient. Useful when degenerate second-order behavior must be avoided.
inline MultiPoly random_dense_poly(const RingPtr& ring, int deg, Rng& rng) {
  MultiPoly p = MultiPoly::zero(ring);
  std::vector<Monomial> stack{Monomial(ring->arity(), 0)};
  std::function<void(Monomial&, std::size_t, int)> fill =
      [&](Monomial& mono, std::size_t var, int budget) {
        if (var == ring->arity()) {
          p.add_term(mono, random_coeff(ring->field, rng));
          return;
        }
        for (int e = 0; e <= budget; ++e) {
          mono[var] = static_cast<std::uint32_t>(e);
          fill(mono, var + 1, budget - e);
        }
        mono[var] = 0;
      };
  Monomial mono(ring->arity(), 0);
  fill(mono, 0, deg);
  return p;
}

inline RatFunc random_ratfunc(const RingPtr& ring, int max_deg, Rng& rng) {
  MultiPoly num = random_poly(ring, max_deg, rng);
  MultiPoly den = random_poly(ring, std::max(1, max_deg - 1), rng, false);
  if (den.is_zero()) den = MultiPoly::from_int(ring, 1);
  return RatFunc(std::move(num), std::move(den));
}

// Random polynomial-entry family; regenerates until the plane actually moves.
inline ChartFamily random_family(FieldSpec field, int N, int m, int n,
                                 int max_deg, Rng& rng) {
  std::vector<std::string> params;
  for (int i = 1; i <= n; ++i) params.push_back("z" + std::to_string(i));
  RingPtr ring = make_ring(field, params);
  while (true) {
    Matrix<RatFunc> chart(m + 1, N - m, RatFunc::zero(ring));
    bool moving = false;
    for (int i = 0; i <= m; ++i) {
      for (int t = 0; t < N - m; ++t) {
        MultiPoly p = random_poly(ring, max_deg, rng);
        if (!p.derivative(0).is_zero() ||
            (n > 1 && !p.derivative(1).is_zero())) {
          moving = true;
        }
        chart(i, t) = RatFunc(std::move(p));
      }
    }
    if (!moving) continue;
    ChartFamily fam(N, m, ring, std::move(chart));
    try {
      if (expansion_rank(fam) > 0) return fam;
    } catch (const MathError&) {
    }
  }
}

// Dense-quadric variety in P^N over n parameters (plane_dim = 0); its Gauss
// map is generically separable with nondegenerate second-order data.
inline ChartFamily random_dense_variety(FieldSpec field, int N, int n, int deg,
                                        Rng& rng) {
  std::vector<std::string> params;
  for (int i = 1; i <= n; ++i) params.push_back("z" + std::to_string(i));
  RingPtr ring = make_ring(field, params);
  Matrix<RatFunc> chart(1, N, RatFunc::zero(ring));
  for (int j = 0; j < N; ++j) {
    chart(0, j) = RatFunc(random_dense_poly(ring, deg, rng));
  }
  return ChartFamily(N, 0, ring, std::move(chart));
}

// A chart point with small positive coordinates avoiding the denominators
// and the singular locus of the given family; throws after too many tries.
inline std::vector<FieldElem> random_chart_point(const FieldSpec& field, int n,
                                                 Rng& rng) {
  std::uniform_int_distribution<long> d(1, 11);
  std::vector<FieldElem> pt;
  for (int i = 0; i < n; ++i) pt.push_back(FieldElem::integer(field, d(rng)));
  return pt;
}

}  // namespace ggtest

#endif
