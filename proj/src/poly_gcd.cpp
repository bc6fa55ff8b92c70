#include <algorithm>

#include "gaussgrass/poly.hpp"

// Multivariate GCD over an exact field via primitive pseudo-remainder
// sequences: pick a main variable, split content/primitive part (contents are
// GCDs in the remaining variables), run a PRS with content removal each step.
// Results are normalized monic under the graded-lex order, so the GCD is a
// canonical representative up to units.

namespace gaussgrass {

namespace {

// Coefficients of p by degree in var, as polynomials in the same ring with
// var-exponent zero.
std::map<std::uint32_t, MultiPoly> coeffs_by_degree(const MultiPoly& p,
                                                    std::size_t var) {
  std::map<std::uint32_t, MultiPoly> out;
  for (const auto& [mono, c] : p.terms()) {
    std::uint32_t d = mono[var];
    Monomial m = mono;
    m[var] = 0;
    auto it = out.find(d);
    if (it == out.end()) {
      it = out.emplace(d, MultiPoly::zero(p.ring())).first;
    }
    it->second.add_term(m, c);
  }
  return out;
}

MultiPoly from_coeffs(const RingPtr& ring, std::size_t var,
                      const std::map<std::uint32_t, MultiPoly>& coeffs) {
  MultiPoly out(ring);
  for (const auto& [d, cp] : coeffs) {
    for (const auto& [mono, c] : cp.terms()) {
      Monomial m = mono;
      m[var] += d;
      out.add_term(m, c);
    }
  }
  return out;
}

MultiPoly leading_coeff_in(const MultiPoly& p, std::size_t var) {
  auto coeffs = coeffs_by_degree(p, var);
  return coeffs.rbegin()->second;
}

MultiPoly times_var_power(const MultiPoly& p, std::size_t var,
                          std::uint32_t e) {
  if (e == 0) return p;
  Monomial shift(p.ring()->arity(), 0);
  shift[var] = e;
  return p * MultiPoly::term(p.ring(), std::move(shift),
                             FieldElem::one(p.ring()->field));
}

// Pseudo-remainder of a by b in var (deg_var a >= deg_var b >= 1), up to a
// power of lc_var(b); enough for a primitive PRS.
MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  const MultiPoly l = leading_coeff_in(b, var);
  const int db = b.degree_in(var);
  MultiPoly r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const int dr = r.degree_in(var);
    MultiPoly lr = leading_coeff_in(r, var);
    r = l * r - times_var_power(lr, var, std::uint32_t(dr - db)) * b;
  }
  return r;
}

// GCD when both arguments are single terms.
MultiPoly monomial_gcd(const MultiPoly& a, const MultiPoly& b) {
  Monomial g(a.ring()->arity(), 0);
  const Monomial& ma = *a.leading_monomial();
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = ma[i];
  for (const auto& [mono, c] : b.terms()) {
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], mono[i]);
  }
  return MultiPoly::term(a.ring(), std::move(g), FieldElem::one(a.ring()->field));
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b);

// GCD of the var-coefficients of p.
MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  MultiPoly g = MultiPoly::zero(p.ring());
  for (const auto& [d, cp] : coeffs_by_degree(p, var)) {
    g = gcd_impl(g, cp);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) {
    return MultiPoly::from_int(a.ring(), 1);
  }
  if (a.term_count() == 1) return monomial_gcd(a, b);
  if (b.term_count() == 1) return monomial_gcd(b, a);
  if (a.monic() == b.monic()) return a.monic();

  // Main variable: present in either, with the smallest degree bound.
  const std::size_t arity = a.ring()->arity();
  std::size_t var = arity;
  int best = -1;
  for (std::size_t v = 0; v < arity; ++v) {
    int da = std::max(a.degree_in(v), 0);
    int dbv = std::max(b.degree_in(v), 0);
    int d = std::max(da, dbv);
    if ((a.depends_on(v) || b.depends_on(v)) && (best < 0 || d < best)) {
      best = d;
      var = v;
    }
  }
  if (var == arity) return MultiPoly::from_int(a.ring(), 1);

  const MultiPoly ca = content_in(a, var);
  const MultiPoly cb = content_in(b, var);
  MultiPoly pa = divexact(a, ca);
  MultiPoly pb = divexact(b, cb);
  const MultiPoly cg = gcd_impl(ca, cb);

  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  // pb may not involve var at all (content was stripped, so it is then 1).
  while (true) {
    if (pb.is_zero()) break;
    if (pb.degree_in(var) <= 0) {
      pb = MultiPoly::from_int(a.ring(), 1);
      break;
    }
    MultiPoly r = pseudo_rem(pa, pb, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) <= 0) {
      pb = MultiPoly::from_int(a.ring(), 1);
      break;
    }
    pa = std::move(pb);
    pb = divexact(r, content_in(r, var));
  }
  return (cg * pb).monic();
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (!same_ring(a.ring(), b.ring())) throw MathError("ring mismatch in gcd");
  return gcd_impl(a, b);
}

MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly::zero(a.ring());
  return (divexact(a, poly_gcd(a, b)) * b).monic();
}

}  // namespace gaussgrass
