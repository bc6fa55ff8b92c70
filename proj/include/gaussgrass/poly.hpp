#ifndef GAUSSGRASS_POLY_HPP
#define GAUSSGRASS_POLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gaussgrass/field.hpp"

namespace gaussgrass {

// A polynomial ring: field plus an ordered list of parameter names. Shared
// immutably by every value computed over it.
struct PolyRing {
  FieldSpec field;
  std::vector<std::string> params;

  PolyRing(FieldSpec f, std::vector<std::string> p);
  std::size_t arity() const { return params.size(); }
  int param_index(std::string_view name) const;  // -1 if absent
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(FieldSpec field, std::vector<std::string> params);
bool same_ring(const RingPtr& a, const RingPtr& b);

using Monomial = std::vector<std::uint32_t>;

// Graded-lexicographic order on exponent vectors; an earlier declared
// parameter is more significant. Used for canonical forms only.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over an exact field. No zero coefficients
// are stored; exponent vectors all have length ring->arity().
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, FieldElem, GrlexLess>;

  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
  static MultiPoly zero(RingPtr ring) { return MultiPoly(std::move(ring)); }
  static MultiPoly constant(RingPtr ring, FieldElem c);
  static MultiPoly from_int(RingPtr ring, long v);
  static MultiPoly variable(RingPtr ring, std::size_t idx);
  static MultiPoly term(RingPtr ring, Monomial mono, FieldElem c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  FieldElem constant_value() const;  // requires is_constant()

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly neg() const;
  MultiPoly scaled(const FieldElem& c) const;
  MultiPoly pow(std::uint32_t e) const;

  // Formal partial derivative; in GF p the exponent multiplier reduces mod p.
  MultiPoly derivative(std::size_t var) const;

  FieldElem eval(std::span<const FieldElem> point) const;

  // Evaluation in any commutative ring T reachable from the coefficients.
  // T needs binary + and *; from_coeff embeds a FieldElem.
  template <class T, class FromCoeff>
  T eval_generic(const std::vector<T>& values, const T& zero_value,
                 FromCoeff from_coeff) const {
    T acc = zero_value;
    for (const auto& [mono, c] : terms_) {
      T t = from_coeff(c);
      for (std::size_t v = 0; v < mono.size(); ++v) {
        for (std::uint32_t k = 0; k < mono[v]; ++k) t = t * values[v];
      }
      acc = acc + t;
    }
    return acc;
  }

  int total_degree() const;              // -1 for the zero polynomial
  int degree_in(std::size_t var) const;  // -1 for the zero polynomial
  bool depends_on(std::size_t var) const;

  // Leading data under the graded-lex order; zero polynomial has none.
  const Monomial* leading_monomial() const;
  FieldElem leading_coeff() const;  // field zero for the zero polynomial
  MultiPoly monic() const;

  // Re-express over a ring containing every parameter of this ring by name.
  MultiPoly extend_to(const RingPtr& bigger) const;

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Re-parsable under the expression grammar when coefficients are integral.
  std::string str() const;

  void add_term(const Monomial& mono, const FieldElem& c);

 private:
  RingPtr ring_;
  TermMap terms_;
};

// Polynomial GCD (monic-normalized) via primitive pseudo-remainder sequences.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b);

// Exact division; throws MathError when q does not divide p.
MultiPoly divexact(const MultiPoly& p, const MultiPoly& q);
std::optional<MultiPoly> try_divexact(const MultiPoly& p, const MultiPoly& q);

}  // namespace gaussgrass

#endif
