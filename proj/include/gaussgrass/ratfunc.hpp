#ifndef GAUSSGRASS_RATFUNC_HPP
#define GAUSSGRASS_RATFUNC_HPP

#include <span>
#include <string>

#include "gaussgrass/poly.hpp"

namespace gaussgrass {

// Quotient of two polynomials in canonical form: numerator and denominator
// coprime, denominator monic under the graded-lex order (so equality is
// structural).
class RatFunc {
 public:
  explicit RatFunc(MultiPoly num);
  RatFunc(MultiPoly num, MultiPoly den);  // throws on zero denominator

  static RatFunc zero(RingPtr ring);
  static RatFunc one(RingPtr ring);
  static RatFunc constant(RingPtr ring, FieldElem c);
  static RatFunc from_int(RingPtr ring, long v);
  static RatFunc variable(RingPtr ring, std::size_t idx);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // throws on zero divisor
  RatFunc neg() const;

  RatFunc derivative(std::size_t var) const;  // quotient rule
  FieldElem eval(std::span<const FieldElem> point) const;  // den must not vanish
  RatFunc extend_to(const RingPtr& bigger) const;

  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // Re-parsable: a bare polynomial expression when possible, otherwise
  // "(P)/(Q)" with integer-coefficient P and Q.
  std::string str() const;

 private:
  RatFunc(MultiPoly num, MultiPoly den, int /*canonical_tag*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize_();

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace gaussgrass

#endif
