#include "gaussgrass/ratfunc.hpp"

namespace gaussgrass {

RatFunc::RatFunc(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::from_int(num_.ring(), 1)) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!same_ring(num_.ring(), den_.ring())) {
    throw MathError("ring mismatch in rational function");
  }
  if (den_.is_zero()) throw MathError("zero denominator");
  canonicalize_();
}

void RatFunc::canonicalize_() {
  if (num_.is_zero()) {
    den_ = MultiPoly::from_int(num_.ring(), 1);
    return;
  }
  if (!den_.is_constant()) {
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
  }
  FieldElem lc = den_.leading_coeff();
  if (!lc.is_one()) {
    FieldElem inv = lc.inv();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::zero(RingPtr ring) { return RatFunc(MultiPoly::zero(std::move(ring))); }
RatFunc RatFunc::one(RingPtr ring) { return RatFunc(MultiPoly::from_int(std::move(ring), 1)); }
RatFunc RatFunc::constant(RingPtr ring, FieldElem c) {
  return RatFunc(MultiPoly::constant(std::move(ring), std::move(c)));
}
RatFunc RatFunc::from_int(RingPtr ring, long v) {
  return RatFunc(MultiPoly::from_int(std::move(ring), v));
}
RatFunc RatFunc::variable(RingPtr ring, std::size_t idx) {
  return RatFunc(MultiPoly::variable(std::move(ring), idx));
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  // Split the denominators by their gcd to keep intermediates small.
  MultiPoly g = poly_gcd(den_, o.den_);
  if (g.is_constant()) {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  MultiPoly left = divexact(den_, g);
  MultiPoly right = divexact(o.den_, g);
  return RatFunc(num_ * right + o.num_ * left, den_ * right);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + o.neg(); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  // Cross-cancel before multiplying.
  MultiPoly g1 = poly_gcd(num_, o.den_);
  MultiPoly g2 = poly_gcd(o.num_, den_);
  MultiPoly n1 = g1.is_constant() ? num_ : divexact(num_, g1);
  MultiPoly d2 = g1.is_constant() ? o.den_ : divexact(o.den_, g1);
  MultiPoly n2 = g2.is_constant() ? o.num_ : divexact(o.num_, g2);
  MultiPoly d1 = g2.is_constant() ? den_ : divexact(den_, g2);
  return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw MathError("division by zero rational function");
  return *this * RatFunc(o.den_, o.num_);
}

RatFunc RatFunc::neg() const { return RatFunc(num_.neg(), den_, 0); }

RatFunc RatFunc::derivative(std::size_t var) const {
  // Canonical form makes a constant denominator exactly 1.
  if (is_polynomial()) return RatFunc(num_.derivative(var));
  MultiPoly top = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return RatFunc(std::move(top), den_ * den_);
}

FieldElem RatFunc::eval(std::span<const FieldElem> point) const {
  FieldElem d = den_.eval(point);
  if (d.is_zero()) throw MathError("denominator vanishes at evaluation point");
  return num_.eval(point) / d;
}

RatFunc RatFunc::extend_to(const RingPtr& bigger) const {
  // Canonical form survives the extension only if the relative order of the
  // existing parameters is preserved (graded-lex leading terms then agree).
  bool order_preserved = true;
  int prev = -1;
  for (const auto& name : ring()->params) {
    int idx = bigger->param_index(name);
    if (idx <= prev) {
      order_preserved = false;
      break;
    }
    prev = idx;
  }
  if (order_preserved) {
    return RatFunc(num_.extend_to(bigger), den_.extend_to(bigger), 0);
  }
  return RatFunc(num_.extend_to(bigger), den_.extend_to(bigger));
}

namespace {

// Least common multiple of all coefficient denominators (rationals only).
mpz_class coeff_den_lcm(const MultiPoly& p, mpz_class acc) {
  for (const auto& [mono, c] : p.terms()) {
    mpz_class d = c.value().get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), acc.get_mpz_t(), d.get_mpz_t());
    acc = acc / g * d;
  }
  return acc;
}

}  // namespace

std::string RatFunc::str() const {
  const bool rationals = ring()->field.is_rationals();
  mpz_class scale(1);
  if (rationals) {
    scale = coeff_den_lcm(num_, scale);
    scale = coeff_den_lcm(den_, scale);
  }
  MultiPoly n = num_;
  MultiPoly d = den_;
  if (scale != 1) {
    FieldElem s = FieldElem::integer(ring()->field, scale);
    n = n.scaled(s);
    d = d.scaled(s);
  }
  if (d.is_constant() && d.constant_value().is_one()) return n.str();
  return "(" + n.str() + ")/(" + d.str() + ")";
}

}  // namespace gaussgrass
