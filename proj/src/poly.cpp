#include "gaussgrass/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gaussgrass {

PolyRing::PolyRing(FieldSpec f, std::vector<std::string> p)
    : field(f), params(std::move(p)) {
  std::set<std::string> seen;
  for (const auto& name : params) {
    if (name.empty()) throw InputError("empty parameter name");
    if (!seen.insert(name).second) {
      throw InputError("duplicate parameter name '" + name + "'");
    }
  }
}

int PolyRing::param_index(std::string_view name) const {
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (params[i] == name) return static_cast<int>(i);
  }
  return -1;
}

RingPtr make_ring(FieldSpec field, std::vector<std::string> params) {
  return std::make_shared<const PolyRing>(field, std::move(params));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->field == b->field && a->params == b->params;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

MultiPoly MultiPoly::constant(RingPtr ring, FieldElem c) {
  MultiPoly p(std::move(ring));
  if (!c.is_zero()) {
    p.terms_.emplace(Monomial(p.ring_->arity(), 0), std::move(c));
  }
  return p;
}

MultiPoly MultiPoly::from_int(RingPtr ring, long v) {
  FieldElem c = FieldElem::integer(ring->field, v);
  return constant(std::move(ring), std::move(c));
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t idx) {
  if (idx >= ring->arity()) throw MathError("variable index out of range");
  Monomial mono(ring->arity(), 0);
  mono[idx] = 1;
  FieldElem one = FieldElem::one(ring->field);
  return term(std::move(ring), std::move(mono), std::move(one));
}

MultiPoly MultiPoly::term(RingPtr ring, Monomial mono, FieldElem c) {
  if (mono.size() != ring->arity()) throw MathError("monomial arity mismatch");
  MultiPoly p(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(std::move(mono), std::move(c));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Monomial& mono = terms_.begin()->first;
  return std::all_of(mono.begin(), mono.end(),
                     [](std::uint32_t e) { return e == 0; });
}

FieldElem MultiPoly::constant_value() const {
  if (terms_.empty()) return FieldElem::zero(ring_->field);
  if (!is_constant()) throw MathError("polynomial is not constant");
  return terms_.begin()->second;
}

void MultiPoly::add_term(const Monomial& mono, const FieldElem& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
    return;
  }
  FieldElem sum = it->second + c;
  if (sum.is_zero()) {
    terms_.erase(it);
  } else {
    it->second = std::move(sum);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (!same_ring(ring_, o.ring_)) throw MathError("ring mismatch in +");
  MultiPoly out = *this;
  for (const auto& [mono, c] : o.terms_) out.add_term(mono, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  if (!same_ring(ring_, o.ring_)) throw MathError("ring mismatch in -");
  MultiPoly out = *this;
  for (const auto& [mono, c] : o.terms_) out.add_term(mono, c.neg());
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (!same_ring(ring_, o.ring_)) throw MathError("ring mismatch in *");
  MultiPoly out(ring_);
  Monomial mono(ring_->arity(), 0);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t i = 0; i < mono.size(); ++i) mono[i] = ma[i] + mb[i];
      out.add_term(mono, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::neg() const {
  MultiPoly out(ring_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, c.neg());
  return out;
}

MultiPoly MultiPoly::scaled(const FieldElem& c) const {
  MultiPoly out(ring_);
  if (c.is_zero()) return out;
  for (const auto& [mono, coeff] : terms_) {
    FieldElem prod = coeff * c;
    if (!prod.is_zero()) out.terms_.emplace(mono, std::move(prod));
  }
  return out;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
  MultiPoly acc = from_int(ring_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= ring_->arity()) throw MathError("unknown parameter index");
  MultiPoly out(ring_);
  for (const auto& [mono, c] : terms_) {
    if (mono[var] == 0) continue;
    FieldElem mult = FieldElem::integer(ring_->field, long(mono[var]));
    FieldElem coeff = c * mult;
    if (coeff.is_zero()) continue;  // exponent divisible by the characteristic
    Monomial m = mono;
    m[var] -= 1;
    out.terms_.emplace(std::move(m), std::move(coeff));
  }
  return out;
}

FieldElem MultiPoly::eval(std::span<const FieldElem> point) const {
  if (point.size() != ring_->arity()) throw MathError("evaluation arity mismatch");
  FieldElem acc = FieldElem::zero(ring_->field);
  for (const auto& [mono, c] : terms_) {
    FieldElem t = c;
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] > 0) t = t * point[v].pow(mono[v]);
    }
    acc = acc + t;
  }
  return acc;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Monomial& lead = terms_.rbegin()->first;
  return static_cast<int>(std::accumulate(lead.begin(), lead.end(), 0L));
}

int MultiPoly::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono[var]);
  return static_cast<int>(d);
}

bool MultiPoly::depends_on(std::size_t var) const {
  for (const auto& [mono, c] : terms_) {
    if (mono[var] > 0) return true;
  }
  return false;
}

const Monomial* MultiPoly::leading_monomial() const {
  if (terms_.empty()) return nullptr;
  return &terms_.rbegin()->first;
}

FieldElem MultiPoly::leading_coeff() const {
  if (terms_.empty()) return FieldElem::zero(ring_->field);
  return terms_.rbegin()->second;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(leading_coeff().inv());
}

MultiPoly MultiPoly::extend_to(const RingPtr& bigger) const {
  if (ring_ == bigger) return *this;
  std::vector<std::size_t> where(ring_->arity());
  for (std::size_t i = 0; i < ring_->arity(); ++i) {
    int idx = bigger->param_index(ring_->params[i]);
    if (idx < 0) {
      throw MathError("parameter '" + ring_->params[i] +
                      "' missing from target ring");
    }
    where[i] = static_cast<std::size_t>(idx);
  }
  if (ring_->field != bigger->field) throw MathError("field mismatch in ring extension");
  MultiPoly out(bigger);
  for (const auto& [mono, c] : terms_) {
    Monomial m(bigger->arity(), 0);
    for (std::size_t i = 0; i < mono.size(); ++i) m[where[i]] = mono[i];
    out.terms_.emplace(std::move(m), c);
  }
  return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  return terms_ == o.terms_;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading term first: iterate the grlex order downward.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
    mpq_class v = c.value();
    bool negative = ring_->field.is_rationals() && v < 0;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    mpq_class mag = negative ? mpq_class(-v) : v;
    bool any_var =
        std::any_of(mono.begin(), mono.end(), [](std::uint32_t e) { return e > 0; });
    if (!any_var) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    bool first_factor = true;
    for (std::size_t vix = 0; vix < mono.size(); ++vix) {
      if (mono[vix] == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << ring_->params[vix];
      if (mono[vix] > 1) os << "^" << mono[vix];
    }
  }
  return os.str();
}

std::optional<MultiPoly> try_divexact(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return MultiPoly::zero(p.ring());
  if (q.is_constant()) return p.scaled(q.constant_value().inv());
  MultiPoly rem = p;
  MultiPoly quot(p.ring());
  const Monomial& qlead = *q.leading_monomial();
  const FieldElem qc = q.leading_coeff();
  while (!rem.is_zero()) {
    const Monomial& rlead = *rem.leading_monomial();
    Monomial t(rlead.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (rlead[i] < qlead[i]) return std::nullopt;
      t[i] = rlead[i] - qlead[i];
    }
    MultiPoly factor =
        MultiPoly::term(p.ring(), std::move(t), rem.leading_coeff() / qc);
    quot = quot + factor;
    rem = rem - factor * q;
  }
  return quot;
}

MultiPoly divexact(const MultiPoly& p, const MultiPoly& q) {
  auto r = try_divexact(p, q);
  if (!r) throw MathError("inexact polynomial division");
  return std::move(*r);
}

}  // namespace gaussgrass
