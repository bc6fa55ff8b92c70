#include "gaussgrass/field.hpp"

#include <sstream>

namespace gaussgrass {

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  if (p % 3 == 0) return p == 3;
  for (std::uint64_t d = 5; d <= p / d; d += 6) {
    if (p % d == 0 || p % (d + 2) == 0) return false;
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t(1) << 61)) {
    throw InputError("field modulus " + std::to_string(p) +
                     " too large (must be < 2^61)");
  }
  if (!is_prime_u64(p)) {
    throw InputError("field modulus " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(Kind::prime_field, p);
}

std::string FieldSpec::str() const {
  if (kind_ == Kind::rationals) return "QQ";
  return "GF " + std::to_string(modulus_);
}

FieldSpec parse_field_spec(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t == "QQ") return FieldSpec::rationals();
  if (t.rfind("GF:", 0) == 0 || t.rfind("GF", 0) == 0) {
    std::string num = t.substr(t.rfind("GF:", 0) == 0 ? 3 : 2);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("bad field spec '" + text + "' (expected QQ or GF p)");
    }
    errno = 0;
    std::uint64_t p = std::strtoull(num.c_str(), nullptr, 10);
    if (errno != 0) throw InputError("field modulus out of range: " + num);
    return FieldSpec::prime_field(p);
  }
  throw InputError("bad field spec '" + text + "' (expected QQ or GF p)");
}

FieldElem FieldElem::integer(const FieldSpec& f, long v) {
  FieldElem e(f, mpq_class(v));
  e.reduce_();
  return e;
}

FieldElem FieldElem::integer(const FieldSpec& f, const mpz_class& v) {
  FieldElem e(f, mpq_class(v));
  e.reduce_();
  return e;
}

FieldElem FieldElem::rational(const FieldSpec& f, const mpz_class& num,
                              const mpz_class& den) {
  if (den == 0) throw MathError("rational with zero denominator");
  if (!f.is_rationals()) {
    // n/d in GF p is n * d^{-1}.
    return integer(f, num) / integer(f, den);
  }
  mpq_class q(num, den);
  q.canonicalize();
  return FieldElem(f, std::move(q));
}

void FieldElem::reduce_() {
  if (field_.is_rationals()) {
    v_.canonicalize();
    return;
  }
  mpz_class p(static_cast<unsigned long>(field_.modulus()));
  mpz_class r = v_.get_num() % p;
  if (r < 0) r += p;
  v_ = mpq_class(r);
}

void FieldElem::check_same_(const FieldElem& a, const FieldElem& b) {
  if (a.field_ != b.field_) {
    throw MathError("field mismatch: " + a.field_.str() + " vs " +
                    b.field_.str());
  }
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same_(*this, o);
  FieldElem r(field_, v_ + o.v_);
  r.reduce_();
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same_(*this, o);
  FieldElem r(field_, v_ - o.v_);
  r.reduce_();
  return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same_(*this, o);
  FieldElem r(field_, v_ * o.v_);
  r.reduce_();
  return r;
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  check_same_(*this, o);
  return *this * o.inv();
}

FieldElem FieldElem::neg() const {
  FieldElem r(field_, -v_);
  r.reduce_();
  return r;
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw MathError("division by zero in " + field_.str());
  if (field_.is_rationals()) return FieldElem(field_, 1 / v_);
  mpz_class p(static_cast<unsigned long>(field_.modulus()));
  mpz_class out;
  if (mpz_invert(out.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t()) == 0) {
    throw MathError("non-invertible residue in " + field_.str());
  }
  return FieldElem(field_, mpq_class(out));
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem acc = one(field_);
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string FieldElem::str() const {
  std::ostringstream os;
  os << v_;
  return os.str();
}

}  // namespace gaussgrass
