#ifndef GAUSSGRASS_FIELD_HPP
#define GAUSSGRASS_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "gaussgrass/errors.hpp"

namespace gaussgrass {

// Exact coefficient field: the rationals, or a prime field GF(p).
class FieldSpec {
 public:
  enum class Kind { rationals, prime_field };

  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }
  // Validates primality by trial division; p must satisfy 2 <= p < 2^61.
  static FieldSpec prime_field(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t characteristic() const { return modulus_; }
  bool is_rationals() const { return kind_ == Kind::rationals; }

  bool operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && modulus_ == o.modulus_;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string str() const;  // "QQ" or "GF 7"

 private:
  FieldSpec(Kind k, std::uint64_t m) : kind_(k), modulus_(m) {}
  Kind kind_;
  std::uint64_t modulus_;
};

// "QQ", "GF 7", or "GF:7".
FieldSpec parse_field_spec(const std::string& text);

// An element of a FieldSpec field. Rationals are stored in lowest terms with
// positive denominator; prime-field residues are stored reduced to [0, p).
class FieldElem {
 public:
  static FieldElem zero(const FieldSpec& f) { return integer(f, 0); }
  static FieldElem one(const FieldSpec& f) { return integer(f, 1); }
  static FieldElem integer(const FieldSpec& f, long v);
  static FieldElem integer(const FieldSpec& f, const mpz_class& v);
  // Rationals only.
  static FieldElem rational(const FieldSpec& f, const mpz_class& num,
                            const mpz_class& den);

  const FieldSpec& field() const { return field_; }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integral() const { return v_.get_den() == 1; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;  // throws on zero divisor
  FieldElem neg() const;
  FieldElem inv() const;
  FieldElem pow(std::uint64_t e) const;

  bool operator==(const FieldElem& o) const {
    return field_ == o.field_ && v_ == o.v_;
  }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  std::string str() const;  // "-3/2" over QQ; "4" over GF p

 private:
  FieldElem(FieldSpec f, mpq_class v) : field_(f), v_(std::move(v)) {}
  void reduce_();
  static void check_same_(const FieldElem& a, const FieldElem& b);

  FieldSpec field_;
  mpq_class v_;
};

}  // namespace gaussgrass

#endif
