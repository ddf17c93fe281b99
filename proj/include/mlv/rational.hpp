#pragma once

// Arbitrary-precision rational numbers backed by GMP's mpq layer.
//
// Invariants (maintained by mpq_canonicalize): gcd(num, den) == 1 and
// den > 0.  Every constructor canonicalizes, so arithmetic can rely on
// canonical operands and equality is structural.

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace mlv {

class Rational {
 public:
  Rational() { mpq_init(q_); }  // value 0/1

  Rational(long value) {  // NOLINT: implicit by design, mirrors integer literals
    mpq_init(q_);
    mpq_set_si(q_, value, 1);
  }

  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_init(q_);
    // mpq_set_si takes an unsigned denominator; set both legs at the mpz
    // level so negative denominators keep their sign until canonicalization
    // (which reduces and makes the denominator positive).
    mpz_set_si(mpq_numref(q_), num);
    mpz_set_si(mpq_denref(q_), den);
    mpq_canonicalize(q_);
  }

  Rational(const Rational& other) {
    mpq_init(q_);
    mpq_set(q_, other.q_);
  }

  Rational(Rational&& other) noexcept {
    mpq_init(q_);
    mpq_swap(q_, other.q_);
  }

  Rational& operator=(const Rational& other) {
    if (this != &other) mpq_set(q_, other.q_);
    return *this;
  }

  Rational& operator=(Rational&& other) noexcept {
    mpq_swap(q_, other.q_);
    return *this;
  }

  ~Rational() { mpq_clear(q_); }

  // Parses "p", "-p", or "p/q" in base 10.
  static Rational from_string(const std::string& text) {
    Rational r;
    if (mpq_set_str(r.q_, text.c_str(), 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    if (mpz_sgn(mpq_denref(r.q_)) == 0)
      throw std::domain_error("Rational: zero denominator in '" + text + "'");
    mpq_canonicalize(r.q_);
    return r;
  }

  // 1 / base^exp for positive integer base; the result is already canonical.
  static Rational reciprocal_pow(unsigned long base, unsigned long exp) {
    if (base == 0) throw std::domain_error("Rational: reciprocal of zero");
    Rational r;
    mpz_set_ui(mpq_numref(r.q_), 1);
    mpz_ui_pow_ui(mpq_denref(r.q_), base, exp);
    return r;
  }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sign() const { return mpq_sgn(q_); }

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }

  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
  }

  // Integer power; negative exponents invert (and reject a zero base).
  Rational pow(long exp) const {
    if (exp == 0) return Rational(1);
    const bool negative = exp < 0;
    const unsigned long e =
        negative ? -static_cast<unsigned long>(exp) : static_cast<unsigned long>(exp);
    if (negative && is_zero())
      throw std::domain_error("Rational: zero to a negative power");
    Rational r;
    // Canonical in, canonical out: gcd(n,d)=1 implies gcd(n^e,d^e)=1.
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), e);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), e);
    if (negative) {
      if (mpz_sgn(mpq_numref(r.q_)) == 0)
        throw std::domain_error("Rational: zero to a negative power");
      mpq_inv(r.q_, r.q_);
    }
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  double to_double() const { return mpq_get_d(q_); }

  // Canonical decimal form: "p/q", or just "p" when the denominator is 1.
  std::string str() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, out.size() + 1);
    return out;
  }

  // Raw handles for hot accumulation loops (mpq_add against a reused term).
  mpq_ptr raw() { return q_; }
  mpq_srcptr raw() const { return q_; }

 private:
  mpq_t q_;
};

}  // namespace mlv
