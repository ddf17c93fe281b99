#pragma once

// Double-double arithmetic: an unevaluated sum hi + lo of two IEEE doubles
// with |lo| <= ulp(hi)/2, giving roughly 106 bits of significand.
//
// The series accumulators use this type so that millions of terms can be
// summed with the rounding error confined far below the truncation error
// being measured.  Everything here reduces to IEEE-754 additions,
// multiplications, and std::fma, all of which are correctly rounded, so
// results are bit-for-bit reproducible across conforming platforms.

#if defined(__FAST_MATH__)
#error "double_double.hpp requires strict IEEE semantics; do not compile with -ffast-math"
#endif

#include <cmath>
#include <complex>
#include <cstdint>

namespace mlv {

struct DD {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DD() = default;
  constexpr DD(double h, double l) : hi(h), lo(l) {}
  explicit constexpr DD(double v) : hi(v), lo(0.0) {}

  double to_double() const { return hi + lo; }
};

namespace detail {

// Error-free transforms (Knuth / Dekker).
inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DD quick_two_sum(double a, double b) {  // requires |a| >= |b|
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace detail

inline DD dd_add(const DD& a, const DD& b) {
  DD s = detail::two_sum(a.hi, b.hi);
  DD t = detail::two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = detail::quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return detail::quick_two_sum(s.hi, s.lo);
}

inline DD dd_add(const DD& a, double b) {
  DD s = detail::two_sum(a.hi, b);
  s.lo += a.lo;
  return detail::quick_two_sum(s.hi, s.lo);
}

inline DD dd_neg(const DD& a) { return {-a.hi, -a.lo}; }

inline DD dd_sub(const DD& a, const DD& b) { return dd_add(a, dd_neg(b)); }

inline DD dd_mul(const DD& a, const DD& b) {
  DD p = detail::two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return detail::quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul(const DD& a, double b) {
  DD p = detail::two_prod(a.hi, b);
  p.lo += a.lo * b;
  return detail::quick_two_sum(p.hi, p.lo);
}

inline DD dd_div(const DD& a, const DD& b) {
  // Three Newton-style correction terms, as in the classic quad-double kit.
  const double q1 = a.hi / b.hi;
  DD r = dd_sub(a, dd_mul(b, q1));
  const double q2 = r.hi / b.hi;
  r = dd_sub(r, dd_mul(b, q2));
  const double q3 = r.hi / b.hi;
  DD q = detail::quick_two_sum(q1, q2);
  return dd_add(q, q3);
}

inline DD dd_from_int(std::int64_t v) {
  // |v| beyond 2^53 would not be exact; series indices stay far below that.
  return DD(static_cast<double>(v));
}

// 1 / s^k for a positive integer s; the workhorse of every series loop.
inline DD dd_reciprocal_pow(std::int64_t s, int k) {
  DD p(1.0);
  DD base = dd_from_int(s);
  int e = k;
  while (e > 0) {
    if (e & 1) p = dd_mul(p, base);
    base = dd_mul(base, base);
    e >>= 1;
  }
  return dd_div(DD(1.0), p);
}

inline bool dd_less(const DD& a, const DD& b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}

// Complex double-double: real and imaginary parts each carried as a DD.
struct CDD {
  DD re;
  DD im;

  constexpr CDD() = default;
  constexpr CDD(const DD& r, const DD& i) : re(r), im(i) {}
  explicit CDD(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}

  std::complex<double> to_complex() const {
    return {re.to_double(), im.to_double()};
  }
};

inline CDD cdd_add(const CDD& a, const CDD& b) {
  return {dd_add(a.re, b.re), dd_add(a.im, b.im)};
}

inline CDD cdd_sub(const CDD& a, const CDD& b) {
  return {dd_sub(a.re, b.re), dd_sub(a.im, b.im)};
}

inline CDD cdd_mul(const CDD& a, const CDD& b) {
  return {dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
          dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

inline CDD cdd_mul(const CDD& a, const DD& b) {
  return {dd_mul(a.re, b), dd_mul(a.im, b)};
}

}  // namespace mlv
