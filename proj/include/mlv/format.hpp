#pragma once

// Deterministic numeric formatting shared by reports and parameter strings.
// Floating-point values are printed with 17 significant digits so that
// every double round-trips losslessly through its textual form.

#include <complex>
#include <cstdio>
#include <string>

namespace mlv {

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Real values print bare; otherwise "a+bi" / "a-bi".
inline std::string format_complex(const std::complex<double>& z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string s = format_double(z.real());
  if (!(z.imag() < 0.0)) s += "+";
  s += format_double(z.imag());
  s += "i";
  return s;
}

}  // namespace mlv
