#pragma once

#include <cmath>
#include <complex>

namespace funceq::detail {

// log(1 + w) without cancellation for small |w|.
inline std::complex<double> log1p(std::complex<double> w) {
  const double re = w.real();
  const double im = w.imag();
  return {0.5 * std::log1p(2.0 * re + re * re + im * im), std::atan2(im, 1.0 + re)};
}

inline bool is_finite(std::complex<double> z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace funceq::detail
