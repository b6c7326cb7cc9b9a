#include <cmath>
#include <complex>
#include <numbers>

#include "funceq/error.hpp"
#include "funceq/spectrum.hpp"

namespace funceq {
namespace {

// B_{2k} / (2k (2k-1)), k = 1..10.
constexpr double kStirling[] = {
    1.0 / 12.0,          -1.0 / 360.0,           1.0 / 1260.0,       -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,      1.0 / 156.0,        -3617.0 / 122400.0,
    43867.0 / 244188.0,  -174611.0 / 125400.0,
};

constexpr double kShiftTo = 15.0;

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw Error(ErrorCode::PoleOfGamma, "Gamma has a pole at " + std::to_string(z.real()));

  // Recurrence up to the Stirling region; principal logs keep the branch
  // continuous in each half-plane.
  std::complex<double> shift = 0.0;
  while (z.real() < kShiftTo) {
    shift += std::log(z);
    z += 1.0;
  }

  const std::complex<double> inv = 1.0 / z;
  const std::complex<double> inv2 = inv * inv;
  std::complex<double> series = 0.0;
  for (int k = static_cast<int>(std::size(kStirling)) - 1; k >= 0; --k) series = series * inv2 + kStirling[k];
  series *= inv;

  const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (z - 0.5) * std::log(z) - z + half_log_2pi + series - shift;
}

}  // namespace funceq
