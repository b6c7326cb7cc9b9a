#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "funceq/problem.hpp"

namespace funceq {

/// Phi(z) = P(z) + P(Q(z)) + P(Q_2(z)) + ... summed until three consecutive
/// terms fall below 1e-15 in modulus.
std::complex<double> phi_eval(const ProblemSpec& spec, std::complex<double> z);

/// Lambda(x - iy) = Phi(w) - ln T(w)/alpha with w = Pi(Q'(q)^{x - iy}),
/// sampled at x = -n_offset + j/N, j = 0..N-1.
struct GridSample {
  double y = 0.0;
  int n_offset = 0;
  std::vector<std::complex<double>> values;
};

/// Single value of the 1-periodic function Lambda at z = x - iy.
std::complex<double> lambda_value(const ProblemSpec& spec, double x, double y);

/// Smallest n >= 1 with |Pi(Q'(q)^{x - iy}) - q| < r0/2 for x in [-n, -n+1).
int choose_offset(const ProblemSpec& spec, double y);

/// Evaluates the grid in parallel; values are independent of the thread
/// count. Throws BadShift if any sample is not finite.
GridSample lambda_line(const ProblemSpec& spec, double y, std::size_t N, int n_offset);

/// All N normalized DFT coefficients (1/N) sum_j f_j e^{-2 pi i j k/N}.
/// Bin k carries mode k for k < N/2 and mode k - N above.
std::vector<std::complex<double>> discrete_fourier(std::span<const std::complex<double>> values);

struct FourierSpectrum {
  double y = 0.0;
  std::size_t grid_size = 0;
  std::complex<double> lambda0;
  /// lambda_hat[m-1] = e^{2 pi m y} lambda_m, m = 1..M.
  std::vector<std::complex<double>> lambda_hat;
  /// ratios[m-1] = lambda_m / Gamma(-2 pi i m/beta); empty until attached.
  std::vector<std::complex<double>> ratios;

  int modes() const { return static_cast<int>(lambda_hat.size()); }
};

/// lambda_0 and lambda_hat_1..lambda_hat_modes from a grid. The grid starts
/// at an integer x, so no phase correction is needed.
FourierSpectrum fourier_extract(const GridSample& grid, int modes);

/// Principal-branch log Gamma, continuous off the negative real axis and
/// satisfying log_gamma(z + 1) = log_gamma(z) + log(z).
std::complex<double> log_gamma(std::complex<double> z);

/// lambda_m / Gamma(-2 pi i m/beta) = exp(ln lambda_hat_m - ln Gamma(-2 pi i m/beta) - 2 pi m y).
std::complex<double> gamma_ratio(int m, std::complex<double> lambda_hat, double y, double beta);

void attach_gamma_ratios(FourierSpectrum& spectrum, double beta);

/// Grid, FFT and Gamma ratios in one call.
FourierSpectrum compute_spectrum(const ProblemSpec& spec, double y, std::size_t N = 4096, int modes = 10);

struct ShiftTrial {
  double y;
  bool accepted;
};

struct ShiftScan {
  FourierSpectrum spectrum;
  std::vector<ShiftTrial> trials;
};

/// Tries each candidate shift and keeps the largest whose grid is finite and
/// whose first modes agree between N and N/2 samples to 1e-6.
ShiftScan scan_shift(const ProblemSpec& spec, std::size_t N = 4096, int modes = 10,
                     std::span<const double> candidates = {});

}  // namespace funceq
