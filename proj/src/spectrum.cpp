#include "funceq/spectrum.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "funceq/boundary.hpp"
#include "funceq/conjugacy.hpp"
#include "funceq/detail/complex_math.hpp"
#include "funceq/error.hpp"

namespace funceq {

std::complex<double> phi_eval(const ProblemSpec& spec, std::complex<double> z) {
  constexpr int kEntryLimit = 500;
  constexpr int kHardLimit = 100000;
  constexpr double kTermTolerance = 1e-15;
  constexpr double kEscape = 1e8;

  const double inner = 0.5 * spec.q();
  std::complex<double> sum = 0.0;
  int small_run = 0;
  bool entered = false;
  for (int n = 0; n < kHardLimit; ++n) {
    const auto term = spec.P()(z);
    sum += term;
    small_run = std::abs(term) < kTermTolerance ? small_run + 1 : 0;
    if (small_run == 3) return sum;
    if (std::abs(z) < inner) entered = true;
    if (!entered && n >= kEntryLimit)
      throw Error(ErrorCode::NoConvergence, "forward orbit did not approach 0 within 500 steps");
    z = spec.Q()(z);
    if (!detail::is_finite(z) || std::abs(z) > kEscape)
      throw Error(ErrorCode::NoConvergence, "forward orbit escapes");
  }
  throw Error(ErrorCode::NoConvergence, "Phi series did not converge");
}

std::complex<double> lambda_value(const ProblemSpec& spec, double x, double y) {
  const double beta = spec.beta();
  const auto s = std::exp(std::complex<double>(beta * x, -beta * y));
  const auto w = poincare_eval(spec, s);
  return phi_eval(spec, w) - ln_T(spec, w).value / spec.alpha();
}

int choose_offset(const ProblemSpec& spec, double y) {
  constexpr int kMaxOffset = 200;
  constexpr int kProbes = 8;
  const double limit = 0.5 * backward_radius(spec);
  const double beta = spec.beta();
  for (int n = 1; n <= kMaxOffset; ++n) {
    bool inside = true;
    for (int j = 0; j < kProbes && inside; ++j) {
      const double x = -n + static_cast<double>(j) / kProbes;
      const auto s = std::exp(std::complex<double>(beta * x, -beta * y));
      inside = std::abs(poincare_eval(spec, s) - spec.q()) < limit;
    }
    if (inside) return n;
  }
  throw Error(ErrorCode::BadShift, "no grid offset places the samples near q");
}

GridSample lambda_line(const ProblemSpec& spec, double y, std::size_t N, int n_offset) {
  GridSample grid;
  grid.y = y;
  grid.n_offset = n_offset;
  grid.values.resize(N);

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, std::max<std::size_t>(1, N / 64));
  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](std::size_t w) {
    try {
      for (std::size_t j = w; j < N; j += workers) {
        const double x = -n_offset + static_cast<double>(j) / static_cast<double>(N);
        grid.values[j] = lambda_value(spec, x, y);
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();

  for (const auto& f : failures) {
    if (!f) continue;
    try {
      std::rethrow_exception(f);
    } catch (const Error& e) {
      throw Error(ErrorCode::BadShift, "y = " + std::to_string(y) + " leaves the analyticity strip (" +
                                           e.what() + ")");
    }
  }
  for (const auto& v : grid.values)
    if (!detail::is_finite(v)) throw Error(ErrorCode::BadShift, "non-finite Lambda sample at y = " + std::to_string(y));
  return grid;
}

namespace {

struct FftwPlan {
  FftwPlan(std::size_t n, fftw_complex* in, fftw_complex* out)
      : plan(fftw_plan_dft_1d(static_cast<int>(n), in, out, FFTW_FORWARD, FFTW_ESTIMATE)) {}
  ~FftwPlan() { fftw_destroy_plan(plan); }
  FftwPlan(const FftwPlan&) = delete;
  FftwPlan& operator=(const FftwPlan&) = delete;

  fftw_plan plan;
};

}  // namespace

std::vector<std::complex<double>> discrete_fourier(std::span<const std::complex<double>> values) {
  const std::size_t n = values.size();
  std::vector<std::complex<double>> in(values.begin(), values.end());
  std::vector<std::complex<double>> out(n);
  if (n == 0) return out;
  {
    // std::complex<double> is layout-compatible with fftw_complex.
    FftwPlan plan(n, reinterpret_cast<fftw_complex*>(in.data()), reinterpret_cast<fftw_complex*>(out.data()));
    fftw_execute(plan.plan);
  }
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& c : out) c *= scale;
  return out;
}

FourierSpectrum fourier_extract(const GridSample& grid, int modes) {
  const auto coeffs = discrete_fourier(grid.values);
  FourierSpectrum out;
  out.y = grid.y;
  out.grid_size = grid.values.size();
  out.lambda0 = coeffs.empty() ? 0.0 : coeffs[0];
  const int available = static_cast<int>(coeffs.size() / 2) - 1;
  for (int m = 1; m <= std::min(modes, available); ++m) out.lambda_hat.push_back(coeffs[m]);
  return out;
}

std::complex<double> gamma_ratio(int m, std::complex<double> lambda_hat, double y, double beta) {
  if (!(std::abs(lambda_hat) > 0.0) || !detail::is_finite(lambda_hat))
    throw Error(ErrorCode::ZeroCoefficient, "lambda_hat_" + std::to_string(m) + " vanishes");
  const double two_pi_m = 2.0 * std::numbers::pi * m;
  const auto lg = log_gamma(std::complex<double>(0.0, -two_pi_m / beta));
  return std::exp(std::log(lambda_hat) - lg - two_pi_m * y);
}

void attach_gamma_ratios(FourierSpectrum& spectrum, double beta) {
  spectrum.ratios.clear();
  for (int m = 1; m <= spectrum.modes(); ++m)
    spectrum.ratios.push_back(gamma_ratio(m, spectrum.lambda_hat[m - 1], spectrum.y, beta));
}

FourierSpectrum compute_spectrum(const ProblemSpec& spec, double y, std::size_t N, int modes) {
  const int offset = choose_offset(spec, y);
  auto spectrum = fourier_extract(lambda_line(spec, y, N, offset), modes);
  attach_gamma_ratios(spectrum, spec.beta());
  return spectrum;
}

ShiftScan scan_shift(const ProblemSpec& spec, std::size_t N, int modes, std::span<const double> candidates) {
  static constexpr double kDefaultCandidates[] = {1.0, 1.5, 2.0, 2.5, 3.0};
  if (candidates.empty()) candidates = kDefaultCandidates;
  constexpr int kCheckedModes = 5;
  constexpr double kStability = 1e-6;

  ShiftScan scan;
  bool found = false;
  for (double y : candidates) {
    bool ok = false;
    FourierSpectrum full;
    try {
      full = compute_spectrum(spec, y, N, modes);
      const auto half = compute_spectrum(spec, y, N / 2, modes);
      double scale = 0.0;
      for (const auto& c : full.lambda_hat) scale = std::max(scale, std::abs(c));
      ok = scale > 0.0;
      const int checked = std::min({kCheckedModes, full.modes(), half.modes()});
      for (int m = 0; m < checked && ok; ++m)
        ok = std::abs(full.lambda_hat[m] - half.lambda_hat[m]) <= kStability * scale;
    } catch (const Error&) {
      ok = false;
    }
    scan.trials.push_back({y, ok});
    if (ok && (!found || y > scan.spectrum.y)) {
      scan.spectrum = std::move(full);
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::BadShift, "no candidate shift gives a finite, stable spectrum");
  return scan;
}

}  // namespace funceq
