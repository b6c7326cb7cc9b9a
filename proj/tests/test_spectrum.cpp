#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "funceq/error.hpp"
#include "funceq/oracle.hpp"
#include "funceq/spectrum.hpp"

using namespace funceq;
using cd = std::complex<double>;

namespace {

ProblemSpec two_three() { return ProblemSpec::build(Polynomial({0.0, 1.0}), Polynomial({0.0, 0.0, 1.0, 1.0})); }
ProblemSpec squaring() { return ProblemSpec::build(Polynomial({0.0, 1.0}), Polynomial({0.0, 0.0, 1.0}), {0.5, 1.5}); }

// |got - printed| within `units` of the last quoted decimal place.
bool within_last_place(double got, double printed, double place, double units = 2.0) {
  return std::abs(got - printed) <= units * place * (1.0 + 1e-9);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

// mpmath loggamma at 30 digits: {re z, im z, re, im}.
constexpr std::array<std::array<double, 4>, 7> kLogGamma{{
    {0.0, -7.239308242910018, -11.44230309093108636, -6.2941713960851084763},
    {0.0, -72.0, -114.3167300555359115, -235.13340499090853919},
    {0.5, 30.0, -46.204951270642225835, 72.037310428805793215},
    {-2.5, 0.1, -0.10314924404281920289, -9.314444268359838115},
    {3.7, -1.2, 1.2096321530032438427, -1.4270217020402786282},
    {0.1, 0.0, 2.252712651734205902, 0.0},
    {-0.5, -100.0, -160.76587683211683315, -358.94163898277758098},
}};

}  // namespace

TEST_CASE("phi_eval") {
  const auto spec = two_three();
  CHECK(phi_eval(spec, 0.0) == cd(0.0));

  const cd z0 = 0.3;
  CHECK(std::abs(phi_eval(spec, z0) - spec.P()(z0) - phi_eval(spec, spec.Q()(z0))) <= 1e-12);

  // Against the exact Taylor coefficients.
  const auto table = coeffs_by_recurrence_23(120);
  for (cd z : {cd(0.3, 0.0), cd(-0.2, 0.25), cd(0.1, -0.35)}) {
    cd series = 0.0, power = 1.0;
    for (std::size_t n = 1; n <= table.size(); ++n) {
      power *= z;
      series += table.phi(n).get_d() * power;
    }
    CHECK(std::abs(phi_eval(spec, z) - series) <= 1e-13);
  }
}

TEST_CASE("Lambda periodicity and symmetry") {
  for (const auto& [spec, y] : {std::pair{two_three(), 2.0}, std::pair{squaring(), 1.0}}) {
    const int n = choose_offset(spec, y);
    CHECK(n >= 1);
    for (double x : {0.0, 0.13, 0.5, 0.77}) {
      const double xs = x - n;
      const cd a = lambda_value(spec, xs, y);
      CHECK(std::abs(lambda_value(spec, xs - 1.0, y) - a) <= 1e-9);
      CHECK(std::abs(lambda_value(spec, xs, -y) - std::conj(a)) <= 1e-9);
    }
  }
}

TEST_CASE("discrete_fourier") {
  std::vector<cd> constant(64, cd(0.75, -0.25));
  const auto c = discrete_fourier(constant);
  CHECK(std::abs(c[0] - cd(0.75, -0.25)) < 1e-15);
  for (std::size_t k = 1; k < c.size(); ++k) CHECK(std::abs(c[k]) < 1e-15);

  std::vector<cd> wave(32);
  for (std::size_t j = 0; j < wave.size(); ++j)
    wave[j] = 2.0 * std::exp(cd(0.0, 2.0 * M_PI * 3.0 * j / 32.0)) + cd(0.0, 1.0) * std::exp(cd(0.0, -2.0 * M_PI * j / 32.0));
  const auto w = discrete_fourier(wave);
  CHECK(std::abs(w[3] - 2.0) < 1e-14);
  CHECK(std::abs(w[31] - cd(0.0, 1.0)) < 1e-14);
  CHECK(std::abs(w[5]) < 1e-14);
}

TEST_CASE("log_gamma") {
  CHECK(std::abs(log_gamma(1.0)) < 1e-15);
  CHECK(std::abs(log_gamma(2.0)) < 1e-15);
  CHECK(std::abs(log_gamma(5.0) - std::log(24.0)) < 1e-14);
  CHECK(std::abs(log_gamma(0.5) - 0.5 * std::log(M_PI)) < 1e-14);

  for (const auto& [x, y, re, im] : kLogGamma) {
    const cd got = log_gamma(cd(x, y));
    CHECK(std::abs(got - cd(re, im)) <= 1e-12 * std::max(1.0, std::abs(cd(re, im))));
  }

  for (cd z : {cd(0.3, 2.0), cd(-4.2, 0.7), cd(12.0, -9.0), cd(0.01, -40.0)})
    CHECK(std::abs(log_gamma(z + 1.0) - log_gamma(z) - std::log(z)) <= 1e-12 * std::max(1.0, std::abs(log_gamma(z))));

  // |Gamma(ix)|^2 = pi/(x sinh(pi x))
  for (double x : {0.1, 1.0, 7.239308242910018, 36.0, 72.39308242910018}) {
    const double lhs = 2.0 * log_gamma(cd(0.0, x)).real();
    const double rhs = std::log(M_PI / (x * std::sinh(M_PI * x)));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }

  // Reflection, modulo the branch.
  for (cd z : {cd(0.3, 0.4), cd(-1.7, 2.0), cd(0.5, -6.0)}) {
    cd d = log_gamma(z) + log_gamma(1.0 - z) - std::log(M_PI / std::sin(M_PI * z));
    d.imag(std::remainder(d.imag(), 2.0 * M_PI));
    CHECK(std::abs(d) < 1e-12);
  }

  CHECK(code_of([] { log_gamma(0.0); }) == ErrorCode::PoleOfGamma);
  CHECK(code_of([] { log_gamma(-3.0); }) == ErrorCode::PoleOfGamma);
  CHECK(std::isfinite(log_gamma(-3.0 + 1e-9).real()));
}

TEST_CASE("gamma_ratio") {
  const double beta = two_three().beta();
  const cd r1 = gamma_ratio(1, cd(-0.10417, 0.0052295), 2.0, beta);
  CHECK(r1.real() == doctest::Approx(-0.033869).epsilon(2e-4));
  CHECK(r1.imag() == doctest::Approx(0.0013274).epsilon(2e-4));

  // lambda_hat sharing the phase of Gamma(-2 pi i m/beta) gives a real ratio.
  for (int m : {1, 3, 7}) {
    const cd lg = log_gamma(cd(0.0, -2.0 * M_PI * m / beta));
    const cd hat = std::polar(0.5, lg.imag());
    const cd r = gamma_ratio(m, hat, 2.0, beta);
    CHECK(std::abs(r.imag()) <= 1e-13 * std::abs(r));
    CHECK(r.real() > 0.0);
  }
  CHECK(code_of([&] { gamma_ratio(1, 0.0, 2.0, beta); }) == ErrorCode::ZeroCoefficient);
}

TEST_CASE("spectrum of the 2,3-tree equation") {
  const auto spec = two_three();
  const auto s = compute_spectrum(spec, 2.0, 4096, 10);
  REQUIRE(s.modes() == 10);
  REQUIRE(s.ratios.size() == 10);
  CHECK(s.grid_size == 4096);

  CHECK(within_last_place(s.lambda_hat[0].real(), -0.10417, 1e-5));
  CHECK(within_last_place(s.lambda_hat[0].imag(), 0.0052295, 1e-7));
  CHECK(within_last_place(s.lambda_hat[1].real(), 0.10883, 1e-5));
  CHECK(within_last_place(s.lambda_hat[1].imag(), 0.04913, 1e-5));
  CHECK(within_last_place(s.ratios[0].real(), -0.033869, 1e-6));
  CHECK(within_last_place(s.ratios[0].imag(), 0.0013274, 1e-7));
  CHECK(within_last_place(s.ratios[1].real(), 0.0047334, 1e-7));
  CHECK(within_last_place(s.ratios[1].imag(), -0.015924, 1e-6));

  CHECK(std::abs(s.lambda0.imag()) <= 1e-10);

  SUBCASE("grid refinement") {
    const auto half = compute_spectrum(spec, 2.0, 2048, 10);
    double scale = 0.0;
    for (const auto& v : s.lambda_hat) scale = std::max(scale, std::abs(v));
    for (int m = 0; m < 5; ++m) CHECK(std::abs(half.lambda_hat[m] - s.lambda_hat[m]) <= 1e-8 * scale);
  }
  SUBCASE("ratios do not depend on the line") {
    const auto lo = compute_spectrum(spec, 1.5, 4096, 6);
    const auto hi = compute_spectrum(spec, 1.8, 4096, 6);
    // The lower line damps high modes harder, so it resolves fewer of them.
    for (int m = 0; m < 4; ++m) CHECK(std::abs(lo.ratios[m] - s.ratios[m]) <= 1e-6 * std::abs(s.ratios[m]));
    for (int m = 0; m < 6; ++m) CHECK(std::abs(hi.ratios[m] - s.ratios[m]) <= 1e-6 * std::abs(s.ratios[m]));
  }
  SUBCASE("conjugate line gives conjugate coefficients") {
    const int n = choose_offset(spec, 2.0);
    const auto up = lambda_line(spec, -2.0, 1024, n);
    const auto down = lambda_line(spec, 2.0, 1024, n);
    const auto cu = discrete_fourier(up.values);
    const auto cdn = discrete_fourier(down.values);
    for (int m = 1; m <= 5; ++m) CHECK(std::abs(cu[1024 - m] - std::conj(cdn[m])) <= 1e-12);
  }
}

TEST_CASE("line shift selection") {
  const auto spec = two_three();
  const auto scan = scan_shift(spec, 1024, 5);
  CHECK(scan.trials.size() == 5);
  CHECK(scan.spectrum.y >= 2.0);
  bool any = false;
  for (const auto& t : scan.trials) any = any || t.accepted;
  CHECK(any);

  // Past the strip of analyticity for z^2 the grid stops being finite.
  const auto sq = squaring();
  const std::array<double, 3> candidates{1.0, 3.0, 4.0};
  const auto sq_scan = scan_shift(sq, 1024, 5, candidates);
  CHECK(sq_scan.spectrum.y == 1.0);
  CHECK(code_of([&] { lambda_line(sq, 3.0, 256, choose_offset(sq, 3.0)); }) == ErrorCode::BadShift);
}
