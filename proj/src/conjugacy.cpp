#include "funceq/conjugacy.hpp"

#include <algorithm>
#include <cmath>

#include "funceq/detail/complex_math.hpp"

namespace funceq {

double SchroderData::derivative(int order) const {
  if (order == 0) return 0.0;
  if (order == 1) return -1.0;
  const auto idx = static_cast<std::size_t>(order - 2);
  if (idx >= derivs.size()) throw Error(ErrorCode::BadArity, "derivative order not available");
  return derivs[idx];
}

Polynomial SchroderData::psi(int m) const {
  if (m == 0) return Polynomial::constant(1.0);
  const auto idx = static_cast<std::size_t>(m - 1);
  if (idx >= psi_polys.size()) throw Error(ErrorCode::BadArity, "psi polynomial not available");
  return psi_polys[idx];
}

std::vector<double> schroder_derivatives(const ProblemSpec& spec, int max_order) {
  if (max_order < 2) return {};
  const double slope = spec.multiplier();

  // Q^{(i)}(q), i = 1..max_order.
  std::vector<double> q_derivs(max_order + 1, 0.0);
  double fact = 1.0;
  for (int i = 1; i <= max_order; ++i) {
    fact *= i;
    q_derivs[i] = i < static_cast<int>(spec.q_taylor().size()) ? spec.q_taylor()[i] * fact : 0.0;
  }

  std::vector<double> psi(max_order + 1, 0.0);
  psi[1] = -1.0;
  for (int m = 2; m <= max_order; ++m) {
    double sum = 0.0;
    for (int k = 1; k < m; ++k) {
      std::span<const double> args(q_derivs.data() + 1, m - k + 1);
      sum += psi[k] * bell_polynomial<double>(m, k, args);
    }
    psi[m] = sum / (slope - std::pow(slope, m));
  }
  return {psi.begin() + 2, psi.end()};
}

namespace {

// r(r-1)...(r-k+1).
Polynomial falling_factorial(int k) {
  Polynomial out = Polynomial::constant(1.0);
  for (int i = 0; i < k; ++i) out = out * Polynomial({-static_cast<double>(i), 1.0});
  return out;
}

std::vector<Polynomial> psi_from_bell(std::span<const double> derivs, int count, bool alternating) {
  // x_i built from Psi^{(i+1)}(q), i = 1..count.
  std::vector<double> xs(count);
  for (int i = 1; i <= count; ++i) {
    const double d = derivs[i - 1];
    const double sign = alternating ? ((i + 1) % 2 == 0 ? 1.0 : -1.0) : -1.0;
    xs[i - 1] = sign * d / (i + 1);
  }
  std::vector<Polynomial> out;
  for (int m = 1; m <= count; ++m) {
    Polynomial p;
    for (int k = 1; k <= m; ++k) {
      const double b = bell_polynomial<double>(m, k, std::span<const double>(xs.data(), m - k + 1));
      p += falling_factorial(k) * b;
    }
    out.push_back(std::move(p));
  }
  return out;
}

// Coefficients of (Psi(q-u)/u)^power through u^count.
std::vector<double> psi_series_power(std::span<const double> derivs, int count, int power) {
  std::vector<double> base(count + 1, 0.0);
  base[0] = 1.0;
  double fact = 1.0;
  for (int i = 1; i <= count; ++i) {
    fact *= (i + 1);
    const double sign = ((i + 1) % 2 == 0) ? 1.0 : -1.0;
    base[i] = sign * derivs[i - 1] / fact;
  }
  std::vector<double> acc(count + 1, 0.0);
  acc[0] = 1.0;
  for (int p = 0; p < power; ++p) {
    std::vector<double> next(count + 1, 0.0);
    for (int i = 0; i <= count; ++i)
      for (int j = 0; i + j <= count; ++j) next[i + j] += acc[i] * base[j];
    acc = std::move(next);
  }
  return acc;
}

bool matches_series(const std::vector<Polynomial>& polys, std::span<const double> derivs, int count) {
  for (int power = 1; power <= 3; ++power) {
    const auto series = psi_series_power(derivs, count, power);
    double fact = 1.0;
    for (int m = 1; m <= count; ++m) {
      fact *= m;
      const double lhs = polys[m - 1](static_cast<double>(power)) / fact;
      const double rhs = series[m];
      if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, std::abs(rhs))) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Polynomial> psi_polynomials(std::span<const double> derivs, int count) {
  if (count <= 0) return {};
  if (static_cast<int>(derivs.size()) < count)
    throw Error(ErrorCode::BadArity, "psi_" + std::to_string(count) + " needs derivatives through order " +
                                         std::to_string(count + 1));
  for (bool alternating : {true, false}) {
    auto polys = psi_from_bell(derivs, count, alternating);
    if (matches_series(polys, derivs, count)) return polys;
  }
  throw Error(ErrorCode::SignConventionMismatch, "no sign reading reproduces the Psi^r series");
}

SchroderData make_schroder_data(const ProblemSpec& spec, int max_order) {
  SchroderData data;
  data.derivs = schroder_derivatives(spec, max_order);
  data.psi_polys = psi_polynomials(data.derivs, max_order - 1);
  return data;
}

std::complex<double> ratio_R_offset(const ProblemSpec& spec, std::complex<double> e) {
  // R(q - e) = sum_{k>=1} t_k (-e)^{k-1}, t_k = Q^{(k)}(q)/k!.
  const auto& t = spec.q_taylor();
  const std::complex<double> h = -e;
  std::complex<double> acc = 0.0;
  for (std::size_t k = t.size() - 1; k >= 1; --k) acc = acc * h + t[k];
  return acc;
}

std::complex<double> ratio_R(const ProblemSpec& spec, std::complex<double> z) {
  return ratio_R_offset(spec, spec.q() - z);
}

std::complex<double> displacement_forward(const ProblemSpec& spec, std::complex<double> e) {
  return e * ratio_R_offset(spec, e);
}

namespace {

constexpr int kNewtonMax = 100;

// Q'(q - e) from the Taylor data at q.
std::complex<double> slope_offset(const ProblemSpec& spec, std::complex<double> e) {
  const auto& t = spec.q_taylor();
  const std::complex<double> h = -e;
  std::complex<double> acc = 0.0;
  for (std::size_t k = t.size() - 1; k >= 1; --k) acc = acc * h + static_cast<double>(k) * t[k];
  return acc;
}

}  // namespace

std::complex<double> displacement_backward(const ProblemSpec& spec, std::complex<double> e) {
  if (e == 0.0) return 0.0;
  std::complex<double> x = e / spec.multiplier();
  for (int it = 0; it < kNewtonMax; ++it) {
    const auto f = displacement_forward(spec, x) - e;
    const auto step = f / slope_offset(spec, x);
    x -= step;
    if (!detail::is_finite(x)) break;
    if (std::abs(step) <= 2e-16 * std::abs(x)) return x;
  }
  if (detail::is_finite(x) && std::abs(displacement_forward(spec, x) - e) <= 1e-15 * std::abs(e)) return x;
  throw Error(ErrorCode::NewtonDiverged, "backward step did not converge");
}

std::complex<double> inverse_Q(const ProblemSpec& spec, std::complex<double> w, std::complex<double> seed) {
  const Polynomial dQ = spec.Q().derivative();
  std::complex<double> x = seed;
  for (int it = 0; it < kNewtonMax; ++it) {
    const auto f = spec.Q()(x) - w;
    const auto slope = dQ(x);
    if (slope == 0.0) break;
    const auto step = f / slope;
    x -= step;
    if (!detail::is_finite(x)) break;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) {
      if (std::abs(spec.Q()(x) - w) <= 1e-13 * std::max(1.0, std::abs(w))) return x;
    }
  }
  throw Error(ErrorCode::NewtonDiverged, "inverse of Q did not converge");
}

std::complex<double> psi_eval(const ProblemSpec& spec, std::complex<double> z) {
  constexpr int kMaxDepth = 200;
  std::complex<double> e = spec.q() - z;
  if (e == 0.0) return 0.0;
  std::complex<double> prev = e;
  double scale = 1.0;
  for (int n = 1; n <= kMaxDepth; ++n) {
    const auto next = displacement_backward(spec, e);
    if (!(std::abs(next) < std::abs(e)))
      throw Error(ErrorCode::NoConvergence, "backward orbit does not contract towards q");
    e = next;
    scale *= spec.multiplier();
    const auto approx = scale * e;
    if (std::abs(approx - prev) < 1e-13) return approx;
    prev = approx;
  }
  throw Error(ErrorCode::NoConvergence, "Psi limit did not settle within 200 backward steps");
}

namespace {

// Q_N(q - s/Q'(q)^N), iterated as e <- e R(q - e) from e = s/Q'(q)^N.
std::complex<double> poincare_depth(const ProblemSpec& spec, std::complex<double> s, int depth) {
  std::complex<double> e = s / std::pow(spec.multiplier(), depth);
  for (int i = 0; i < depth; ++i) e = e * ratio_R_offset(spec, e);
  return spec.q() - e;
}

}  // namespace

std::complex<double> poincare_eval(const ProblemSpec& spec, std::complex<double> s) {
  constexpr int kMaxDepth = 200;
  if (s == 0.0) return spec.q();
  // Start deep enough that the neglected quadratic term sits below rounding.
  int depth = static_cast<int>(std::ceil(std::log(std::max(std::abs(s), 1e-300) * 1e17) / spec.beta()));
  depth = std::clamp(depth, 1, kMaxDepth);
  auto prev = poincare_depth(spec, s, depth);
  while (depth + 4 <= kMaxDepth) {
    depth += 4;
    const auto cur = poincare_depth(spec, s, depth);
    if (!detail::is_finite(cur)) break;
    if (std::abs(cur - prev) <= 1e-15 * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  throw Error(ErrorCode::DepthExceeded, "Pi recursion did not stabilize by depth 200");
}

}  // namespace funceq
