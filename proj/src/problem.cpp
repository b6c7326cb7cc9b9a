#include "funceq/problem.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>

#include "funceq/error.hpp"

namespace funceq {
namespace {

constexpr double kBisectionWidth = 1e-6;
constexpr int kNewtonIterations = 60;

// Fixed point without the multiplier check; nullopt when nothing converges.
std::optional<double> locate_fixed_point(const Polynomial& Q, Bracket bracket) {
  const Polynomial dQ = Q.derivative();
  auto g = [&](double x) { return Q(x) - x; };

  double lo = std::min(bracket.lo, bracket.hi);
  double hi = std::max(bracket.lo, bracket.hi);
  double x = 0.5 * (lo + hi);
  double glo = g(lo);
  const double ghi = g(hi);
  if (glo == 0.0) {
    x = lo;
  } else if (ghi == 0.0) {
    x = hi;
  } else if ((glo < 0.0) != (ghi < 0.0)) {
    while (hi - lo > kBisectionWidth) {
      const double mid = 0.5 * (lo + hi);
      const double gm = g(mid);
      if ((gm < 0.0) == (glo < 0.0)) {
        lo = mid;
        glo = gm;
      } else {
        hi = mid;
      }
    }
    x = 0.5 * (lo + hi);
  }

  for (int it = 0; it < kNewtonIterations; ++it) {
    const double slope = dQ(x) - 1.0;
    if (slope == 0.0 || !std::isfinite(slope)) break;
    const double step = g(x) / slope;
    x -= step;
    if (!std::isfinite(x)) break;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) break;
  }
  if (!std::isfinite(x) || x <= 0.0) return std::nullopt;
  // Newton may stall one ulp away from the root; the residual decides.
  if (std::abs(g(x)) > 1e-14 * std::max(1.0, std::abs(x))) return std::nullopt;
  return x;
}

}  // namespace

double find_fixed_point(const Polynomial& Q, Bracket bracket) {
  const auto q = locate_fixed_point(Q, bracket);
  if (!q) throw Error(ErrorCode::NoFixedPoint, "no positive fixed point of Q near the bracket");
  const double slope = Q.derivative()(*q);
  if (!(slope > 1.0))
    throw Error(ErrorCode::NotRepelling, "Q'(q) = " + std::to_string(slope) + " is not > 1");
  return *q;
}

Constants derive_constants(const Polynomial& P, const Polynomial& Q, double q) {
  const double pq = P(q);
  if (pq == 0.0) throw Error(ErrorCode::DegenerateSpec, "P(q) = 0");
  const double slope = Q.derivative()(q);
  if (!(slope > 1.0))
    throw Error(ErrorCode::NotRepelling, "Q'(q) = " + std::to_string(slope) + " is not > 1");
  const double beta = std::log(slope);
  return {-beta / pq, beta};
}

ProblemSpec ProblemSpec::build(Polynomial P, Polynomial Q, Bracket bracket) {
  if (P.is_zero() || Q.is_zero()) throw Error(ErrorCode::DegenerateSpec, "P and Q must be nonzero");
  ProblemSpec spec;
  spec.q_ = find_fixed_point(Q, bracket);
  const auto [alpha, beta] = derive_constants(P, Q, spec.q_);
  spec.alpha_ = alpha;
  spec.beta_ = beta;
  spec.multiplier_ = Q.derivative()(spec.q_);
  spec.q_taylor_ = Q.taylor_coefficients(spec.q_);
  spec.p_taylor_ = P.taylor_coefficients(spec.q_);
  spec.P_ = std::move(P);
  spec.Q_ = std::move(Q);
  return spec;
}

std::string_view to_string(Diagnostic d) {
  switch (d) {
    case Diagnostic::NoFixedPoint: return "NoFixedPoint";
    case Diagnostic::AttractingOriginViolated: return "AttractingOriginViolated";
    case Diagnostic::NotRepelling: return "NotRepelling";
    case Diagnostic::PNonzeroAtOrigin: return "PNonzeroAtOrigin";
    case Diagnostic::PVanishesAtFixedPoint: return "PVanishesAtFixedPoint";
    case Diagnostic::OrbitNotAttracted: return "OrbitNotAttracted";
  }
  return "Unknown";
}

namespace {

constexpr int kOrbitSamples = 64;
constexpr int kOrbitIterations = 200;
constexpr double kOrbitThreshold = 1e-8;

bool sampled_orbits_attracted(const Polynomial& Q, double q) {
  const double radius = q * (1.0 - 1e-3);
  for (int j = 0; j < kOrbitSamples; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / kOrbitSamples;
    std::complex<double> z = std::polar(radius, theta);
    bool reached = false;
    for (int it = 0; it < kOrbitIterations; ++it) {
      z = Q(z);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > 1e6) break;
      if (std::abs(z) < kOrbitThreshold) {
        reached = true;
        break;
      }
    }
    if (!reached) return false;
  }
  return true;
}

}  // namespace

std::vector<Diagnostic> validate_spec(const Polynomial& P, const Polynomial& Q, Bracket bracket) {
  std::vector<Diagnostic> out;
  const double slope0 = Q.derivative()(0.0);
  if (!(slope0 >= 0.0 && slope0 < 1.0)) out.push_back(Diagnostic::AttractingOriginViolated);
  if (P(0.0) != 0.0) out.push_back(Diagnostic::PNonzeroAtOrigin);

  const auto q = locate_fixed_point(Q, bracket);
  if (!q) {
    out.push_back(Diagnostic::NoFixedPoint);
    return out;
  }
  if (!(Q.derivative()(*q) > 1.0)) out.push_back(Diagnostic::NotRepelling);
  if (P(*q) == 0.0) out.push_back(Diagnostic::PVanishesAtFixedPoint);
  if (!sampled_orbits_attracted(Q, *q)) out.push_back(Diagnostic::OrbitNotAttracted);
  return out;
}

std::vector<Diagnostic> validate_spec(const ProblemSpec& spec) {
  return validate_spec(spec.P(), spec.Q(), Bracket{spec.q() * (1.0 - 1e-3), spec.q() * (1.0 + 1e-3)});
}

bool is_two_three_tree(const Polynomial& P, const Polynomial& Q) {
  return P == Polynomial({0.0, 1.0}) && Q == Polynomial({0.0, 0.0, 1.0, 1.0});
}

}  // namespace funceq
