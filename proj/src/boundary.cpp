#include "funceq/boundary.hpp"

#include <cmath>

#include "funceq/conjugacy.hpp"
#include "funceq/detail/complex_math.hpp"
#include "funceq/error.hpp"

namespace funceq {
namespace {

constexpr int kMaxTerms = 200;
constexpr double kIncrementTolerance = 1e-13;

// P(q - e)/P(q) - 1 without forming P(q - e) first.
std::complex<double> p_relative_change(const ProblemSpec& spec, std::complex<double> e) {
  const auto& p = spec.p_taylor();
  const std::complex<double> h = -e;
  std::complex<double> acc = 0.0;
  for (std::size_t k = p.size() - 1; k >= 1; --k) acc = acc * h + p[k];
  return acc * h / p[0];
}

// (R(q - e) - Q'(q))/Q'(q).
std::complex<double> ratio_relative_change(const ProblemSpec& spec, std::complex<double> e) {
  const auto& t = spec.q_taylor();
  const std::complex<double> h = -e;
  std::complex<double> acc = 0.0;
  for (std::size_t k = t.size() - 1; k >= 2; --k) acc = acc * h + t[k];
  return acc * h / spec.multiplier();
}

}  // namespace

LogTResult ln_T(const ProblemSpec& spec, std::complex<double> z) {
  std::complex<double> e = spec.q() - z;
  if (e == 0.0) throw Error(ErrorCode::AtSingularity, "ln T diverges at z = q");

  LogTResult out;
  out.value = std::log(e);
  const double beta = spec.beta();
  for (int m = 1; m <= kMaxTerms; ++m) {
    e = displacement_backward(spec, e);
    const auto term = beta * p_relative_change(spec, e) - detail::log1p(ratio_relative_change(spec, e));
    out.value += term;
    out.terms_used = m;
    if (std::abs(term) < kIncrementTolerance) {
      out.tail_bound = std::abs(term) / (spec.multiplier() - 1.0);
      return out;
    }
  }
  throw Error(ErrorCode::NoConvergence, "ln T series did not converge within 200 terms");
}

}  // namespace funceq
