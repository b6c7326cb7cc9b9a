#pragma once

#include <complex>

#include "funceq/problem.hpp"

namespace funceq {

struct LogTResult {
  std::complex<double> value;
  int terms_used = 0;
  /// Geometric estimate of the neglected tail of the series.
  double tail_bound = 0.0;
};

/// ln T(z) for T(z) = e^{alpha P(z)} T(Q(z)), T(q) = 0, T'(q) = -1.
///
/// Summed along the backward orbit Q_{-m}(z) -> q as
///   ln(q - z) + sum_m [ beta P(Q_{-m}(z))/P(q) - ln R(Q_{-m}(z)) ],
/// with every term formed in the displacement from q so that it stays
/// accurate as the orbit closes in. Principal branch for ln(q - z).
LogTResult ln_T(const ProblemSpec& spec, std::complex<double> z);

}  // namespace funceq
