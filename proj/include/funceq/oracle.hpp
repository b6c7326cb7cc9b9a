#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

#include "funceq/polynomial.hpp"
#include "funceq/problem.hpp"

namespace funceq {

/// Exact Taylor coefficients phi_1..phi_N of Phi.
struct CoefficientTable {
  /// coeffs[n-1] = phi_n.
  std::vector<mpq_class> coeffs;
  /// normalized[n-1] = n q^n phi_n; filled by normalize().
  std::vector<double> normalized;

  std::size_t size() const { return coeffs.size(); }
  const mpq_class& phi(std::size_t n) const { return coeffs.at(n - 1); }
};

/// Truncated composition Phi = sum_k P(Q_k(z)) in exact arithmetic.
/// Requires Q(0) = Q'(0) = 0 and P(0) = 0 so every degree receives finitely
/// many contributions; UnsupportedSpec otherwise.
CoefficientTable coeffs_by_composition(const Polynomial& P, const Polynomial& Q, std::size_t N);

/// phi_n = sum_{2k+3m=n} binom(k+m, k) phi_{k+m}, phi_1 = 1, for
/// Phi(z) = z + Phi(z^2 + z^3).
CoefficientTable coeffs_by_recurrence_23(std::size_t N);

/// As above, raising WrongSpec unless P = z and Q = z^2 + z^3.
CoefficientTable coeffs_by_recurrence_23(const ProblemSpec& spec, std::size_t N);

/// n q^n phi_n evaluated in log space with q refined in extended precision.
std::vector<double> normalize(std::span<const mpq_class> coeffs, const ProblemSpec& spec);

/// Fills table.normalized.
void normalize(CoefficientTable& table, const ProblemSpec& spec);

}  // namespace funceq
