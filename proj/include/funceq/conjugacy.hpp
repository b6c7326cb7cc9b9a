#pragma once

#include <complex>
#include <span>
#include <vector>

#include "funceq/error.hpp"
#include "funceq/polynomial.hpp"
#include "funceq/problem.hpp"

namespace funceq {

namespace detail {

template <class T>
void bell_recurse(int part, int remaining_count, int remaining_weight, std::span<const T> xs,
                  double coeff, T prod, T& acc) {
  // part runs from the largest index down to 1; j_part copies of x_part.
  if (part == 0) {
    if (remaining_count == 0 && remaining_weight == 0) acc += T(coeff) * prod;
    return;
  }
  double fact_part = 1.0;
  for (int i = 2; i <= part; ++i) fact_part *= i;
  const T base = xs[part - 1] / T(fact_part);
  T power = T(1.0);
  double j_fact = 1.0;
  for (int j = 0; j <= remaining_count && j * part <= remaining_weight; ++j) {
    if (j > 0) {
      power *= base;
      j_fact *= j;
    }
    bell_recurse(part - 1, remaining_count - j, remaining_weight - j * part, xs, coeff / j_fact,
                 prod * power, acc);
  }
}

}  // namespace detail

/// Partial Bell polynomial B_{m,k}(x_1, ..., x_{m-k+1}) by direct enumeration
/// of all (j_1, ..., j_{m-k+1}) with sum j_i = k and sum i*j_i = m.
template <class T>
T bell_polynomial(int m, int k, std::span<const T> xs) {
  if (k < 1 || k > m) throw Error(ErrorCode::BadArity, "need 1 <= k <= m");
  if (static_cast<int>(xs.size()) != m - k + 1)
    throw Error(ErrorCode::BadArity, "expected " + std::to_string(m - k + 1) + " arguments, got " +
                                         std::to_string(xs.size()));
  double m_fact = 1.0;
  for (int i = 2; i <= m; ++i) m_fact *= i;
  T acc = T(0.0);
  detail::bell_recurse<T>(m - k + 1, k, m, xs, m_fact, T(1.0), acc);
  return acc;
}

/// Taylor data of the Schroeder map Psi at q.
struct SchroderData {
  /// Psi''(q), Psi'''(q), ..., Psi^{(M)}(q).
  std::vector<double> derivs;
  /// psi_1(r), ..., psi_{M-1}(r): Psi(z)^r = (q-z)^r sum_m psi_m(r)/m! (q-z)^m.
  std::vector<Polynomial> psi_polys;

  /// Psi^{(order)}(q); order 1 is -1 by normalization.
  double derivative(int order) const;
  /// psi_m with psi_0 = 1.
  Polynomial psi(int m) const;
};

/// Psi^{(m)}(q) for m = 2..max_order from the Faa di Bruno recurrence of
/// Psi(Q(z)) = Q'(q) Psi(z).
std::vector<double> schroder_derivatives(const ProblemSpec& spec, int max_order);

/// psi_1..psi_count built from Psi derivatives of orders 2..count+1.
///
/// The Bell-polynomial arguments are x_i = (-1)^{i+1} Psi^{(i+1)}(q)/(i+1)
/// and the binomial weight is the falling factorial r(r-1)...(r-k+1); the
/// result is checked against integer powers of the Psi Taylor series and
/// SignConventionMismatch is raised if it disagrees.
std::vector<Polynomial> psi_polynomials(std::span<const double> derivs, int count);

/// Derivatives through order max_order and psi polynomials through max_order - 1.
SchroderData make_schroder_data(const ProblemSpec& spec, int max_order = 8);

/// R(z) = (Q(z) - q)/(z - q), with R(q) = Q'(q).
std::complex<double> ratio_R(const ProblemSpec& spec, std::complex<double> z);

/// The same map written in the displacement e = q - z: R(q - e).
std::complex<double> ratio_R_offset(const ProblemSpec& spec, std::complex<double> e);

/// q - Q(q - e): Q seen from q.
std::complex<double> displacement_forward(const ProblemSpec& spec, std::complex<double> e);

/// Inverse of displacement_forward on the branch through e = 0.
std::complex<double> displacement_backward(const ProblemSpec& spec, std::complex<double> e);

/// Newton solve of Q(result) = w starting at seed.
std::complex<double> inverse_Q(const ProblemSpec& spec, std::complex<double> w, std::complex<double> seed);

/// Psi(z) = lim Q'(q)^N (q - Q_{-N}(z)).
std::complex<double> psi_eval(const ProblemSpec& spec, std::complex<double> z);

/// Pi(s) = lim Q_N(q - s/Q'(q)^N); the inverse of Psi.
std::complex<double> poincare_eval(const ProblemSpec& spec, std::complex<double> s);

/// Radius around q inside which the backward iteration is started directly.
inline double backward_radius(const ProblemSpec& spec) { return 0.25 * spec.q(); }

}  // namespace funceq
