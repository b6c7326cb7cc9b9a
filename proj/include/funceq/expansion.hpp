#pragma once

#include <gmpxx.h>

#include <complex>
#include <vector>

#include "funceq/conjugacy.hpp"
#include "funceq/polynomial.hpp"
#include "funceq/problem.hpp"
#include "funceq/spectrum.hpp"

namespace funceq {

/// Polynomial in one variable with exact rational coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() : coeffs_{mpq_class(0)} {}
  explicit RationalPolynomial(std::vector<mpq_class> coeffs);

  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  mpq_class operator()(const mpq_class& x) const;
  std::complex<double> operator()(std::complex<double> x) const;

  /// p(a + b x).
  RationalPolynomial compose_affine(const mpq_class& a, const mpq_class& b) const;
  Polynomial to_double() const;

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  friend RationalPolynomial operator*(const RationalPolynomial& lhs, const RationalPolynomial& rhs);
  friend RationalPolynomial operator*(RationalPolynomial lhs, const mpq_class& s);

 private:
  void trim();

  std::vector<mpq_class> coeffs_;
};

/// binom(a - r, j) as a polynomial in r.
RationalPolynomial binomial_in_r(const mpq_class& a, int j);

/// S_0, S_2, ..., S_{2K} from
///   (-1)^n binom(r, n) ~ n^{-r-1}/Gamma(-r) * sum_k S_{2k}(r)/n^k.
struct SPolyTable {
  std::vector<RationalPolynomial> polys;  // polys[k] = S_{2k}

  const RationalPolynomial& S(int k) const { return polys.at(k); }
};

/// Built with the recurrence
///   (k-1) S_{2(k-1)} = sum_{j=2}^{k} S_{2(k-j)} (binom(-(k-j)-r-1, j) + (-1)^{j-1}(r+1)).
SPolyTable s_polynomials(int K);

/// r(r-1)...(r-n+1)/n!; long products are summed in log space.
std::complex<double> binom_general(std::complex<double> r, unsigned n);

/// A_order(z) = sum_{j+k=order} q^j psi_j(z/beta) binom(-1 - z/beta, j) S_{2k}(j + z/beta).
Polynomial a_polynomial(int order, const ProblemSpec& spec, const SchroderData& schroder, const SPolyTable& s_table);

/// Everything needed to evaluate the periodic functions K_1..K_R.
class ExpansionTable {
 public:
  ExpansionTable(const ProblemSpec& spec, FourierSpectrum spectrum, int terms);

  int terms() const { return static_cast<int>(a_polys_.size()); }
  int modes() const { return spectrum_.modes(); }
  double q() const { return q_; }
  double beta() const { return beta_; }
  double alpha() const { return alpha_; }
  const FourierSpectrum& spectrum() const { return spectrum_; }
  const SchroderData& schroder() const { return schroder_; }
  const SPolyTable& s_table() const { return s_table_; }
  /// A_0 .. A_{terms-1}; K_r uses A_{r-1}.
  const std::vector<Polynomial>& a_polys() const { return a_polys_; }

  /// ratio_m * A_{r-1}(2 pi i m), m = 1..modes.
  const std::vector<std::complex<double>>& mode_weights(int r) const { return weights_.at(r - 1); }

 private:
  double q_;
  double beta_;
  double alpha_;
  FourierSpectrum spectrum_;
  SchroderData schroder_;
  SPolyTable s_table_;
  std::vector<Polynomial> a_polys_;
  std::vector<std::vector<std::complex<double>>> weights_;
};

/// K_r(x) using the first `modes` Fourier modes (all when modes < 0).
/// K_1 carries the constant -1/alpha; K_r for r >= 2 has none.
double K_eval(int r, double x, const ExpansionTable& table, int modes = -1);

/// x_n = (ln q - ln n)/beta.
double log_period_coordinate(unsigned long n, const ExpansionTable& table);

struct AsymptoticEstimate {
  unsigned long n = 0;
  double x = 0.0;
  /// K_r(x_n)/n^{r-1}, r = 1..R.
  std::vector<double> terms;
};

AsymptoticEstimate asymptotic_terms(unsigned long n, int R, const ExpansionTable& table);

/// sum_{r=1}^{R} K_r(x_n)/n^{r-1}, the estimate of n q^n phi_n.
double asymptotic_coeff(unsigned long n, int R, const ExpansionTable& table);

}  // namespace funceq
