#include "funceq/expansion.hpp"

#include <cmath>
#include <numbers>

#include "funceq/detail/complex_math.hpp"
#include "funceq/error.hpp"

namespace funceq {

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
  trim();
}

void RationalPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class RationalPolynomial::operator()(const mpq_class& x) const {
  mpq_class acc = coeffs_.back();
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> RationalPolynomial::operator()(std::complex<double> x) const {
  std::complex<double> acc = coeffs_.back().get_d();
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

RationalPolynomial RationalPolynomial::compose_affine(const mpq_class& a, const mpq_class& b) const {
  std::vector<mpq_class> acc{coeffs_.back()};
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
    std::vector<mpq_class> next(acc.size() + 1, mpq_class(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] += a * acc[i];
      next[i + 1] += b * acc[i];
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return RationalPolynomial(std::move(acc));
}

Polynomial RationalPolynomial::to_double() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_d());
  return Polynomial(std::move(out));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpq_class(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& lhs, const RationalPolynomial& rhs) {
  std::vector<mpq_class> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(RationalPolynomial lhs, const mpq_class& s) {
  for (auto& c : lhs.coeffs_) c *= s;
  lhs.trim();
  return lhs;
}

RationalPolynomial binomial_in_r(const mpq_class& a, int j) {
  RationalPolynomial out({mpq_class(1)});
  mpq_class fact = 1;
  for (int i = 0; i < j; ++i) {
    out = out * RationalPolynomial({mpq_class(a - i), mpq_class(-1)});
    fact *= (i + 1);
  }
  return out * mpq_class(1 / fact);
}

SPolyTable s_polynomials(int K) {
  SPolyTable table;
  table.polys.emplace_back(std::vector<mpq_class>{mpq_class(1)});
  const RationalPolynomial r_plus_one({mpq_class(1), mpq_class(1)});
  for (int k = 2; k <= K + 1; ++k) {
    RationalPolynomial rhs;
    for (int j = 2; j <= k; ++j) {
      RationalPolynomial factor = binomial_in_r(mpq_class(-(k - j) - 1), j);
      factor += r_plus_one * mpq_class(j % 2 == 0 ? -1 : 1);
      rhs += table.polys[k - j] * factor;
    }
    table.polys.push_back(rhs * mpq_class(1, k - 1));
  }
  return table;
}

std::complex<double> binom_general(std::complex<double> r, unsigned n) {
  constexpr unsigned kDirectLimit = 64;
  if (n <= kDirectLimit) {
    std::complex<double> acc = 1.0;
    for (unsigned i = 0; i < n; ++i) acc *= (r - static_cast<double>(i)) / static_cast<double>(i + 1);
    return acc;
  }
  // (r - i)/(i + 1) = -(1 - (r + 1)/(i + 1)); each log stays small.
  std::complex<double> log_sum = 0.0;
  for (unsigned i = 0; i < n; ++i) {
    const auto w = -(r + 1.0) / static_cast<double>(i + 1);
    if (w == -1.0) return 0.0;
    log_sum += detail::log1p(w);
  }
  return (n % 2 == 0 ? 1.0 : -1.0) * std::exp(log_sum);
}

Polynomial a_polynomial(int order, const ProblemSpec& spec, const SchroderData& schroder, const SPolyTable& s_table) {
  if (order < 0) throw Error(ErrorCode::BadArity, "A polynomial order must be nonnegative");
  if (static_cast<int>(s_table.polys.size()) <= order)
    throw Error(ErrorCode::BadArity, "S table too short for A_" + std::to_string(order));
  const double inv_beta = 1.0 / spec.beta();
  Polynomial out;
  double q_pow = 1.0;
  for (int j = 0; j <= order; ++j) {
    const int k = order - j;
    const Polynomial psi = schroder.psi(j).compose_affine(0.0, inv_beta);
    // binom(-1 - z/beta, j) in z.
    const Polynomial binom = binomial_in_r(mpq_class(-1), j).to_double().compose_affine(0.0, inv_beta);
    const Polynomial s = s_table.S(k).compose_affine(mpq_class(j), mpq_class(1)).to_double().compose_affine(0.0, inv_beta);
    out += (psi * binom * s) * q_pow;
    q_pow *= spec.q();
  }
  return out;
}

ExpansionTable::ExpansionTable(const ProblemSpec& spec, FourierSpectrum spectrum, int terms)
    : q_(spec.q()),
      beta_(spec.beta()),
      alpha_(spec.alpha()),
      spectrum_(std::move(spectrum)),
      schroder_(make_schroder_data(spec, std::max(terms, 1) + 1)),
      s_table_(s_polynomials(std::max(terms - 1, 0))) {
  if (terms < 1) throw Error(ErrorCode::BadArity, "need at least one asymptotic term");
  if (spectrum_.ratios.size() != spectrum_.lambda_hat.size()) attach_gamma_ratios(spectrum_, beta_);
  for (int r = 0; r < terms; ++r) a_polys_.push_back(a_polynomial(r, spec, schroder_, s_table_));
  for (int r = 0; r < terms; ++r) {
    std::vector<std::complex<double>> w;
    for (int m = 1; m <= spectrum_.modes(); ++m) {
      const std::complex<double> z(0.0, 2.0 * std::numbers::pi * m);
      w.push_back(spectrum_.ratios[m - 1] * a_polys_[r](z));
    }
    weights_.push_back(std::move(w));
  }
}

double K_eval(int r, double x, const ExpansionTable& table, int modes) {
  if (r < 1 || r > table.terms()) throw Error(ErrorCode::BadArity, "K_" + std::to_string(r) + " not tabulated");
  const auto& w = table.mode_weights(r);
  const int used = modes < 0 ? static_cast<int>(w.size()) : std::min(modes, static_cast<int>(w.size()));
  double sum = 0.0;
  for (int m = 1; m <= used; ++m) {
    const double phase = 2.0 * std::numbers::pi * m * (x - std::floor(x));
    sum += (w[m - 1] * std::complex<double>(std::cos(phase), std::sin(phase))).real();
  }
  sum *= 2.0;
  if (r == 1) sum += -1.0 / table.alpha();
  return sum;
}

double log_period_coordinate(unsigned long n, const ExpansionTable& table) {
  return (std::log(table.q()) - std::log(static_cast<double>(n))) / table.beta();
}

AsymptoticEstimate asymptotic_terms(unsigned long n, int R, const ExpansionTable& table) {
  if (n == 0) throw Error(ErrorCode::BadArity, "n must be positive");
  AsymptoticEstimate est;
  est.n = n;
  est.x = log_period_coordinate(n, table);
  double scale = 1.0;
  for (int r = 1; r <= R; ++r) {
    est.terms.push_back(K_eval(r, est.x, table) * scale);
    scale /= static_cast<double>(n);
  }
  return est;
}

double asymptotic_coeff(unsigned long n, int R, const ExpansionTable& table) {
  double sum = 0.0;
  for (double t : asymptotic_terms(n, R, table).terms) sum += t;
  return sum;
}

}  // namespace funceq
