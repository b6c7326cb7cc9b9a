#include "funceq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "funceq/error.hpp"

namespace funceq {
namespace {

// Truncated power series, index = degree, degrees 0..N.
template <class T>
using Series = std::vector<T>;

template <class T>
std::size_t valuation(const Series<T>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != 0) return i;
  return s.size();
}

template <class T>
Series<T> multiply(const Series<T>& a, const Series<T>& b) {
  const std::size_t n = a.size();
  Series<T> out(n, T(0));
  const std::size_t va = valuation(a);
  const std::size_t vb = valuation(b);
  for (std::size_t i = va; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = vb; i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// p(s) by Horner in series arithmetic.
template <class T>
Series<T> compose(const std::vector<T>& p, const Series<T>& s) {
  Series<T> acc(s.size(), T(0));
  acc[0] = p.back();
  for (auto it = p.rbegin() + 1; it != p.rend(); ++it) {
    acc = multiply(acc, s);
    acc[0] += *it;
  }
  return acc;
}

template <class T>
std::vector<T> exact_coefficients(const Polynomial& p);

template <>
std::vector<mpq_class> exact_coefficients<mpq_class>(const Polynomial& p) {
  std::vector<mpq_class> out;
  for (double c : p.coefficients()) out.emplace_back(c);  // binary doubles are exact rationals
  return out;
}

template <>
std::vector<mpz_class> exact_coefficients<mpz_class>(const Polynomial& p) {
  std::vector<mpz_class> out;
  for (double c : p.coefficients()) out.emplace_back(c);
  return out;
}

template <class T>
std::vector<mpq_class> compose_orbit_sum(const Polynomial& P, const Polynomial& Q, std::size_t N) {
  const auto p = exact_coefficients<T>(P);
  const auto q = exact_coefficients<T>(Q);
  Series<T> orbit(N + 1, T(0));
  if (N >= 1) orbit[1] = 1;
  Series<T> phi(N + 1, T(0));
  while (valuation(orbit) <= N) {
    const auto term = compose(p, orbit);
    for (std::size_t i = 0; i <= N; ++i) phi[i] += term[i];
    orbit = compose(q, orbit);
  }
  std::vector<mpq_class> out;
  out.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) out.emplace_back(phi[n]);
  return out;
}

bool all_integers(const Polynomial& p) {
  return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                     [](double c) { return c == std::floor(c) && std::abs(c) < 9.0e15; });
}

}  // namespace

CoefficientTable coeffs_by_composition(const Polynomial& P, const Polynomial& Q, std::size_t N) {
  if (Q.coefficient(0) != 0.0 || Q.coefficient(1) != 0.0)
    throw Error(ErrorCode::UnsupportedSpec, "composition oracle needs Q(0) = Q'(0) = 0");
  if (P.coefficient(0) != 0.0) throw Error(ErrorCode::UnsupportedSpec, "composition oracle needs P(0) = 0");
  CoefficientTable table;
  table.coeffs = all_integers(P) && all_integers(Q) ? compose_orbit_sum<mpz_class>(P, Q, N)
                                                    : compose_orbit_sum<mpq_class>(P, Q, N);
  return table;
}

CoefficientTable coeffs_by_recurrence_23(std::size_t N) {
  // phi_n = sum_j binom(j, n - 2j) phi_j: each finished phi_j feeds
  // phi_{2j+i} with weight binom(j, i). Contributions to phi_j come only
  // from indices <= j/2, so a single sweep over j suffices.
  std::vector<mpz_class> phi(N + 1, mpz_class(0));
  if (N >= 1) phi[1] = 1;

  const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<mpz_class> row;
  for (std::size_t j = 1; 2 * j <= N; ++j) {
    const std::size_t top = std::min(j, N - 2 * j);
    row.resize(top + 1);
    row[0] = 1;
    for (std::size_t i = 0; i < top; ++i) {
      mpz_mul_ui(row[i + 1].get_mpz_t(), row[i].get_mpz_t(), static_cast<unsigned long>(j - i));
      mpz_divexact_ui(row[i + 1].get_mpz_t(), row[i + 1].get_mpz_t(), static_cast<unsigned long>(i + 1));
    }
    const mpz_class& source = phi[j];
    // Distinct targets per i; exact integer sums are order independent.
    auto scatter = [&](std::size_t begin, std::size_t step) {
      for (std::size_t i = begin; i <= top; i += step)
        mpz_addmul(phi[2 * j + i].get_mpz_t(), row[i].get_mpz_t(), source.get_mpz_t());
    };
    if (top < 256 || workers == 1) {
      scatter(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 1; w < workers; ++w) pool.emplace_back(scatter, w, workers);
      scatter(0, workers);
      for (auto& t : pool) t.join();
    }
  }

  CoefficientTable table;
  table.coeffs.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) table.coeffs.emplace_back(phi[n]);
  return table;
}

CoefficientTable coeffs_by_recurrence_23(const ProblemSpec& spec, std::size_t N) {
  if (!is_two_three_tree(spec.P(), spec.Q()))
    throw Error(ErrorCode::WrongSpec, "the 2,3-tree recurrence applies only to P = z, Q = z^2 + z^3");
  return coeffs_by_recurrence_23(N);
}

namespace {

long double log_abs(const mpz_class& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(std::abs(static_cast<long double>(mant))) + static_cast<long double>(exp) * std::log(2.0L);
}

long double refined_fixed_point(const ProblemSpec& spec) {
  const auto& c = spec.Q().coefficients();
  long double x = spec.q();
  for (int it = 0; it < 3; ++it) {
    long double val = 0.0L, der = 0.0L;
    for (auto k = c.size(); k-- > 0;) {
      der = der * x + val;
      val = val * x + static_cast<long double>(c[k]);
    }
    const long double step = (val - x) / (der - 1.0L);
    x -= step;
  }
  return x;
}

}  // namespace

std::vector<double> normalize(std::span<const mpq_class> coeffs, const ProblemSpec& spec) {
  const long double log_q = std::log(refined_fixed_point(spec));
  std::vector<double> out;
  out.reserve(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const mpq_class& c = coeffs[i];
    const int sign = sgn(c);
    if (sign == 0) {
      out.push_back(0.0);
      continue;
    }
    const long double n = static_cast<long double>(i + 1);
    const long double log_value =
        std::log(n) + n * log_q + log_abs(c.get_num()) - log_abs(c.get_den());
    out.push_back(static_cast<double>(sign * std::exp(log_value)));
  }
  return out;
}

void normalize(CoefficientTable& table, const ProblemSpec& spec) { table.normalized = normalize(table.coeffs, spec); }

}  // namespace funceq
