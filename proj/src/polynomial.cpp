#include "funceq/polynomial.hpp"

#include <algorithm>

namespace funceq {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  trim();
}

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() == 1) return Polynomial();
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

double Polynomial::derivative_at(double x, int order) const {
  const auto t = taylor_coefficients(x);
  if (order < 0 || order >= static_cast<int>(t.size())) return 0.0;
  double fact = 1.0;
  for (int i = 2; i <= order; ++i) fact *= i;
  return t[order] * fact;
}

std::vector<double> Polynomial::taylor_coefficients(double at) const {
  // Repeated synthetic division by (x - at); long double keeps the shift
  // accurate when the coefficients alternate in sign.
  std::vector<long double> work(coeffs_.begin(), coeffs_.end());
  const long double a = at;
  const std::size_t n = work.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = n - 1; i > k; --i) work[i - 1] += a * work[i];
  }
  return std::vector<double>(work.begin(), work.end());
}

Polynomial Polynomial::compose_affine(double a, double b) const {
  // Horner in polynomial arithmetic: acc <- acc * (a + b x) + c.
  std::vector<double> acc{coeffs_.back()};
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
    std::vector<double> next(acc.size() + 1, 0.0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] += a * acc[i];
      next[i + 1] += b * acc[i];
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return Polynomial(std::move(acc));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<double> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

}  // namespace funceq
