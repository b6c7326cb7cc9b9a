#pragma once

#include <complex>
#include <span>
#include <vector>

namespace funceq {

/// Dense univariate polynomial with real coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial constant(double c) { return Polynomial({c}); }
  static Polynomial identity() { return Polynomial({0.0, 1.0}); }

  std::span<const double> coefficients() const { return coeffs_; }
  double coefficient(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0.0;
  }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

  // Horner, highest coefficient first.
  template <class T>
  T operator()(T x) const {
    T acc = T(coeffs_.back());
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  Polynomial derivative() const;

  /// k-th derivative evaluated at x.
  double derivative_at(double x, int order) const;

  /// Coefficients c_k = p^{(k)}(at)/k!, i.e. p(at + h) = sum c_k h^k.
  std::vector<double> taylor_coefficients(double at) const;

  /// p(a + b x).
  Polynomial compose_affine(double a, double b) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator*(Polynomial lhs, double s) { return lhs *= s; }
  friend Polynomial operator*(double s, Polynomial rhs) { return rhs *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<double> coeffs_;
};

}  // namespace funceq
