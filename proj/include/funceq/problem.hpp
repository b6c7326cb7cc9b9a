#pragma once

#include <string_view>
#include <vector>

#include "funceq/polynomial.hpp"

namespace funceq {

struct Bracket {
  double lo = 0.1;
  double hi = 0.9;
};

/// Locates the positive fixed point Q(q) = q inside `bracket` and checks
/// that it repels (Q'(q) > 1).
///
/// Bisection shrinks the bracket to width 1e-6 when Q(x) - x changes sign;
/// otherwise Newton starts from the midpoint. Newton then polishes to full
/// double precision.
double find_fixed_point(const Polynomial& Q, Bracket bracket);

struct Constants {
  double alpha;
  double beta;
};

/// beta = ln Q'(q), alpha = -beta / P(q).
Constants derive_constants(const Polynomial& P, const Polynomial& Q, double q);

/// One instance of Phi(z) = P(z) + Phi(Q(z)) together with the constants
/// every later stage needs. Immutable after construction.
class ProblemSpec {
 public:
  static ProblemSpec build(Polynomial P, Polynomial Q, Bracket bracket = {});

  const Polynomial& P() const { return P_; }
  const Polynomial& Q() const { return Q_; }
  double q() const { return q_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  /// Q'(q).
  double multiplier() const { return multiplier_; }

  /// Q^{(k)}(q)/k! and P^{(k)}(q)/k!, k = 0..deg.
  const std::vector<double>& q_taylor() const { return q_taylor_; }
  const std::vector<double>& p_taylor() const { return p_taylor_; }

 private:
  ProblemSpec() = default;

  Polynomial P_;
  Polynomial Q_;
  double q_ = 0.0;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  double multiplier_ = 0.0;
  std::vector<double> q_taylor_;
  std::vector<double> p_taylor_;
};

enum class Diagnostic {
  NoFixedPoint,
  AttractingOriginViolated,
  NotRepelling,
  PNonzeroAtOrigin,
  PVanishesAtFixedPoint,
  OrbitNotAttracted,
};

std::string_view to_string(Diagnostic d);

/// Checks the standing assumptions that can be tested on a finite sample:
/// 0 <= Q'(0) < 1, Q'(q) > 1, P(0) = 0, P(q) != 0, and forward orbits of 64
/// points on the circle |z| = q(1 - 1e-3) reaching |z| < 1e-8 within 200
/// iterations. An empty result means every check passed.
std::vector<Diagnostic> validate_spec(const Polynomial& P, const Polynomial& Q, Bracket bracket = {});
std::vector<Diagnostic> validate_spec(const ProblemSpec& spec);

/// True iff the instance is the 2,3-tree equation P(z) = z, Q(z) = z^2 + z^3.
bool is_two_three_tree(const Polynomial& P, const Polynomial& Q);

}  // namespace funceq
