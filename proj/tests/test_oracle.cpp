#include <gmpxx.h>

#include <cmath>

#include "doctest.h"
#include "funceq/error.hpp"
#include "funceq/oracle.hpp"

using namespace funceq;

namespace {

const Polynomial kZ({0.0, 1.0});
const Polynomial kTwoThree({0.0, 0.0, 1.0, 1.0});

ProblemSpec two_three() { return ProblemSpec::build(kZ, kTwoThree); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("composition oracle") {
  const auto t = coeffs_by_composition(kZ, kTwoThree, 40);
  REQUIRE(t.size() == 40);
  const int first[] = {1, 1, 1, 1, 2, 2, 3, 4, 5};
  for (int n = 1; n <= 9; ++n) CHECK(t.phi(n) == first[n - 1]);

  const auto sq = coeffs_by_composition(kZ, Polynomial({0.0, 0.0, 1.0}), 130);
  for (std::size_t n = 1; n <= sq.size(); ++n) CHECK(sq.phi(n) == ((n & (n - 1)) == 0 ? 1 : 0));

  // Linear in P.
  const auto a = coeffs_by_composition(Polynomial({0.0, 0.0, 1.0}), kTwoThree, 40);
  const auto mix = coeffs_by_composition(Polynomial({0.0, 1.0, 2.0}), kTwoThree, 40);
  for (std::size_t n = 1; n <= 40; ++n) CHECK(mix.phi(n) == t.phi(n) + 2 * a.phi(n));

  // Rational coefficients.
  const auto half = coeffs_by_composition(Polynomial({0.0, 0.5}), Polynomial({0.0, 0.0, 0.5, 0.5}), 12);
  CHECK(half.phi(1) == mpq_class(1, 2));
  CHECK(half.phi(2) == mpq_class(1, 4));

  CHECK(code_of([] { coeffs_by_composition(kZ, Polynomial({0.0, 0.5, 1.0}), 10); }) == ErrorCode::UnsupportedSpec);
  CHECK(code_of([] { coeffs_by_composition(Polynomial({1.0, 1.0}), kTwoThree, 10); }) == ErrorCode::UnsupportedSpec);
}

TEST_CASE("recurrence oracle") {
  const auto t = coeffs_by_recurrence_23(600);
  CHECK(t.phi(1) == 1);
  CHECK(t.phi(2) == 1);
  CHECK(t.phi(9) == 5);
  for (std::size_t n = 1; n <= t.size(); ++n) {
    CHECK(t.phi(n).get_den() == 1);
    CHECK(t.phi(n) > 0);
  }
  const auto c = coeffs_by_composition(kZ, kTwoThree, 500);
  bool same = true;
  for (std::size_t n = 1; n <= 500; ++n) same = same && (c.phi(n) == t.phi(n));
  CHECK(same);

  CHECK(code_of([] { coeffs_by_recurrence_23(ProblemSpec::build(Polynomial({0.0, 0.0, 1.0}), kTwoThree), 10); }) ==
        ErrorCode::WrongSpec);
  CHECK(coeffs_by_recurrence_23(two_three(), 20).phi(20) == t.phi(20));
}

TEST_CASE("normalize") {
  const auto spec = two_three();
  auto t = coeffs_by_recurrence_23(2000);
  normalize(t, spec);
  REQUIRE(t.normalized.size() == 2000);
  CHECK(t.normalized[0] == doctest::Approx(spec.q()).epsilon(1e-15));
  for (std::size_t n = 100; n <= 2000; ++n) {
    CHECK(t.normalized[n - 1] > 0.6);
    CHECK(t.normalized[n - 1] < 0.82);
  }
  for (std::size_t n = 1990; n < 2000; ++n) {
    const double ratio = mpq_class(t.phi(n + 1) / t.phi(n)).get_d();
    CHECK(ratio == doctest::Approx(1.0 / spec.q()).epsilon(0.01));
  }

  // Against 512-bit floating point.
  mpf_class q(5, 512);
  q = (sqrt(q) - 1) / 2;
  for (std::size_t n : {1u, 37u, 500u, 1999u, 2000u}) {
    mpf_class qn(0, 512);
    mpf_pow_ui(qn.get_mpf_t(), q.get_mpf_t(), n);
    const mpf_class expect = mpf_class(t.phi(n), 512) * qn * static_cast<unsigned long>(n);
    CHECK(t.normalized[n - 1] == doctest::Approx(expect.get_d()).epsilon(1e-12));
  }
  CHECK(normalize(t.coeffs, spec) == t.normalized);
}
