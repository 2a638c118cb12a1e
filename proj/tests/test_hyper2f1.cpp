#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hexlab/hyper2f1.hpp"

#include <cmath>
#include <random>

using namespace hexlab;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-12, 12), den(3, 9);
  return Rational(num(rng), den(rng));
}

bool near_pole(const Rational& r) {
  // keep c and the CF denominators away from non-positive integers
  const double v = static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  return v < 0.25 && std::abs(v - std::round(v)) < 0.2;
}

}  // namespace

TEST_CASE("series") {
  const Rational a(1, 3), b(2, 5), c(7, 4);
  CHECK(f21_series(a, b, c, 0.0).value == Complex(1, 0));
  const Complex z(0.5, 0);
  CHECK(std::abs(f21_series(1, 1, 2, z).value - (-std::log(1.0 - z) / z)) < 1e-14);
  const Complex w(0.3, 0);
  CHECK(std::abs(f21_series(Rational(1, 3), Rational(5, 7), Rational(5, 7), w).value - std::pow(1.0 - w, -1.0 / 3)) < 1e-14);
  CHECK_THROWS_AS(f21_series(a, b, c, 1.0), Error);
  CHECK_THROWS_AS(f21_series(a, b, Rational(-2), 0.1), Error);
  CHECK_THROWS_AS(f21_series(a, b, Rational(0), 0.1), Error);
  // Terminating case.
  CHECK(std::abs(f21_series(Rational(-2), b, c, 0.5).value -
                 (1.0 + (-2.0 * 0.4 / 1.75) * 0.5 + (-2.0 * -1.0 * 0.4 * 1.4) / (1.75 * 2.75 * 2) * 0.25)) < 1e-15);

  // Euler transformation.
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> r(-0.7, 0.7);
  int tested = 0;
  while (tested < 30) {
    const Rational p = random_rational(rng), q = random_rational(rng), s = random_rational(rng);
    if (near_pole(s)) continue;
    const Complex x(r(rng), r(rng));
    if (std::abs(x) > 0.8) continue;
    ++tested;
    const Complex lhs = f21_series(p, q, s, x).value;
    const double e = boost::rational_cast<double>(s - p - q);
    const Complex rhs = std::pow(1.0 - x, e) * f21_series(s - p, s - q, s, x).value;
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("Gauss continued fraction") {
  CHECK(gauss_cf_ratio(1, 2, 3, 0.0).value == Complex(1, 0));
  const Rational a(1, 2), b(-1, 3), c(1, 3);
  const Complex z(0.5, 0);
  const Complex ratio = f21_series(a, b + 1, c + 1, z).value / f21_series(a, b, c, z).value;
  CHECK(std::abs(gauss_cf_ratio(a, b, c, z).value - ratio) < 1e-10 * std::abs(ratio));

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> r(-0.8, 0.8);
  int tested = 0;
  while (tested < 50) {
    const Rational p = random_rational(rng), q = random_rational(rng), s = random_rational(rng);
    if (near_pole(s) || near_pole(s + 1)) continue;
    const Complex x(r(rng), r(rng));
    if (std::abs(x) > 0.8) continue;
    const Complex den = f21_series(p, q, s, x).value;
    if (std::abs(den) < 1e-3) continue;
    ++tested;
    const Complex expect = f21_series(p, q + 1, s + 1, x).value / den;
    CHECK(std::abs(gauss_cf_ratio(p, q, s, x).value - expect) <= 1e-10 * std::abs(expect));
  }
  CHECK_THROWS_AS(gauss_cf_ratio(a, b, c, 1.5), Error);
}

TEST_CASE("specialized coefficients") {
  CHECK(specialized_cf_coeffs(1) == Rational(1, 2));
  CHECK(specialized_cf_coeffs(2) == Rational(3, 14));
  CHECK(specialized_cf_coeffs(3) == Rational(2, 7));
  CHECK_THROWS_AS(specialized_cf_coeffs(0), Error);
  for (long long k = 1; k <= 200; ++k) {
    const long long j = k / 2;
    const Rational third(1, 3);
    const Rational closed = k % 2 ? (j + third) / (2 * (2 * j + third)) : Rational(j) / (2 * (2 * j + third));
    CHECK(specialized_cf_coeffs(k) == closed);
    CHECK(specialized_cf_coeffs(k) == gauss_cf_coeff(Rational(2, 3), 0, Rational(1, 3), k));
  }
  const Complex z(0.4, 0.2);
  CHECK(std::abs(specialized_cf_value(z).value - f21_series(1, Rational(2, 3), Rational(4, 3), z).value) < 1e-12);
}

TEST_CASE("lambda") {
  CHECK(std::abs(lambda_modular(Complex(0, 1)).value - 0.5) < 1e-14);
  const Complex t(0.3, 0.7);
  CHECK(std::abs(lambda_modular(t + 2.0).value - lambda_modular(t).value) < 1e-13);
  const Complex l2 = lambda_modular(Complex(0, 2)).value;
  CHECK(std::abs(l2.imag()) < 1e-16);
  CHECK(l2.real() > 0);
  CHECK(l2.real() < 0.5);
  // lambda(-1/tau) = 1 - lambda(tau).
  const Complex s(0.2, 1.3);
  CHECK(std::abs(lambda_modular(-1.0 / s).value - (1.0 - lambda_modular(s).value)) < 1e-13);
  CHECK(std::abs(lambda_modular(Complex(0, 20)).value) < 1e-25);
  CHECK_THROWS_AS(lambda_modular(Complex(1, 0)), Error);
}

TEST_CASE("hexp through lambda") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> x(-1, 1), y(1, 3);
  for (int i = 0; i < 10; ++i) {
    const Complex tau(x(rng), y(rng));
    const LambdaHexp h = hexp_via_lambda(tau);
    const Complex ref = hexp_eval(tau).value;
    CHECK(std::abs(h.f21_form.value - ref) < 1e-6);
    CHECK(h.residual < 1e-10);
  }
  const LambdaHexp at2 = hexp_via_lambda(Complex(0, 2));
  CHECK(std::abs(at2.f21_form.value - hexp_eval(Complex(0, 2)).value) < 1e-12);
  const LambdaHexp high = hexp_via_lambda(Complex(0.1, 40));
  CHECK(std::abs(high.f21_form.value) < 1e-9);
  CHECK(std::abs(high.cf_form.value) < 1e-9);
  CHECK_THROWS_AS(hexp_via_lambda(Complex(0, 0.9)), Error);
}
