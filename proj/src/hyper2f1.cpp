#include "hexlab/hyper2f1.hpp"

#include <cmath>
#include <limits>

namespace hexlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

double to_double(const Rational& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

bool nonpositive_integer(const Rational& r) { return r.denominator() == 1 && r.numerator() <= 0; }

Complex cbrt_principal(Complex w) { return w == Complex(0) ? Complex(0) : std::pow(w, 1.0 / 3.0); }

}  // namespace

ComplexVal f21_series(const Rational& a, const Rational& b, const Rational& c, Complex z, double tol) {
  if (nonpositive_integer(c)) throw Error(ErrorKind::BadParameter, "c is a non-positive integer");
  const double az = std::abs(z);
  if (az >= 1) throw Error(ErrorKind::OutOfDisk, "|z| >= 1");
  const double ad = to_double(a), bd = to_double(b), cd = to_double(c);
  const double scale = std::max({std::abs(ad), std::abs(bd), std::abs(cd)}) + 2;
  Complex term = 1, sum = 1;
  double mag = 1;
  for (long long n = 0; n < 10000000; ++n) {
    const double ratio = (ad + n) * (bd + n) / ((cd + n) * (n + 1));
    term *= ratio * z;
    sum += term;
    mag += std::abs(term);
    if (term == Complex(0)) return {sum, 4 * std::numeric_limits<double>::epsilon() * mag, 53};
    if (n > scale) {
      const double rho = std::max(az, std::abs(ratio) * az);
      const double tail = std::abs(term) * rho / (1 - rho);
      if (rho < 1 && tail < tol) return {sum, tail + 4 * std::numeric_limits<double>::epsilon() * mag, 53};
    }
  }
  throw Error(ErrorKind::NonConvergence, "2F1 series");
}

Rational gauss_cf_coeff(const Rational& a, const Rational& b, const Rational& c, long long k) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "CF coefficients start at k = 1");
  if (k % 2 == 1) {
    const long long j = (k - 1) / 2;
    const Rational den = (c + 2 * j) * (c + 2 * j + 1);
    if (den.numerator() == 0) throw Error(ErrorKind::BadParameter, "pole in CF coefficient");
    return (a + j) * (c - b + j) / den;
  }
  const long long j = k / 2;
  const Rational den = (c + 2 * j - 1) * (c + 2 * j);
  if (den.numerator() == 0) throw Error(ErrorKind::BadParameter, "pole in CF coefficient");
  return (b + j) * (c - a + j) / den;
}

namespace {

template <class Coeff>
ComplexVal evaluate_cf(Coeff coeff, Complex z, double tol) {
  auto at_depth = [&](long long depth) {
    Complex tail = 1;
    for (long long k = depth; k >= 1; --k) tail = 1.0 - coeff(k) * z / tail;
    return 1.0 / tail;
  };
  Complex prev = at_depth(16);
  for (long long depth = 32; depth <= 100000; depth *= 2) {
    const Complex cur = at_depth(depth);
    const double diff = std::abs(cur - prev);
    if (diff <= tol * std::max(1.0, std::abs(cur))) return {cur, diff, 53};
    prev = cur;
  }
  throw Error(ErrorKind::NonConvergence, "continued fraction did not settle within 1e5 terms");
}

}  // namespace

ComplexVal gauss_cf_ratio(const Rational& a, const Rational& b, const Rational& c, Complex z, double tol) {
  if (std::abs(z) >= 1) throw Error(ErrorKind::OutOfDisk, "|z| >= 1");
  if (nonpositive_integer(c)) throw Error(ErrorKind::BadParameter, "c is a non-positive integer");
  if (z == Complex(0)) return {1.0, 0.0, 53};
  return evaluate_cf([&](long long k) { return to_double(gauss_cf_coeff(a, b, c, k)); }, z, tol);
}

Rational specialized_cf_coeffs(long long k) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "k >= 1");
  const long long j = k / 2;
  if (k % 2 == 1) return Rational(3 * j + 1, 2 * (6 * j + 1));
  return Rational(3 * j, 2 * (6 * j + 1));
}

ComplexVal specialized_cf_value(Complex z, double tol) {
  if (std::abs(z) >= 1) throw Error(ErrorKind::OutOfDisk, "|z| >= 1");
  return evaluate_cf([](long long k) { return to_double(specialized_cf_coeffs(k)); }, z, tol);
}

ComplexVal lambda_modular(Complex tau, double tol) {
  if (!(tau.imag() > 0)) throw Error(ErrorKind::RegionError, "tau must lie in the upper half plane");
  const double y = tau.imag();
  // |q|^(n^2) with |q| = exp(-pi y); stop once the Gaussian tail is below tol.
  const long long n_max = static_cast<long long>(std::ceil(std::sqrt(std::max(0.0, -std::log(tol / 4)) / (kPi * y)))) + 2;
  if (n_max > 1000000) throw Error(ErrorKind::PrecisionExhausted, "theta series too long");
  Complex th2 = 0, th3 = 1;
  for (long long n = 0; n <= n_max; ++n) {
    const double e2 = (n + 0.5) * (n + 0.5);
    th2 += 2.0 * std::exp(Complex(0, kPi * e2) * tau);
    if (n >= 1) th3 += 2.0 * std::exp(Complex(0, kPi * static_cast<double>(n * n)) * tau);
  }
  const Complex r = th2 / th3;
  const Complex r2 = r * r;
  ComplexVal out;
  out.value = r2 * r2;
  out.error = tol + 16 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
  return out;
}

LambdaHexp hexp_via_lambda(Complex tau, double tol) {
  if (tau.imag() < 1) throw Error(ErrorKind::RegionError, "hexp via lambda needs Im(tau) >= 1");
  LambdaHexp out;
  out.lambda = lambda_modular(tau).value;
  const Complex pre = constants().C * 3.0 / Complex(0, 2 * kPi);
  const ComplexVal f = f21_series(Rational(1, 3), Rational(2, 3), Rational(4, 3), out.lambda, tol);
  const Complex root = cbrt_principal(out.lambda / 2.0);
  out.f21_form = {pre * root * f.value, std::abs(pre * root) * f.error, 53};
  const ComplexVal k = specialized_cf_value(out.lambda, tol);
  const Complex root2 = cbrt_principal(out.lambda * (1.0 - out.lambda) / 2.0);
  out.cf_form = {pre * root2 * k.value, std::abs(pre * root2) * k.error, 53};
  out.residual = std::abs(out.cf_form.value - out.f21_form.value);
  return out;
}

}  // namespace hexlab
