#pragma once

// Gauss hypergeometric series, the Gauss continued fraction for contiguous
// ratios, the modular lambda function and hexp written through lambda.

#include "hexlab/hexpnum.hpp"

#include <boost/rational.hpp>

namespace hexlab {

using Rational = boost::rational<long long>;

/// sum (a;n)(b;n) / ((c;n) n!) z^n; OutOfDisk for |z| >= 1, BadParameter
/// when c is a non-positive integer.
ComplexVal f21_series(const Rational& a, const Rational& b, const Rational& c, Complex z, double tol = 1e-14);

/// Coefficient n_k of 2F1(a,b+1;c+1;z) / 2F1(a,b;c;z) = 1/(1 - n_1 z/(1 - n_2 z/(1 - ...))):
/// n_{2j+1} = (a+j)(c-b+j) / ((c+2j)(c+2j+1)), n_{2j} = (b+j)(c-a+j) / ((c+2j-1)(c+2j)).
Rational gauss_cf_coeff(const Rational& a, const Rational& b, const Rational& c, long long k);

/// The continued fraction above, depth doubling from 16 until two depths
/// agree to tol (relative); NonConvergence past 10^5 terms.
ComplexVal gauss_cf_ratio(const Rational& a, const Rational& b, const Rational& c, Complex z, double tol = 1e-13);

/// n_{2j+1} = (j + 1/3) / (2 (2j + 1/3)), n_{2j} = j / (2 (2j + 1/3)); k >= 1.
Rational specialized_cf_coeffs(long long k);

/// 1/(1 - n_1 z/(1 - n_2 z/ ...)) with the coefficients above, which equals
/// 2F1(1, 2/3; 4/3; z).
ComplexVal specialized_cf_value(Complex z, double tol = 1e-13);

/// lambda = theta_2^4 / theta_3^4 with nome exp(i pi tau).
ComplexVal lambda_modular(Complex tau, double tol = 1e-15);

struct LambdaHexp {
  Complex lambda;
  ComplexVal f21_form;  // C (3/(2 pi i)) (lambda/2)^(1/3) 2F1(1/3, 2/3; 4/3; lambda)
  ComplexVal cf_form;   // C (3/(2 pi i)) (lambda (1 - lambda)/2)^(1/3) 2F1(1, 2/3; 4/3; lambda) via the CF
  double residual = 0.0;  // |cf_form - f21_form|
};

/// RegionError unless Im(tau) >= 1.
LambdaHexp hexp_via_lambda(Complex tau, double tol = 1e-13);

}  // namespace hexlab
