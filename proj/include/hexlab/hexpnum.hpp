#pragma once

// Numerics of hexp, the primitive of C eta^4: constants, q-series,
// equivariant evaluation through the fundamental domain, cusp values and
// radial scans toward quadratic irrationals.

#include "hexlab/contfrac.hpp"
#include "hexlab/modgroup.hpp"
#include "hexlab/numeric_types.hpp"
#include "hexlab/sturmian.hpp"

#include <complex>
#include <utility>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace hexlab {

template <class Real>
struct BasicConstants {
  Real abs_omega0;                // 2 sqrt(pi) / 3^(1/4)
  Real C;                         // 2^(10/3) / 3^(3/4) pi^(5/2) / Gamma(1/3)^3
  Real varpi0;                    // Gamma(1/3)^3 / (2^(4/3) pi)
  std::complex<Real> omega0;      // -i abs_omega0 = u_X - u_Y
  std::complex<Real> u_X, u_Y;    // abs_omega0 exp(-+ i pi / 6)
  std::complex<Real> zeta;        // exp(i pi / 3), the rotation of hex_image's Z/6
};

template <class Real>
BasicConstants<Real> make_constants() {
  using std::pow;
  using std::sqrt;
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  const Real pi = boost::math::constants::pi<Real>();
  const Real g3 = pow(boost::math::tgamma(Real(1) / 3), 3);
  BasicConstants<Real> k;
  k.abs_omega0 = 2 * sqrt(pi) / pow(Real(3), Real(1) / 4);
  k.C = pow(Real(2), Real(10) / 3) / pow(Real(3), Real(3) / 4) * pow(pi, Real(5) / 2) / g3;
  k.varpi0 = g3 / (pow(Real(2), Real(4) / 3) * pi);
  const Real half_sqrt3 = sqrt(Real(3)) / 2;
  using Cx = std::complex<Real>;
  k.u_X = Cx(Real(k.abs_omega0 * half_sqrt3), Real(-k.abs_omega0 / 2));
  k.u_Y = Cx(Real(k.abs_omega0 * half_sqrt3), Real(k.abs_omega0 / 2));
  k.omega0 = Cx(Real(0), Real(-k.abs_omega0));
  k.zeta = Cx(Real(1) / 2, half_sqrt3);
  return k;
}

using Constants = BasicConstants<double>;
const Constants& constants();

/// A value with a conservative absolute error bound.
struct ComplexVal {
  Complex value;
  double error = 0.0;
  int precision_bits = 53;
};

/// Affine action w -> zeta^rho w + m u_X + n u_Y of a hex element.
Complex hex_affine(const HexElement& h, Complex w);

/// Lattice point m u_X + n u_Y.
Complex lattice_point(long long m, long long n);

/// eta^4 from its q-series, reduced to the fundamental domain first.
ComplexVal eta4(Complex tau, double tol = 1e-14);

/// Direct q-series for Im(tau) >= 0.5; RegionError below.
ComplexVal hexp_series(Complex tau, double tol = 1e-14);

/// The same series truncated after raw index n_max (no region check).
Complex hexp_series_terms(Complex tau, long long n_max);

namespace detail {
inline Integer real_to_integer(double x) { return Integer(x); }
template <class Real>
Integer real_to_integer(const Real& x) { return x.template convert_to<Integer>(); }
}  // namespace detail

/// tau = A tau0 with tau0 in the closed standard fundamental domain.
template <class Real>
std::pair<std::complex<Real>, ProjMatrix> reduce_to_fundamental(std::complex<Real> tau) {
  using std::abs;
  using std::floor;
  using std::norm;
  using boost::multiprecision::floor;
  if (!(tau.imag() > 0)) throw Error(ErrorKind::RegionError, "tau must lie in the upper half plane");
  Integer a = 1, b = 0, c = 0, d = 1;  // running A
  for (int guard = 0; guard < 1000000; ++guard) {
    const Real shift = floor(tau.real() + Real(1) / 2);
    if (shift != 0) {
      const Integer k = detail::real_to_integer(shift);
      tau -= std::complex<Real>(shift, Real(0));
      // A <- A R^k
      b += a * k;
      d += c * k;
    }
    const Real n2 = tau.real() * tau.real() + tau.imag() * tau.imag();
    if (n2 >= 1) break;
    // tau <- S tau = -1/tau, A <- A S
    tau = std::complex<Real>(-tau.real() / n2, tau.imag() / n2);
    Integer na = b, nb = -a, nc = d, nd = -c;
    a = std::move(na);
    b = std::move(nb);
    c = std::move(nc);
    d = std::move(nd);
  }
  return {tau, ProjMatrix(a, b, c, d)};
}

/// Equivariant evaluation: reduce, sum the series at tau0, apply hex_image(A).
ComplexVal hexp_eval(Complex tau, double tol = 1e-13);

/// Same for a point given to DeepReal precision (deep radial samples).
ComplexVal hexp_eval_deep(const std::complex<DeepReal>& tau, double tol = 1e-13);

struct CuspValue {
  long long m = 0;
  long long n = 0;
  Complex value;
};

/// Closed form m u_X + n u_Y from the translation of hex_image of a Gamma'
/// representative with first column (a, c); NotCoprime unless gcd = 1.
CuspValue cusp_value(const Integer& a, const Integer& c);

/// hexp_eval(a/c + i eps) for each eps; the cusp 1/0 is approached along i/eps.
std::vector<ComplexVal> cusp_limit_numeric(const Integer& a, const Integer& c, const std::vector<double>& epsilons);

struct CuspSeries {
  std::vector<Complex> partial;  // partial[k] sums raw indices n <= k + 1
  std::vector<Complex> cesaro;   // running means of partial
  Complex target;                // cusp_value
  double final_partial_distance = 0.0;
  double final_cesaro_distance = 0.0;
  double oscillation = 0.0;      // max |partial - target| over the last half
};

/// Partial sums of (12C/(i pi)) sum psi(n)/n exp(i pi (a/c) n / 12), n <= N.
CuspSeries cusp_series_partial(const Integer& a, const Integer& c, long long N);

struct RadialSample {
  double t = 0.0;
  double modulus = 0.0;
  double argument = 0.0;
  Complex value;
};

/// Point at hyperbolic distance t from i on the geodesic from i toward alpha.
std::complex<DeepReal> geodesic_point(const DeepReal& alpha, const DeepReal& t);

/// hexp along the geodesic from i to alpha at t = t_max k / steps, k = 1..steps.
/// PrecisionExhausted if t_max exceeds what DeepReal resolves.
std::vector<RadialSample> radial_scan(const QuadSurd& alpha, double t_max, int steps);

/// Largest t that radial_scan accepts.
double radial_depth_limit();

/// arg(m u_X + n u_Y) for the translation (m, n) of the slope's period;
/// ZeroTranslation for (0, 0).
double shexp_limit(const Slope& slope);

struct ConstantsReport {
  double varpi0_quadrature = 0.0;
  double varpi0_closed = 0.0;
  double varpi0_error = 0.0;
  double omega0_sq_error = 0.0;  // | |omega0|^2 - 4 pi / sqrt 3 |
  double area_integral = 0.0;    // integral of |eta^4|^2 dx dy over the ideal triangle (0, 1, oo)
  double area_target = 0.0;      // pi / |C|^2
  double area_error = -1.0;      // negative when skipped
  bool ok = false;
};

ConstantsReport check_constants(double tol = 1e-8, bool with_area = false);

}  // namespace hexlab
