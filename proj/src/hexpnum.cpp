#include "hexlab/hexpnum.hpp"

#include "hexlab/psi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace hexlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Terms of sum_j coeff(n) q^(n/24) over n = 24 j + 4, with the number of
// terms chosen so the tail bound sum bound(n) |q|^(n/24) is below tol.
struct SeriesPlan {
  long long terms = 0;
  double tail = 0.0;
};

template <class Bound>
SeriesPlan plan_series(double y, double tol, Bound bound) {
  const double r_q = std::exp(-2 * kPi * y);  // |q| per step of 24 in n
  SeriesPlan plan;
  for (long long j = 0;; ++j) {
    const double n = 24.0 * j + 4;
    const double term = bound(n) * std::exp(-2 * kPi * y * n / 24);
    const double ratio = bound(n + 24) / bound(n) * r_q;
    if (ratio < 1 && term / (1 - ratio) < tol) {
      plan.terms = j;
      plan.tail = term / (1 - ratio);
      return plan;
    }
    if (j > 50000000) throw Error(ErrorKind::PrecisionExhausted, "q-series does not reach tolerance");
  }
}

int hex_rotation(const HexElement& h) { return ((h.rho % 6) + 6) % 6; }

Complex zeta_pow(int k) {
  static const Complex table[6] = {
      {1, 0}, {0.5, 0.86602540378443864676}, {-0.5, 0.86602540378443864676},
      {-1, 0}, {-0.5, -0.86602540378443864676}, {0.5, -0.86602540378443864676}};
  return table[((k % 6) + 6) % 6];
}

// sum_j a(6j+1) w(n) q^(n/24), n = 24 j + 4, w(n) = 1/n or 1.
Complex q_sum(Complex tau, long long terms, bool divide_by_n, double* abs_sum) {
  const auto table = shared_table(6 * std::max<long long>(terms, 1) + 1);
  const Complex step = std::exp(Complex(0, 2 * kPi) * tau);
  Complex qn = std::exp(Complex(0, 2 * kPi / 6) * tau);
  Complex sum = 0;
  double mag = 0;
  for (long long j = 0; j < terms; ++j) {
    const long long n = 24 * j + 4;
    const double coeff = static_cast<double>(table->a(6 * j + 1)) / (divide_by_n ? static_cast<double>(n) : 1.0);
    const Complex term = coeff * qn;
    sum += term;
    mag += std::abs(term);
    qn *= step;
  }
  if (abs_sum) *abs_sum = mag;
  return sum;
}

Complex hexp_prefactor() { return Complex(0, -12 * constants().C / kPi); }

}  // namespace

const Constants& constants() {
  static const Constants k = make_constants<double>();
  return k;
}

Complex lattice_point(long long m, long long n) {
  const Constants& k = constants();
  return static_cast<double>(m) * k.u_X + static_cast<double>(n) * k.u_Y;
}

Complex hex_affine(const HexElement& h, Complex w) { return zeta_pow(hex_rotation(h)) * w + lattice_point(h.m, h.n); }

ComplexVal hexp_series(Complex tau, double tol) {
  if (tau.imag() < 0.5) throw Error(ErrorKind::RegionError, "direct series needs Im(tau) >= 0.5");
  const double pre = 12 * constants().C / kPi;
  const SeriesPlan plan = plan_series(tau.imag(), tol / pre, [](double n) { return std::sqrt(n); });
  double mag = 0;
  const Complex s = q_sum(tau, plan.terms, true, &mag);
  ComplexVal out;
  out.value = hexp_prefactor() * s;
  out.error = pre * (plan.tail + 8 * kEps * mag * (plan.terms + 1));
  return out;
}

Complex hexp_series_terms(Complex tau, long long n_max) {
  const long long terms = n_max >= 4 ? (n_max - 4) / 24 + 1 : 0;
  return hexp_prefactor() * q_sum(tau, terms, true, nullptr);
}

ComplexVal eta4(Complex tau, double tol) {
  const auto [tau0, A] = reduce_to_fundamental(tau);
  const SeriesPlan plan = plan_series(tau0.imag(), tol, [](double n) { return n * std::sqrt(n); });
  double mag = 0;
  const Complex s = q_sum(tau0, plan.terms, false, &mag);
  const HexElement h = hex_image(A);
  const Complex j = static_cast<double>(A.c()) * tau0 + static_cast<double>(A.d());
  const Complex factor = zeta_pow(hex_rotation(h)) * j * j;
  ComplexVal out;
  out.value = factor * s;
  out.error = std::abs(factor) * (plan.tail + 8 * kEps * mag * (plan.terms + 1));
  return out;
}

namespace {

ComplexVal finish_eval(Complex tau0, const ProjMatrix& A, double tol) {
  const ComplexVal base = hexp_series(tau0, tol);
  const HexElement h = hex_image(A);
  ComplexVal out;
  out.value = hex_affine(h, base.value);
  const double lattice_scale = (std::abs(static_cast<double>(h.m)) + std::abs(static_cast<double>(h.n))) *
                               constants().abs_omega0;
  out.error = base.error + 4 * kEps * (lattice_scale + std::abs(base.value));
  return out;
}

}  // namespace

ComplexVal hexp_eval(Complex tau, double tol) {
  const auto [tau0, A] = reduce_to_fundamental(tau);
  return finish_eval(tau0, A, tol);
}

ComplexVal hexp_eval_deep(const std::complex<DeepReal>& tau, double tol) {
  const auto [tau0, A] = reduce_to_fundamental(tau);
  const Complex t0(static_cast<double>(tau0.real()), static_cast<double>(tau0.imag()));
  return finish_eval(t0, A, tol);
}

CuspValue cusp_value(const Integer& a, const Integer& c) {
  const ProjMatrix A = gamma_prime_rep_for_cusp(a, c);
  const HexElement h = hex_image(A);
  return {h.m, h.n, lattice_point(h.m, h.n)};
}

std::vector<ComplexVal> cusp_limit_numeric(const Integer& a, const Integer& c, const std::vector<double>& epsilons) {
  if (c == 0 && a == 0) throw Error(ErrorKind::NotCoprime, "(0, 0)");
  std::vector<ComplexVal> out;
  out.reserve(epsilons.size());
  for (double eps : epsilons) {
    if (!(eps > 0)) throw Error(ErrorKind::BadParameter, "eps must be positive");
    // The cusp at infinity is approached from above; 1/0 is only a label.
    const double x = c == 0 ? 0.0 : static_cast<double>(BigReal(a) / BigReal(c));
    const double y = c == 0 ? 1.0 / eps : eps;
    out.push_back(hexp_eval(Complex(x, y)));
  }
  return out;
}

CuspSeries cusp_series_partial(const Integer& a, const Integer& c, long long N) {
  if (N < 1 || N > 1000000) throw Error(ErrorKind::BoundExceeded, "N must lie in [1, 10^6]");
  CuspSeries out;
  out.target = cusp_value(a, c).value;
  const auto table = shared_table(N / 4 + 1);
  const Complex pre = hexp_prefactor();
  const Integer period = 24 * (c < 0 ? Integer(-c) : c);
  out.partial.reserve(static_cast<std::size_t>(N));
  out.cesaro.reserve(static_cast<std::size_t>(N));
  Complex partial = 0, running = 0;
  for (long long n = 1; n <= N; ++n) {
    if (n % 24 == 4) {
      const long long a_n = table->a(n / 4);
      if (a_n != 0) {
        double angle = 0;
        if (period != 0) {
          // exp(i pi (a/c) n / 12) = exp(2 pi i (a n mod 24c) / 24c)
          const Integer r = mod_floor(Integer(a) * n * (c < 0 ? -1 : 1), period);
          angle = 2 * kPi * static_cast<double>(BigReal(r) / BigReal(period));
        }
        partial += pre * (static_cast<double>(a_n) / static_cast<double>(n)) * std::polar(1.0, angle);
      }
    }
    running += partial;
    out.partial.push_back(partial);
    out.cesaro.push_back(running / static_cast<double>(n));
  }
  out.final_partial_distance = std::abs(out.partial.back() - out.target);
  out.final_cesaro_distance = std::abs(out.cesaro.back() - out.target);
  for (std::size_t k = out.partial.size() / 2; k < out.partial.size(); ++k) {
    out.oscillation = std::max(out.oscillation, std::abs(out.partial[k] - out.target));
  }
  return out;
}

std::complex<DeepReal> geodesic_point(const DeepReal& alpha, const DeepReal& t) {
  const DeepReal E = exp(t);
  const DeepReal E2 = E * E, a2 = alpha * alpha;
  const DeepReal den = a2 + E2;
  return {alpha * (E2 - 1) / den, E * (1 + a2) / den};
}

double radial_depth_limit() {
  return (std::numeric_limits<DeepReal>::digits10 - 40) * std::log(10.0);
}

std::vector<RadialSample> radial_scan(const QuadSurd& alpha, double t_max, int steps) {
  if (steps < 1 || !(t_max > 0)) throw Error(ErrorKind::BadParameter, "need t_max > 0 and steps >= 1");
  if (t_max > radial_depth_limit()) {
    throw Error(ErrorKind::PrecisionExhausted,
                "deepest certified t is " + std::to_string(radial_depth_limit()));
  }
  const DeepReal a = alpha.value<DeepReal>();
  std::vector<RadialSample> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int k = 1; k <= steps; ++k) {
    const double t = t_max * k / steps;
    const ComplexVal v = hexp_eval_deep(geodesic_point(a, DeepReal(t)));
    out.push_back({t, std::abs(v.value), std::arg(v.value), v.value});
  }
  return out;
}

double shexp_limit(const Slope& slope) {
  const HexElement h = hex_image(word_to_matrix(primitive_word(slope)));
  if (h.m == 0 && h.n == 0) throw Error(ErrorKind::ZeroTranslation, "period acts without translation");
  return std::arg(lattice_point(h.m, h.n));
}

ConstantsReport check_constants(double tol, bool with_area) {
  const Constants& k = constants();
  ConstantsReport rep;
  // x = 1 + s^2 turns 2 int_1^oo dx / sqrt(4x^3 - 4) into 2 int_0^oo ds / sqrt(x^2 + x + 1).
  boost::math::quadrature::exp_sinh<double> half_line;
  const double integral = half_line.integrate([](double s) {
    const double x = 1 + s * s;
    return 1 / std::sqrt(x * x + x + 1);
  });
  rep.varpi0_quadrature = 2 * integral;
  rep.varpi0_closed = k.varpi0;
  rep.varpi0_error = std::abs(rep.varpi0_quadrature - rep.varpi0_closed);
  rep.omega0_sq_error = std::abs(k.abs_omega0 * k.abs_omega0 - 4 * kPi / std::sqrt(3.0));
  rep.ok = rep.varpi0_error < tol && rep.omega0_sq_error < 1e-12;
  if (with_area) {
    // The ideal triangle is three copies of the standard domain for the
    // invariant density |eta^4|^2 Im^2 dmu.
    auto column = [](double x) {
      const double y0 = std::sqrt(1 - x * x);
      boost::math::quadrature::exp_sinh<double> up;
      return up.integrate([&](double u) { return std::norm(eta4(Complex(x, y0 + u), 1e-15).value); });
    };
    const double f = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(column, -0.5, 0.5, 8, 1e-12);
    rep.area_integral = 3 * f;
    rep.area_target = kPi / (k.C * k.C);
    rep.area_error = std::abs(rep.area_integral - rep.area_target);
    rep.ok = rep.ok && rep.area_error < 1e-3;
  }
  return rep;
}

}  // namespace hexlab
