#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hexlab/hexpnum.hpp"
#include "test_support.hpp"

#include <cmath>
#include <random>

using namespace hexlab;

namespace {

constexpr double kPi = 3.14159265358979323846;

// eta^4 straight from the product q^(1/6) prod (1 - q^k)^4.
Complex eta4_product(Complex tau) {
  const Complex q = std::exp(Complex(0, 2 * kPi) * tau);
  Complex p = std::exp(Complex(0, 2 * kPi / 6) * tau);
  Complex qk = q;
  for (int k = 1; k < 400; ++k) {
    const Complex f = 1.0 - qk;
    p *= f * f * f * f;
    qk *= q;
  }
  return p;
}

}  // namespace

TEST_CASE("constants") {
  const Constants& k = constants();
  CHECK(k.abs_omega0 == doctest::Approx(2.69354737417719672124).epsilon(1e-15));
  CHECK(k.C == doctest::Approx(4.02326659790839615712).epsilon(1e-15));
  CHECK(std::abs(k.omega0 - (k.u_X - k.u_Y)) < 1e-15);
  CHECK(std::abs(k.u_X + k.u_Y - Complex(k.abs_omega0 * std::sqrt(3.0), 0)) < 1e-14);
  CHECK(std::abs(std::pow(k.zeta, 6) - 1.0) < 1e-14);
  const ConstantsReport rep = check_constants(1e-8, true);
  CHECK(rep.ok);
  CHECK(rep.varpi0_error < 1e-8);
  CHECK(rep.omega0_sq_error < 1e-12);
  CHECK(rep.area_error < 1e-3);
  const auto big = make_constants<BigReal>();
  CHECK(std::abs(static_cast<double>(big.C) - k.C) < 1e-15);
}

TEST_CASE("eta4") {
  for (Complex tau : {Complex(0, 2), Complex(0.3, 1.1), Complex(-0.45, 0.9), Complex(0.1, 3)}) {
    CHECK(std::abs(eta4(tau).value - eta4_product(tau)) < 1e-13);
  }
  // Modular weight 2 at points below the fundamental domain.
  for (Complex tau : {Complex(0.2, 0.3), Complex(-0.7, 0.15), Complex(0.01, 0.05)}) {
    CHECK(std::abs(eta4(tau).value - eta4_product(tau)) < 1e-9 * std::abs(eta4_product(tau)) + 1e-12);
  }
  const Complex t(0.17, 0.6);
  CHECK(std::abs(eta4(t + 24.0).value - eta4(t).value) < 1e-13);
  CHECK(std::abs(eta4(t + 1.0).value - constants().zeta * eta4(t).value) < 1e-13);
  const double y = 6;
  CHECK(std::abs(eta4(Complex(0, y)).value / std::exp(-2 * kPi * y / 6) - 1.0) < 1e-12);
}

TEST_CASE("series") {
  const Constants& k = constants();
  const ComplexVal hi = hexp_series(Complex(0, 1));
  CHECK(std::abs(2.0 * hi.value - k.omega0) < 1e-10);
  CHECK(std::abs(hi.value - Complex(0, -0.5 * 2 * std::sqrt(kPi) / std::pow(3.0, 0.25))) < 1e-10);
  CHECK(hi.error < 1e-12);
  CHECK(std::abs(2.0 * hexp_series_terms(Complex(0, 1), 2000) - k.omega0) < 1e-10);
  CHECK(std::abs(hexp_series(Complex(0.2, 12)).value) < 1e-20 + std::exp(-2 * kPi * 12 / 6) * 4);
  CHECK_THROWS_AS(hexp_series(Complex(0, 0.49)), Error);
  CHECK(std::abs(hexp_series(Complex(0, 0.5), 1e-12).value - hexp_eval(Complex(0, 0.5)).value) < 1e-11);
}

TEST_CASE("reduction") {
  auto [t0, A] = reduce_to_fundamental(Complex(5, 1));
  CHECK(std::abs(t0 - Complex(0, 1)) < 1e-15);
  CHECK(A == gen::R().pow(5));
  auto [t1, B] = reduce_to_fundamental(Complex(0, 0.1));
  CHECK(std::abs(t1 - Complex(0, 10)) < 1e-12);
  CHECK(B == gen::S());
  auto [t2, C] = reduce_to_fundamental(Complex(0.3, 1.2));
  CHECK(t2 == Complex(0.3, 1.2));
  CHECK(C.is_identity());
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-3, 3), v(0.001, 2);
  for (int i = 0; i < 200; ++i) {
    const Complex tau(u(rng), v(rng));
    auto [r, M] = reduce_to_fundamental(tau);
    CHECK(std::abs(r.real()) <= 0.5 + 1e-12);
    CHECK(std::norm(r) >= 1 - 1e-12);
    CHECK(std::abs(M.apply(r) - tau) < 1e-9);
  }
  const std::complex<DeepReal> deep(DeepReal("0.25"), DeepReal("1e-80"));
  auto [rd, D] = reduce_to_fundamental(deep);
  CHECK(rd.imag() >= DeepReal("0.8"));
  CHECK(abs(D.apply(rd).imag() / DeepReal("1e-80") - 1) < DeepReal("1e-200"));
}

TEST_CASE("equivariant evaluation") {
  const Constants& k = constants();
  const Complex t(0, 2);
  CHECK(std::abs(hexp_eval(gen::X().apply(t)).value - hexp_eval(t).value - k.u_X) < 1e-12);
  CHECK(std::abs(hexp_eval(gen::Y().apply(t)).value - hexp_eval(t).value - k.u_Y) < 1e-12);
  // phi(S) = ((1,-1),3): hexp(S tau) = -hexp(tau) + omega0.
  CHECK(std::abs(hexp_eval(gen::S().apply(t)).value - (-hexp_eval(t).value + k.omega0)) < 1e-12);
  // phi(T) = ((1,0),4).
  CHECK(std::abs(hexp_eval(gen::T().apply(t)).value - (std::pow(k.zeta, 4) * hexp_eval(t).value + k.u_X)) < 1e-12);

  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> len(1, 12);
  const Complex tau(0.3, 0.8);
  const Complex base = hexp_eval(tau).value;
  for (int i = 0; i < 100; ++i) {
    const ProjMatrix A = testing::random_matrix(rng, len(rng));
    const Complex lhs = hexp_eval(A.apply(tau)).value;
    CHECK(std::abs(lhs - hex_affine(hex_image(A), base)) < 1e-8);
  }
  std::uniform_real_distribution<double> x(-0.5, 0.5), y(1, 3);
  for (int i = 0; i < 50; ++i) {
    const Complex p(x(rng), y(rng));
    CHECK(std::abs(hexp_eval(p).value - hexp_series(p).value) < 1e-10);
  }
  CHECK_THROWS_AS(hexp_eval(Complex(0.3, 0)), Error);
}

TEST_CASE("derivative") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> x(-1, 1), y(0.2, 1.5);
  const double h = 1e-5;
  for (int i = 0; i < 20; ++i) {
    const Complex p(x(rng), y(rng));
    const Complex diff = (hexp_eval(p + h).value - hexp_eval(p - h).value) / (2 * h);
    const Complex expect = constants().C * eta4(p).value;
    CHECK(std::abs(diff - expect) < 1e-6 * std::max(1.0, std::abs(expect)));
  }
}

TEST_CASE("cusp values") {
  const Constants& k = constants();
  const CuspValue inf = cusp_value(1, 0);
  CHECK(inf.m == 0);
  CHECK(inf.n == 0);
  const CuspValue zero = cusp_value(0, 1);
  CHECK(zero.m == 1);
  CHECK(zero.n == -1);
  CHECK(std::abs(zero.value - k.omega0) < 1e-15);
  CHECK_THROWS_AS(cusp_value(2, 4), Error);

  for (long long c = 1; c <= 8; ++c) {
    for (long long a = -c; a <= 2 * c; ++a) {
      if (std::gcd(a, c) != 1) continue;
      const CuspValue v = cusp_value(a, c);
      for (long long extra = -2; extra <= 2; ++extra) {
        const HexElement h = hex_image(gamma_prime_rep_for_cusp(a, c, extra));
        CHECK(h.m == v.m);
        CHECK(h.n == v.n);
      }
      CHECK(std::abs(hexp_eval(Complex(static_cast<double>(a) / c, 1e-3)).value - v.value) < 1e-6);
    }
  }

  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> len(1, 6);
  for (int i = 0; i < 50; ++i) {
    const ProjMatrix A = word_to_matrix(testing::random_xy_word(rng, len(rng)));
    const CuspValue first = cusp_value(A.a(), A.c());
    const CuspValue second = cusp_value(A.b(), A.d());
    CHECK(std::abs(second.value - (first.value + k.omega0)) < 1e-9);
  }

  const auto lim = cusp_limit_numeric(0, 1, {1e-2, 1e-3});
  CHECK(std::abs(lim[1].value - k.omega0) < 1e-8);
  const auto third = cusp_limit_numeric(1, 3, {1e-3});
  CHECK(std::abs(third[0].value - cusp_value(1, 3).value) < 1e-6);
  const auto top = cusp_limit_numeric(1, 0, {0.5, 0.05});
  CHECK(std::abs(top[0].value) > std::abs(top[1].value));
  CHECK(std::abs(top[1].value) < 1e-8);
}

TEST_CASE("cusp series at 0") {
  const CuspSeries s = cusp_series_partial(0, 1, 20000);
  REQUIRE(s.partial.size() == 20000);
  CHECK(std::abs(s.target - constants().omega0) < 1e-15);
  CHECK(s.final_cesaro_distance < 1e-2);
  CHECK(s.final_cesaro_distance < s.final_partial_distance);
  CHECK(s.oscillation > 0.1);
  CHECK_THROWS_AS(cusp_series_partial(0, 1, 0), Error);
}

TEST_CASE("radial scans") {
  const QuadSurd golden(1, 1, 5, 2);
  const auto scan = radial_scan(golden, 200, 20);
  const double target = shexp_limit(Slope::rational(0, 1));
  CHECK(target == doctest::Approx(kPi / 6));
  CHECK(shexp_limit(Slope::rational(1, 0)) == doctest::Approx(-kPi / 6));
  for (std::size_t k = 1; k < scan.size(); ++k) {
    if (scan[k].t > 5) CHECK(scan[k].modulus > scan[k - 1].modulus);
  }
  CHECK(std::abs(scan.back().argument - target) < 1e-2);
  const auto p = geodesic_point(DeepReal(golden.value<DeepReal>()), DeepReal(0));
  CHECK(abs(p.real()) < DeepReal("1e-250"));
  CHECK(abs(p.imag() - 1) < DeepReal("1e-250"));
  CHECK_THROWS_AS(radial_scan(golden, 10 * radial_depth_limit(), 3), Error);
}
