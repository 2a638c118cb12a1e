#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hexlab/psi.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

using namespace hexlab;

namespace {

const CoeffTable& table() {
  static const CoeffTable t = eta_product_coeffs(30000);
  return t;
}

}  // namespace

TEST_CASE("chi12") {
  CHECK(chi12(1) == 1);
  CHECK(chi12(11) == 1);
  CHECK(chi12(13) == 1);
  CHECK(chi12(5) == -1);
  CHECK(chi12(7) == -1);
  CHECK(chi12(6) == 0);
  CHECK(chi12(9) == 0);
  CHECK(chi12(0) == 0);
  for (long long a = -30; a <= 30; ++a)
    for (long long b = -30; b <= 30; ++b) CHECK(chi12(a * b) == chi12(a) * chi12(b));
}

TEST_CASE("brute force") {
  CHECK(psi_bruteforce(0) == 0);
  CHECK(psi_bruteforce(1) == 0);
  CHECK(psi_bruteforce(4) == 1);
  CHECK(psi_bruteforce(28) == -4);
  CHECK_THROWS_AS(psi_bruteforce(4001), Error);
  CHECK(psi_bruteforce(4001, 5000) == 0);
}

TEST_CASE("eta product") {
  const CoeffTable& t = table();
  CHECK(t.a(1) == 1);
  CHECK(t.a(7) == -4);
  CHECK(t.a(13) == 2);
  CHECK(t.a(19) == 8);
  CHECK(t.a(25) == -5);
  CHECK(t.a(31) == -4);
  CHECK(t.a(37) == -10);
  CHECK(t.psi_raw(4) == 1);
  CHECK(t.psi_raw(28) == -4);
  CHECK(t.psi_raw(5) == 0);
  CHECK(t.psi_raw(0) == 0);
  CHECK_THROWS_AS(t.a(0), Error);
  CHECK_THROWS_AS(t.a(30001), Error);
  CHECK(eta_product_coeffs(1).a(1) == 1);
}

TEST_CASE("triple oracle to 1000") {
  const CoeffTable& t = table();
  for (long long n = 0; n <= 1000; ++n) {
    const long long brute = psi_bruteforce(n);
    CHECK(brute == t.psi_raw(n));
    CHECK(brute == (n % 24 == 4 ? psi_multiplicative(n / 4) : 0));
  }
}

TEST_CASE("Euler factors") {
  CHECK(psi_prime_power(2, 1) == 0);
  CHECK(psi_prime_power(3, 2) == 0);
  CHECK(psi_prime_power(5, 1) == 0);
  CHECK(psi_prime_power(5, 2) == -5);
  CHECK(psi_prime_power(5, 4) == 25);
  CHECK(psi_prime_power(11, 1) == 0);
  CHECK(psi_prime_power(7, 1) == -4);
  CHECK(psi_multiplicative(7) == -4);
  CHECK(psi_multiplicative(25) == -5);
  CHECK(psi_multiplicative(11) == 0);
  CHECK(psi_multiplicative(1) == 1);
  // Homogeneous sum agrees with the Hecke recurrence.
  for (long long p : {7LL, 13LL, 19LL, 31LL, 37LL, 43LL}) {
    const long long t = psi_prime_power(p, 1);
    long long prev2 = 1, prev1 = t;
    for (int e = 2; e <= 5; ++e) {
      const long long next = t * prev1 - p * prev2;
      CHECK(psi_prime_power(p, e) == next);
      prev2 = prev1;
      prev1 = next;
    }
  }
  CHECK(multiplicative_table(30000) == table());
}

TEST_CASE("Grossencharacter") {
  const EisensteinInt pi7 = grossencharacter(7);
  CHECK(pi7.norm() == 7);
  CHECK(pi7.trace() == -4);
  CHECK(pi7.is_primary());
  CHECK(grossencharacter(13).trace() == table().a(13));
  CHECK_THROWS_AS(grossencharacter(5), Error);
  CHECK_THROWS_AS(grossencharacter(2), Error);
  for (long long p = 7; p < 2000; p += 6) {
    bool prime = true;
    for (long long f = 2; f * f <= p; ++f) prime = prime && p % f != 0;
    if (!prime) continue;
    const EisensteinInt pi = grossencharacter(p);
    CHECK(pi.norm() == p);
    int primary = 0;
    for (const EisensteinInt& u : EisensteinInt::units()) primary += (u * pi).is_primary();
    CHECK(primary == 1);
    CHECK(pi.trace() == table().a(p));
  }
  CHECK(EisensteinInt{1, 1} * EisensteinInt{0, 1} == EisensteinInt{-1, 0});  // (1+j) j = j + j^2 = -1
}

TEST_CASE("support and multiplicativity") {
  const CoeffTable& t = table();
  for (long long m = 1; m <= 30000; ++m) {
    if (t.a(m) != 0) CHECK(m % 6 == 1);
  }
  for (long long n = 1; n <= 120000; ++n) {
    if (t.psi_raw(n) != 0) CHECK(n % 24 == 4);
  }
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long long> pick(1, 170);
  int tested = 0;
  while (tested < 500) {
    const long long m1 = pick(rng), m2 = pick(rng);
    if (std::gcd(m1, m2) != 1) continue;
    CHECK(t.a(m1 * m2) == t.a(m1) * t.a(m2));
    ++tested;
  }
}

TEST_CASE("Serre criterion") {
  CHECK(nonvanishing(4));
  CHECK(nonvanishing(28));
  CHECK_FALSE(nonvanishing(44));
  CHECK_FALSE(nonvanishing(5));
  const CoeffTable big = eta_product_coeffs(25000);
  for (long long n = 4; n <= 100000; n += 24) CHECK(nonvanishing(n) == (big.psi_raw(n) != 0));
}

TEST_CASE("diagnostics") {
  const CoeffTable& t = table();
  CHECK(lacunarity_density(t, 10) == doctest::Approx(0.1));
  CHECK(lacunarity_density(t, 10000) == doctest::Approx(0.0289));
  CHECK(partial_sum_growth(t, 1) == 1.0);
  CHECK(partial_sum_growth(t, 30000) >= partial_sum_growth(t, 1000));
  CHECK(ramanujan_check(t, 7));
  CHECK(ramanujan_check(t, 30000));
  CHECK_FALSE(ramanujan_check(CoeffTable({1, 0, 0, 0, 0, 0, -6}), 7));
}

TEST_CASE("table dumps") {
  const auto dir = std::filesystem::temp_directory_path();
  const CoeffTable t = eta_product_coeffs(500);
  const std::string csv = (dir / "hexlab_test_table.csv").string();
  const std::string bin = (dir / "hexlab_test_table.bin").string();
  t.save_csv(csv);
  t.save_binary(bin);
  CHECK(CoeffTable::load(csv) == t);
  CHECK(CoeffTable::load(bin) == t);
  {
    std::ofstream bad(csv);
    bad << "format_version,9\nN,1\nm,a\n1,1\n";
  }
  CHECK_THROWS_AS(CoeffTable::load(csv), Error);
  CHECK_THROWS_AS(CoeffTable::load((dir / "hexlab_missing_table").string()), Error);
  std::filesystem::remove(csv);
  std::filesystem::remove(bin);
}

TEST_CASE("shared table") {
  auto a = shared_table(100);
  CHECK(a->limit() >= 100);
  auto b = shared_table(50000);
  CHECK(b->limit() >= 50000);
  CHECK(a->a(7) == b->a(7));
}
