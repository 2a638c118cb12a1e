#pragma once

// psi(n): coefficients of eta^4, the newform a(m) of eta^4(6 tau), and the
// arithmetic around them.

#include "hexlab/error.hpp"

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace hexlab {

/// Primitive character mod 12: 1 on +-1, -1 on +-5, 0 on multiples of 2, 3.
int chi12(long long n);

/// a + b j with j = exp(2 pi i / 3), j^2 = -1 - j.
struct EisensteinInt {
  long long a = 0;
  long long b = 0;

  long long norm() const { return a * a - a * b + b * b; }
  long long trace() const { return 2 * a - b; }
  EisensteinInt conj() const { return {a - b, -b}; }

  friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  friend EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) { return {x.a + y.a, x.b + y.b}; }
  friend EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) { return {x.a - y.a, x.b - y.b}; }
  friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;

  /// The six units 1, 1+j, j, -1, -1-j, -j.
  static std::vector<EisensteinInt> units();

  /// x == 1 modulo 2 sqrt(-3) = 2 (1 + 2j).
  bool is_primary() const;
};

std::ostream& operator<<(std::ostream& os, const EisensteinInt& z);

/// Ordered sum of chi(abcd) over a^2+b^2+c^2+d^2 = n; BoundExceeded above `bound`.
long long psi_bruteforce(long long n, long long bound = 4000);

/// Newform coefficients a(1..N) and the psi view psi_raw(n) for n <= 4N.
class CoeffTable {
 public:
  static constexpr std::uint32_t kFormatVersion = 1;

  CoeffTable() = default;
  explicit CoeffTable(std::vector<long long> a);  // a[0] is a(1)

  std::size_t limit() const noexcept { return a_.size(); }

  /// a(m) for 1 <= m <= limit(); BoundExceeded outside.
  long long a(long long m) const;

  /// psi(n) = a(n/4) if n == 4 mod 24, else 0; needs n <= 4 limit().
  long long psi_raw(long long n) const;

  const std::vector<long long>& values() const noexcept { return a_; }

  void save_csv(const std::string& path) const;
  void save_binary(const std::string& path) const;
  /// Detects the format from the header; IoError on malformed input.
  static CoeffTable load(const std::string& path);

  friend bool operator==(const CoeffTable&, const CoeffTable&) = default;

 private:
  std::vector<long long> a_;
};

/// Expansion of q prod (1 - q^{6k})^4 to q^N (exact integer arithmetic).
CoeffTable eta_product_coeffs(long long N);

/// Multiplicative extension of the Euler-factor prime-power values, for one m.
long long psi_multiplicative(long long m);

/// Same values for all m <= N via a smallest-prime-factor sieve.
CoeffTable multiplicative_table(long long N);

/// Value a(p^e) from the local factor at p.
long long psi_prime_power(long long p, int e);

/// Primary generator of a prime above p (p == 1 mod 3); NoSplitting otherwise.
EisensteinInt grossencharacter(long long p);

/// Serre's criterion for psi(n) != 0.
bool nonvanishing(long long n);

/// (1/N) #{n <= N : psi(n) != 0}; needs table.limit() >= N/4.
double lacunarity_density(const CoeffTable& table, long long N);

/// max over M <= N of |sum_{m<=M} a(m)| / M^{5/6}.
double partial_sum_growth(const CoeffTable& table, long long N);

/// |a(p)| <= 2 sqrt(p) for every prime p <= P.
bool ramanujan_check(const CoeffTable& table, long long P);

/// Process-wide read-only table with limit >= min_limit; grows on demand.
std::shared_ptr<const CoeffTable> shared_table(long long min_limit);

/// Replaces the process-wide table (used by the CLI after loading a dump).
void install_shared_table(std::shared_ptr<const CoeffTable> table);

}  // namespace hexlab
