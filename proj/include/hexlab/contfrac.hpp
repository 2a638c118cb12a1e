#pragma once

// Continued fractions, quadratic surds and the L&R coding of geodesics.

#include "hexlab/error.hpp"
#include "hexlab/modgroup.hpp"
#include "hexlab/numeric_types.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hexlab {

/// Value <n0; n1, ...> when !negated, -1/<n0; n1, ...> when negated. The
/// empty sequence has value 0, so "negated and empty" is infinity.
struct CFSeq {
  bool negated = false;
  std::vector<Integer> digits;

  /// Parses "[n0;n1,n2]", "[n0]", "[]" and "-1/[...]".
  static CFSeq parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const CFSeq&, const CFSeq&) = default;
};

enum class Parity { Even, Odd, Any };

/// Exact value of a finite CF as num/den with den >= 0 (den == 0 for infinity).
std::pair<Integer, Integer> cf_value(const CFSeq& cf);

/// Convergents p_k/q_k of the digits (ignores the negated flag).
std::vector<std::pair<Integer, Integer>> convergents(const std::vector<Integer>& digits);

/// Euclidean expansion. Negative values use the negated convention; 0 is <>
/// (or <0> when an odd length is requested).
CFSeq rational_to_cf(const Integer& num, const Integer& den, Parity parity = Parity::Any);

/// R^n0 L^n1 ... L^nk for an even-length, non-negated CF; OddLength otherwise.
GroupWord cf_to_lr_word(const CFSeq& cf);

/// Exact real quadratic irrational (p + q sqrt(d)) / r.
class QuadSurd {
 public:
  /// Normalizes: square factors of d move into q, r > 0, gcd(p,q,r) = 1.
  /// BadParameter if r == 0, d <= 1 after reduction, or q == 0.
  QuadSurd(Integer p, Integer q, Integer d, Integer r);

  /// Root of a x^2 + b x + c with the given sign of the square root.
  static QuadSurd from_quadratic(const Integer& a, const Integer& b, const Integer& c, int root_sign);

  /// Attracting fixed point of a hyperbolic matrix; DegeneratePeriod for
  /// elliptic, parabolic or identity input.
  static QuadSurd attracting_fixed_point(const ProjMatrix& m);

  const Integer& p() const noexcept { return p_; }
  const Integer& q() const noexcept { return q_; }
  const Integer& d() const noexcept { return d_; }
  const Integer& r() const noexcept { return r_; }

  /// Primitive minimal polynomial a x^2 + b x + c with a > 0.
  std::array<Integer, 3> min_poly() const;

  QuadSurd conjugate() const { return QuadSurd(p_, -q_, d_, r_, ReducedRadicand{}); }

  /// (a x + b) / (c x + d) for any integer matrix with ad - bc != 0.
  QuadSurd mobius(const Integer& a, const Integer& b, const Integer& c, const Integer& d) const;
  QuadSurd mobius(const ProjMatrix& m) const { return mobius(m.a(), m.b(), m.c(), m.d()); }

  /// Exact sign of the value.
  int sign() const;
  /// Exact comparison with a rational num/den (den > 0).
  int compare(const Integer& num, const Integer& den) const;
  /// Exact floor.
  Integer floor() const;

  template <class Real>
  Real value() const {
    using std::sqrt;
    return (static_cast<Real>(p_) + static_cast<Real>(q_) * sqrt(static_cast<Real>(d_))) / static_cast<Real>(r_);
  }

  std::string to_string() const;

  /// Same real number: same primitive minimal polynomial and same root.
  friend bool operator==(const QuadSurd& x, const QuadSurd& y) {
    return x.min_poly() == y.min_poly() && (x.q_ > 0) == (y.q_ > 0);
  }

 private:
  struct ReducedRadicand {};
  QuadSurd(Integer p, Integer q, Integer d, Integer r, ReducedRadicand);
  void normalize();

  Integer p_, q_, d_, r_;
};

/// Eventually periodic CF: preperiod then period repeated forever.
struct PeriodicCF {
  bool negated = false;
  std::vector<Integer> preperiod;
  std::vector<Integer> period;
  friend bool operator==(const PeriodicCF&, const PeriodicCF&) = default;
};

/// The surd with the given eventually periodic expansion; DegeneratePeriod
/// for an empty period.
QuadSurd periodic_cf_to_surd(const PeriodicCF& cf);

/// Attracting fixed point of the matrix of a nonempty L&R period word.
QuadSurd surd_from_period_word(const GroupWord& lr_word);

/// Exact expansion of a surd with the period located by cycle detection.
PeriodicCF surd_to_periodic_cf(const QuadSurd& x);

/// First `depth` digits of a surd (exact).
CFSeq surd_to_cf(const QuadSurd& x, int depth);

/// First `depth` digits of x, certified against the interval
/// [x - radius, x + radius]; PrecisionExhausted if a digit is ambiguous. A
/// negative radius selects a default tied to BigReal's precision.
CFSeq real_to_cf(const BigReal& x, int depth, const BigReal& radius = BigReal(-1));

/// max(|a|, |b|, |c|) of the primitive minimal polynomial.
Integer surd_height(const QuadSurd& x);

inline QuadSurd galois_conjugate(const QuadSurd& x) { return x.conjugate(); }

/// L&R letters around the origin of the geodesic (alpha_minus, alpha_plus):
/// `past` ends at the origin (last char nearest), `future` starts there.
struct GeodesicCode {
  std::string past;
  std::string future;
};

/// NotNormalized unless -1 < alpha_minus < 0 and alpha_plus > 1.
GeodesicCode geodesic_code(const QuadSurd& alpha_minus, const QuadSurd& alpha_plus, int window);
GeodesicCode geodesic_code(const BigReal& alpha_minus, const BigReal& alpha_plus, int window);

/// Expands CF digits into a string of L/R letters (R^n0 L^n1 ...), stopping
/// after `max_letters`.
std::string cf_digits_to_lr(const std::vector<Integer>& digits, std::size_t max_letters);

}  // namespace hexlab
