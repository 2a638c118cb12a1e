#pragma once

// Exact algebra in the modular group PSL2(Z): matrices, words over the
// {S,T}, {L,R} and {X,Y} alphabets, the abelianization to Z/6, the free
// basis X = LR, Y = RL of the derived subgroup, and the affine hexagonal
// representation of Gamma / Gamma''.

#include "hexlab/error.hpp"
#include "hexlab/numeric_types.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hexlab {

/// Element of PSL2(Z): an integer matrix of determinant 1 identified with its
/// negation. The stored representative has c > 0, or c == 0 and d > 0.
class ProjMatrix {
 public:
  ProjMatrix() : a_(1), b_(0), c_(0), d_(1) {}

  /// Throws BadParameter unless ad - bc == 1 (a determinant of -1 is not in
  /// SL2 and cannot be fixed by negation).
  ProjMatrix(Integer a, Integer b, Integer c, Integer d);

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const Integer& c() const noexcept { return c_; }
  const Integer& d() const noexcept { return d_; }

  Integer trace() const { return a_ + d_; }
  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

  /// Finite order in PSL2(Z) means |trace| < 2 or the identity.
  bool is_torsion() const;

  ProjMatrix inverse() const { return ProjMatrix(d_, -b_, -c_, a_); }
  ProjMatrix pow(long long e) const;

  friend ProjMatrix operator*(const ProjMatrix& x, const ProjMatrix& y);
  friend bool operator==(const ProjMatrix& x, const ProjMatrix& y) = default;

  /// Mobius action on the upper half plane, for any real type with +,-,*,/.
  template <class Real>
  std::complex<Real> apply(const std::complex<Real>& z) const {
    const Real a = static_cast<Real>(a_), b = static_cast<Real>(b_);
    const Real c = static_cast<Real>(c_), d = static_cast<Real>(d_);
    return (z * a + b) / (z * c + d);
  }

  std::string to_string() const;

 private:
  void normalize();

  Integer a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const ProjMatrix& m);

namespace gen {
ProjMatrix S();  // [[0,-1],[1,0]]
ProjMatrix T();  // [[1,-1],[1,0]]
ProjMatrix L();  // [[1,0],[1,1]] = T^-1 S
ProjMatrix R();  // [[1,1],[0,1]] = T S^-1
ProjMatrix X();  // L R = [[1,1],[1,2]]
ProjMatrix Y();  // R L = [[2,1],[1,1]]
}  // namespace gen

enum class Alphabet { ST, LR, XY };

struct Letter {
  char symbol;         // one of S T L R X Y
  long long exponent;  // nonzero
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Reduced word over one alphabet. Construction normalizes: adjacent equal
/// symbols merge, zero exponents vanish; in ST the S exponent is taken mod 2
/// and the T exponent mod 3 into {1,-1}; LR exponents must be positive.
class GroupWord {
 public:
  explicit GroupWord(Alphabet alphabet = Alphabet::XY) : alphabet_(alphabet) {}
  GroupWord(Alphabet alphabet, std::vector<Letter> letters);

  /// Accepts "X Y^-1 X", "XY^-1X", "RLLR", "R^3 L". The alphabet is
  /// inferred from the symbols; an empty string needs `fallback`.
  static GroupWord parse(std::string_view text, Alphabet fallback = Alphabet::XY);

  Alphabet alphabet() const noexcept { return alphabet_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }

  /// Sum of |exponent|.
  long long length() const;

  /// Flattened sequence of single symbols with signs (+1/-1).
  std::vector<std::pair<char, int>> expanded() const;

  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& other) const;

  std::string to_string() const;
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  void reduce();

  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const GroupWord& w);

/// Element (m, n, rho) of Z^2 x| Z/6; translation in the basis (X, Y).
struct HexElement {
  long long m = 0;
  long long n = 0;
  int rho = 0;  // 0..5

  /// The order-6 rotation Rot(k) applied to (x, y); Rot(1) = [[0,-1],[1,1]].
  static std::array<long long, 2> rotate(int k, long long x, long long y);

  bool is_identity() const { return m == 0 && n == 0 && rho == 0; }
  HexElement inverse() const;
  HexElement pow(long long e) const;

  friend HexElement operator*(const HexElement& x, const HexElement& y);
  friend bool operator==(const HexElement&, const HexElement&) = default;
};

std::ostream& operator<<(std::ostream& os, const HexElement& h);

ProjMatrix word_to_matrix(const GroupWord& w);

/// Unique L&R word of a matrix in the euclidean monoid; NotInMonoid otherwise.
GroupWord lr_factorize(const ProjMatrix& m);

/// Reduced S,T word with product `a`.
GroupWord st_factorize(const ProjMatrix& a);

/// #R - #L of the cyclic L&R word of the conjugacy class; TorsionElement for
/// finite-order input.
Integer rademacher(const ProjMatrix& a);

/// Image in Gamma/Gamma' = Z/6, normalized so class(R) = 1.
int gamma_abelian_class(const ProjMatrix& a);

/// Reduced X,Y word of an element of the derived subgroup; NotInDerivedGroup
/// if the Z/6 class is nonzero.
GroupWord gamma_prime_decompose(const ProjMatrix& a);

/// Homomorphism Gamma -> Z^2 x| Z/6 with kernel Gamma''; phi(X) = ((1,0),0),
/// phi(Y) = ((0,1),0).
HexElement hex_image(const ProjMatrix& a);

/// phi on the generators; fixed once at first use by solving for the
/// translation parts of phi(S) and phi(T).
HexElement hex_image_S();
HexElement hex_image_T();

bool gamma_second_contains(const ProjMatrix& a);

/// An element of Gamma' with first column (a, c); NotCoprime unless gcd = 1.
ProjMatrix gamma_prime_rep_for_cusp(const Integer& a, const Integer& c);

/// Same, but returns the extended-gcd matrix right-multiplied by R^(k + 6j);
/// used to test that downstream values do not depend on the representative.
ProjMatrix gamma_prime_rep_for_cusp(const Integer& a, const Integer& c, long long extra_sixes);

}  // namespace hexlab
