#pragma once

// Dehn twists on the free group <X, Y>, cutting sequences of homology
// slopes, the Markov surds of simple closed geodesics and the InSh section.

#include "hexlab/contfrac.hpp"
#include "hexlab/modgroup.hpp"
#include "hexlab/numeric_types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hexlab {

/// Direction (x, y) in H_1 = Z X + Z Y, rational (primitive integer vector)
/// or real. Directions are oriented: (x, y) and (-x, -y) are different
/// slopes, related by the inversion X -> X^-1, Y -> Y^-1.
class Slope {
 public:
  /// NotPrimitiveVector unless gcd(x, y) == 1.
  static Slope rational(const Integer& x, const Integer& y);
  /// Real direction; BadParameter for (0, 0).
  static Slope real(const BigReal& x, const BigReal& y);
  /// Direction (ratio, 1) for an exact irrational ratio x / y.
  static Slope surd(const QuadSurd& ratio);

  bool is_rational() const noexcept { return rational_; }
  const Integer& x() const;  // rational only
  const Integer& y() const;
  BigReal x_real() const;
  BigReal y_real() const;
  const std::optional<QuadSurd>& exact_ratio() const noexcept { return ratio_; }

  /// Quadrant 0..3: {x >= 0, y >= 0} (x or y nonzero), then counterclockwise
  /// {x < 0, y >= 0}, {x <= 0, y < 0}, {x > 0, y < 0}.
  int quadrant() const;

  /// Image of this slope in the closed positive quadrant under the quadrant
  /// normalization (D_S for quadrant 1, inversion for 2, inversion after D_S
  /// for 3).
  Slope positive_part() const;

 private:
  bool rational_ = true;
  Integer xi_, yi_;
  BigReal xr_, yr_;
  std::optional<QuadSurd> ratio_;
};

/// Streams use 'X', 'Y' for the generators and 'x', 'y' for their inverses;
/// L&R streams likewise use 'L', 'R', 'l', 'r'.
using XYStream = std::string;

enum class Twist { DX, DY, DS, DJ };

/// D_X: (X,Y) -> (X, YX); D_Y: (X,Y) -> (XY, Y); D_S: (X,Y) -> (XYX^-1, X^-1);
/// D_J: (X,Y) -> (Y, X). Letterwise substitution followed by free reduction.
GroupWord twist(const GroupWord& word, Twist generator);

/// Abelianized action of a twist on (x, y).
std::array<Integer, 2> twist_homology(const std::array<Integer, 2>& v, Twist generator);

/// Cyclic word in the conjugacy class of the simple closed curve of a
/// rational slope; in the positive quadrant the lexicographically least
/// rotation with Y < X. NotPrimitiveVector for irrational or non-primitive input.
GroupWord primitive_word(const Slope& slope);

/// `window` letters of the cutting sequence. Rational slopes give the
/// periodization of primitive_word starting at a period; irrational slopes
/// the common prefix of the primitive words of their convergents.
XYStream cutting_sequence(const Slope& slope, int window);

/// Lower mechanical word: letter n is Y iff floor((n+1) rho + s) - floor(n rho + s) = 1.
XYStream mechanical_word(const BigReal& rho, const BigReal& intercept, int window);

/// X -> LR, Y -> RL (inverse letters map to the inverse pairs).
std::string xy_to_lr(const XYStream& stream);

GroupWord stream_to_word(const XYStream& stream);
XYStream word_to_stream(const GroupWord& word);

/// (alpha_minus, alpha_plus): fixed points of the period matrix of
/// primitive_word, alpha_plus attracting; they are Galois conjugates.
std::pair<QuadSurd, QuadSurd> markov_pair(const Slope& slope);

/// `depth` CF digits of the InSh endpoint alpha_plus.
CFSeq insh(const Slope& slope, int depth);

/// Exact InSh endpoint for a rational slope.
QuadSurd insh_surd(const Slope& slope);

/// True iff some pairing of the letters into LR -> X, RL -> Y gives a
/// balanced X&Y word (one unpaired letter allowed at either end).
bool is_sturmian_window(const std::string& lr_window);

/// Balance: for every length, X-counts of factors differ by at most one.
bool is_balanced(const XYStream& stream);

/// Distinct factors of each length 0..l_max; WindowTooShort if
/// stream.size() < 4 l_max.
std::vector<std::size_t> factor_complexity(const XYStream& stream, int l_max);

struct SchmidtRow {
  Integer a, c;     // convergent slope
  QuadSurd xi;      // its Markov surd
  BigReal gap;      // |alpha_plus - xi|
  Integer height;   // H(xi)
  double beta;      // -log(gap) / log(H)
};

/// Diagnostics for the Schmidt subspace criterion along the convergents of
/// an irrational slope in the positive quadrant.
std::vector<SchmidtRow> schmidt_diagnostic(const Slope& slope, int k_max);

}  // namespace hexlab
