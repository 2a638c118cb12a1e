#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hexlab/sturmian.hpp"

#include <random>

using namespace hexlab;

namespace {

GroupWord W(const char* s) { return GroupWord::parse(s); }

Slope golden_slope() { return Slope::surd(QuadSurd(1, 1, 5, 2)); }  // (1+sqrt5)/2

bool is_rotation(const std::string& a, const std::string& b) {
  return a.size() == b.size() && (a + a).find(b) != std::string::npos;
}

}  // namespace

TEST_CASE("slopes") {
  CHECK_THROWS_AS(Slope::rational(2, 4), Error);
  CHECK_THROWS_AS(Slope::rational(0, 0), Error);
  CHECK_THROWS_AS(Slope::real(0, 0), Error);
  CHECK(Slope::rational(0, 1).quadrant() == 0);
  CHECK(Slope::rational(-1, 0).quadrant() == 1);
  CHECK(Slope::rational(-1, -3).quadrant() == 2);
  CHECK(Slope::rational(0, -1).quadrant() == 2);
  CHECK(Slope::rational(2, -3).quadrant() == 3);
  const Slope p = Slope::rational(-2, 3).positive_part();
  CHECK(p.x() == 3);
  CHECK(p.y() == 2);
}

TEST_CASE("twists") {
  CHECK(twist(W("X"), Twist::DX) == W("X"));
  CHECK(twist(W("Y"), Twist::DX) == W("Y X"));
  CHECK(twist(W("X"), Twist::DY) == W("X Y"));
  CHECK(twist(W("X"), Twist::DS) == W("X Y X^-1"));
  CHECK(twist(W("Y"), Twist::DS) == W("X^-1"));
  CHECK(twist(W("X Y^2"), Twist::DJ) == W("Y X^2"));
  // Inverse letters and free reduction.
  CHECK(twist(W("Y X^-1"), Twist::DX) == W("Y"));
  // D_S^2 acts as conjugation composed with the inversion.
  const GroupWord w = W("X Y^-1 X X Y");
  const GroupWord s2 = twist(twist(w, Twist::DS), Twist::DS);
  CHECK(word_to_matrix(s2).trace() == word_to_matrix(w).trace());
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(-9, 9);
  for (int i = 0; i < 200; ++i) {
    std::array<Integer, 2> v{pick(rng), pick(rng)};
    GroupWord g(Alphabet::XY, {{'X', 1}});
    GroupWord word = v[0] == 0 ? GroupWord() : GroupWord(Alphabet::XY, {{'X', static_cast<long long>(v[0])}});
    if (v[1] != 0) word = word * GroupWord(Alphabet::XY, {{'Y', static_cast<long long>(v[1])}});
    for (Twist t : {Twist::DX, Twist::DY, Twist::DS, Twist::DJ}) {
      const GroupWord img = twist(word, t);
      long long x = 0, y = 0;
      for (const Letter& l : img.letters()) (l.symbol == 'X' ? x : y) += l.exponent;
      const auto h = twist_homology(v, t);
      CHECK(h[0] == x);
      CHECK(h[1] == y);
    }
  }
}

TEST_CASE("primitive words") {
  CHECK(primitive_word(Slope::rational(1, 0)) == W("X"));
  CHECK(primitive_word(Slope::rational(0, 1)) == W("Y"));
  CHECK(primitive_word(Slope::rational(1, 1)) == W("Y X"));
  CHECK(primitive_word(Slope::rational(1, 2)) == W("Y^2 X"));
  CHECK(primitive_word(Slope::rational(1, 3)) == W("Y^3 X"));
  CHECK(primitive_word(Slope::rational(2, 1)) == W("Y X^2"));
  CHECK(primitive_word(Slope::rational(2, 3)) == W("Y^2 X Y X"));
  CHECK(primitive_word(Slope::rational(3, 5)) == W("Y^2 X Y^2 X Y X"));
  CHECK(primitive_word(Slope::rational(-1, -1)) == W("Y^-1 X^-1"));
  CHECK_THROWS_AS(primitive_word(golden_slope()), Error);
  CHECK_THROWS_AS(primitive_word(Slope::rational(3, 6)), Error);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(-40, 40);
  int tested = 0;
  while (tested < 300) {
    const int x = pick(rng), y = pick(rng);
    if (std::gcd(x, y) != 1) continue;
    ++tested;
    const Slope s = Slope::rational(x, y);
    const GroupWord w = primitive_word(s);
    long long hx = 0, hy = 0;
    for (const Letter& l : w.letters()) (l.symbol == 'X' ? hx : hy) += l.exponent;
    CHECK(hx == x);
    CHECK(hy == y);
    // Every quadrant gives a cyclic rotation of the sign-flipped positive word.
    CHECK(is_rotation(word_to_stream(w), cutting_sequence(s, static_cast<int>(w.length()))));
    CHECK(is_balanced(cutting_sequence(s, 3 * static_cast<int>(w.length()))));
    if (s.quadrant() == 2) {
      const Integer t0 = word_to_matrix(w).trace(), t1 = word_to_matrix(primitive_word(s.positive_part())).trace();
      CHECK(t0 * t0 == t1 * t1);
    }
  }
}

TEST_CASE("cutting sequences against mechanical words") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.05, 20.0);
  for (int i = 0; i < 20; ++i) {
    const BigReal ratio = BigReal(u(rng)) + BigReal(1) / BigReal(7919 + i);
    const Slope s = Slope::real(ratio, 1);
    const int n = 1000;
    const XYStream cut = cutting_sequence(s, n);
    CHECK(cut.size() == n);
    const BigReal rho = BigReal(1) / (ratio + 1);
    // The cutting sequence is the characteristic word shifted by one letter.
    const XYStream mech = mechanical_word(rho, rho, n);
    CHECK(cut == "Y" + mech.substr(0, n - 1));
    CHECK(is_balanced(cut.substr(0, 400)));
  }
  const XYStream g = cutting_sequence(golden_slope(), 13);
  CHECK(g == "YXYXXYXYXXYXX");
  CHECK(cutting_sequence(Slope::rational(1, 2), 7) == "YYXYYXY");
  CHECK(cutting_sequence(Slope::rational(-1, 2), 6) == "YYxYYx");
  CHECK(cutting_sequence(Slope::real(-sqrt(BigReal(3)), -1), 5) == "yxyxx");
  CHECK(mechanical_word(BigReal(0.5), BigReal(0), 4) == "XYXY");
}

TEST_CASE("LR streams") {
  CHECK(xy_to_lr("XY") == "LRRL");
  CHECK(xy_to_lr("xy") == "rllr");
  CHECK_THROWS_AS(xy_to_lr("XZ"), Error);
  CHECK(stream_to_word("YYx") == W("Y^2 X^-1"));
  CHECK(word_to_stream(W("Y^2 X^-1")) == "YYx");
  CHECK(is_sturmian_window("RLRL"));
  CHECK(is_sturmian_window("RLLR"));
  CHECK(is_sturmian_window("LRRLLR"));
  CHECK(is_sturmian_window("RRLLRRL"));
  CHECK_FALSE(is_sturmian_window("RRLRRL"));
  CHECK_FALSE(is_sturmian_window("LLLRRR"));
  CHECK_FALSE(is_sturmian_window("LRLRRLRL"));
  CHECK(is_sturmian_window(xy_to_lr(cutting_sequence(golden_slope(), 300))));
}

TEST_CASE("factor complexity") {
  CHECK_THROWS_AS(factor_complexity("XY", 1), Error);
  const auto c0 = factor_complexity(std::string(40, 'X'), 10);
  for (std::size_t v : c0) CHECK(v == 1);
  const auto c1 = factor_complexity(cutting_sequence(Slope::rational(1, 2), 60), 12);
  CHECK(c1[0] == 1);
  CHECK(c1[1] == 2);
  for (int l = 2; l <= 12; ++l) CHECK(c1[l] == 3);
  const auto cg = factor_complexity(cutting_sequence(golden_slope(), 4000), 200);
  for (int l = 0; l <= 200; ++l) CHECK(cg[l] == static_cast<std::size_t>(l + 1));
}

TEST_CASE("Markov pairs") {
  auto [m01, p01] = markov_pair(Slope::rational(0, 1));
  CHECK(p01 == QuadSurd(1, 1, 5, 2));
  CHECK(m01 == QuadSurd(1, -1, 5, 2));
  auto [m11, p11] = markov_pair(Slope::rational(1, 1));
  CHECK(p11 == QuadSurd(0, 1, 2, 1));
  CHECK(m11 == QuadSurd(0, -1, 2, 1));
  CHECK(insh_surd(Slope::rational(1, 0)) == QuadSurd(-1, 1, 5, 2));
  CHECK(insh_surd(Slope::rational(1, 2)) == QuadSurd(1, 1, 221, 10));
  const CFSeq c12 = insh(Slope::rational(1, 2), 7);
  CHECK(c12.to_string() == "[1;1,1,2,2,1,1]");

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> pick(-25, 25);
  int tested = 0;
  while (tested < 150) {
    const int x = pick(rng), y = pick(rng);
    if (std::gcd(x, y) != 1) continue;
    ++tested;
    const auto [lo, hi] = markov_pair(Slope::rational(x, y));
    CHECK(lo == galois_conjugate(hi));
    CHECK(insh_surd(Slope::rational(-x, -y)) == hi.mobius(0, -1, 1, 0));
  }
}

TEST_CASE("InSh of irrational slopes") {
  const CFSeq g = insh(golden_slope(), 12);
  CHECK_FALSE(g.negated);
  for (std::size_t k = 0; k < g.digits.size(); ++k) CHECK(g.digits[k] >= 0);
  // Leading digits match the Markov surds of the convergents.
  const CFSeq conv = insh(Slope::rational(8, 5), 12);
  CHECK(g.digits[0] == conv.digits[0]);
  CHECK(g.digits[5] == conv.digits[5]);
  const BigReal r3 = sqrt(BigReal(3));
  const CFSeq neg = insh(Slope::real(-r3, -1), 10);
  const CFSeq pos = insh(Slope::real(r3, 1), 10);
  CHECK(neg.negated);
  CHECK(neg.digits == pos.digits);
  CHECK_THROWS_AS(insh(Slope::real(-r3, 1), 10), Error);
}

TEST_CASE("Schmidt diagnostic") {
  const auto rows = schmidt_diagnostic(golden_slope(), 12);
  REQUIRE(rows.size() >= 8);
  CHECK(rows[0].a == 1);
  CHECK(rows[0].c == 1);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    CHECK(rows[k].height > rows[k - 1].height);
    CHECK(rows[k].beta > 1.4);
  }
  // Convergents from either side approach at different rates.
  for (std::size_t k = 2; k < rows.size(); ++k) CHECK(rows[k].gap < rows[k - 2].gap);
  CHECK_THROWS_AS(schmidt_diagnostic(Slope::rational(1, 2), 5), Error);
}
