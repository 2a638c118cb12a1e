#include "hexlab/sturmian.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string_view>

namespace hexlab {

namespace {

int sign_of(const Integer& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
int sign_of(const BigReal& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

Integer iabs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

int quadrant_of(int sx, int sy) {
  if (sx >= 0 && sy >= 0) return 0;
  if (sx < 0 && sy >= 0) return 1;
  if (sx <= 0 && sy < 0) return 2;
  return 3;
}

}  // namespace

// ---------------------------------------------------------------------------
// Slope

Slope Slope::rational(const Integer& x, const Integer& y) {
  Integer a = iabs(x), b = iabs(y);
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  if (a != 1) throw Error(ErrorKind::NotPrimitiveVector, "(" + x.str() + "," + y.str() + ")");
  Slope s;
  s.rational_ = true;
  s.xi_ = x;
  s.yi_ = y;
  return s;
}

Slope Slope::real(const BigReal& x, const BigReal& y) {
  if (x == 0 && y == 0) throw Error(ErrorKind::BadParameter, "zero direction");
  Slope s;
  s.rational_ = false;
  s.xr_ = x;
  s.yr_ = y;
  return s;
}

Slope Slope::surd(const QuadSurd& ratio) {
  if (ratio.sign() <= 0) throw Error(ErrorKind::BadParameter, "surd slopes need a positive ratio");
  Slope s = real(ratio.value<BigReal>(), BigReal(1));
  s.ratio_ = ratio;
  return s;
}

const Integer& Slope::x() const {
  if (!rational_) throw Error(ErrorKind::NotPrimitiveVector, "irrational slope");
  return xi_;
}

const Integer& Slope::y() const {
  if (!rational_) throw Error(ErrorKind::NotPrimitiveVector, "irrational slope");
  return yi_;
}

BigReal Slope::x_real() const { return rational_ ? BigReal(xi_) : xr_; }
BigReal Slope::y_real() const { return rational_ ? BigReal(yi_) : yr_; }

int Slope::quadrant() const {
  return rational_ ? quadrant_of(sign_of(xi_), sign_of(yi_)) : quadrant_of(sign_of(xr_), sign_of(yr_));
}

Slope Slope::positive_part() const {
  const int q = quadrant();
  if (q == 0) return *this;
  if (rational_) {
    switch (q) {
      case 1: return rational(yi_, -xi_);
      case 2: return rational(-xi_, -yi_);
      default: return rational(-yi_, xi_);
    }
  }
  switch (q) {
    case 1: return real(yr_, -xr_);
    case 2: return real(-xr_, -yr_);
    default: return real(-yr_, xr_);
  }
}

// ---------------------------------------------------------------------------
// Twists

namespace {

GroupWord image(char symbol, Twist g, long long power) {
  // Images of X and Y under g^power for the monoid twists, g for the others.
  auto W = [](std::initializer_list<Letter> ls) { return GroupWord(Alphabet::XY, std::vector<Letter>(ls)); };
  switch (g) {
    case Twist::DX: return symbol == 'X' ? W({{'X', 1}}) : W({{'Y', 1}, {'X', power}});
    case Twist::DY: return symbol == 'X' ? W({{'X', 1}, {'Y', power}}) : W({{'Y', 1}});
    case Twist::DS: return symbol == 'X' ? W({{'X', 1}, {'Y', 1}, {'X', -1}}) : W({{'X', -1}});
    case Twist::DJ: return symbol == 'X' ? W({{'Y', 1}}) : W({{'X', 1}});
  }
  return W({});
}

GroupWord substitute(const GroupWord& word, Twist g, long long power) {
  const GroupWord ix = image('X', g, power), iy = image('Y', g, power);
  const GroupWord ixinv = ix.inverse(), iyinv = iy.inverse();
  std::vector<Letter> out;
  for (const Letter& l : word.letters()) {
    const GroupWord& piece = l.symbol == 'X' ? (l.exponent > 0 ? ix : ixinv) : (l.exponent > 0 ? iy : iyinv);
    const long long reps = l.exponent > 0 ? l.exponent : -l.exponent;
    for (long long k = 0; k < reps; ++k) out.insert(out.end(), piece.letters().begin(), piece.letters().end());
  }
  return GroupWord(Alphabet::XY, std::move(out));
}

GroupWord invert_letters(const GroupWord& w) {
  std::vector<Letter> out = w.letters();
  for (Letter& l : out) l.exponent = -l.exponent;
  return GroupWord(Alphabet::XY, std::move(out));
}

GroupWord cyclic_reduce(const GroupWord& w) {
  std::vector<Letter> ls = w.letters();
  while (ls.size() >= 2 && ls.front().symbol == ls.back().symbol) {
    const long long e = ls.front().exponent + ls.back().exponent;
    ls.pop_back();
    if (e == 0) {
      ls.erase(ls.begin());
    } else {
      ls.front().exponent = e;
    }
  }
  return GroupWord(Alphabet::XY, std::move(ls));
}

// Positive word -> lexicographically least rotation with Y < X.
GroupWord least_rotation(const GroupWord& w) {
  std::string s;
  for (const auto& [sym, sgn] : w.expanded()) s.push_back(sym == 'Y' ? '0' : '1');
  // Booth's least rotation.
  const std::string d = s + s;
  std::vector<long long> f(d.size(), -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < d.size(); ++j) {
    long long i = f[j - k - 1];
    while (i != -1 && d[j] != d[k + i + 1]) {
      if (d[j] < d[k + i + 1]) k = j - i - 1;
      i = f[i];
    }
    if (i == -1 && d[j] != d[k]) {
      if (d[j] < d[k]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  const std::string best = d.substr(k, s.size());
  std::vector<Letter> ls;
  for (char ch : best) ls.push_back({ch == '0' ? 'Y' : 'X', 1});
  return GroupWord(Alphabet::XY, std::move(ls));
}

GroupWord positive_primitive_word(const Integer& a, const Integer& c) {
  if (a == 0) return GroupWord(Alphabet::XY, {{'Y', 1}});
  if (c == 0) return GroupWord(Alphabet::XY, {{'X', 1}});
  const CFSeq cf = rational_to_cf(a, c, Parity::Even);
  GroupWord w(Alphabet::XY, {{'X', 1}});
  for (std::size_t i = cf.digits.size(); i-- > 0;) {
    if (cf.digits[i] == 0) continue;
    w = substitute(w, i % 2 == 0 ? Twist::DX : Twist::DY, to_i64(cf.digits[i]));
  }
  return least_rotation(w);
}

std::string expand(const GroupWord& w) {
  std::string s;
  for (const auto& [sym, sgn] : w.expanded()) {
    s.push_back(sgn > 0 ? sym : static_cast<char>(sym - 'A' + 'a'));
  }
  return s;
}

std::string flip_letters(std::string s, bool flip_x, bool flip_y) {
  for (char& ch : s) {
    if (flip_x && ch == 'X') ch = 'x';
    if (flip_y && ch == 'Y') ch = 'y';
  }
  return s;
}

}  // namespace

GroupWord twist(const GroupWord& word, Twist generator) {
  if (word.alphabet() != Alphabet::XY && !word.empty()) throw Error(ErrorKind::BadParameter, "twists act on X&Y words");
  return substitute(word, generator, 1);
}

std::array<Integer, 2> twist_homology(const std::array<Integer, 2>& v, Twist generator) {
  switch (generator) {
    case Twist::DX: return {v[0] + v[1], v[1]};
    case Twist::DY: return {v[0], v[0] + v[1]};
    case Twist::DS: return {-v[1], v[0]};
    case Twist::DJ: return {v[1], v[0]};
  }
  return v;
}

GroupWord stream_to_word(const XYStream& stream) {
  std::vector<Letter> ls;
  for (char ch : stream) {
    switch (ch) {
      case 'X': ls.push_back({'X', 1}); break;
      case 'Y': ls.push_back({'Y', 1}); break;
      case 'x': ls.push_back({'X', -1}); break;
      case 'y': ls.push_back({'Y', -1}); break;
      default: throw Error(ErrorKind::ParseError, std::string("bad stream letter '") + ch + "'");
    }
  }
  return GroupWord(Alphabet::XY, std::move(ls));
}

XYStream word_to_stream(const GroupWord& word) { return expand(word); }

GroupWord primitive_word(const Slope& slope) {
  if (!slope.is_rational()) throw Error(ErrorKind::NotPrimitiveVector, "irrational slope");
  const Slope pos = slope.positive_part();
  const GroupWord w0 = positive_primitive_word(pos.x(), pos.y());
  switch (slope.quadrant()) {
    case 0: return w0;
    case 1: return cyclic_reduce(twist(w0, Twist::DS));
    case 2: return invert_letters(w0);
    default: return cyclic_reduce(invert_letters(twist(w0, Twist::DS)));
  }
}

namespace {

// Prefix of the Sturmian stream of a positive irrational direction.
std::string irrational_positive_stream(const Slope& pos, std::size_t window) {
  for (int depth = 8;; depth *= 2) {
    if (depth > 4096) throw Error(ErrorKind::PrecisionExhausted, "slope digits exhausted");
    CFSeq cf;
    if (pos.exact_ratio()) {
      cf = surd_to_cf(*pos.exact_ratio(), depth);
    } else {
      if (pos.y_real() == 0) throw Error(ErrorKind::BadParameter, "rational direction given as real");
      cf = real_to_cf(pos.x_real() / pos.y_real(), depth);
    }
    for (const auto& [p, q] : convergents(cf.digits)) {
      if (p + q >= Integer(window) + 2) {
        // Christoffel words Y u X share the prefix Y u with the limit.
        return expand(positive_primitive_word(p, q)).substr(0, window);
      }
    }
  }
}

}  // namespace

XYStream cutting_sequence(const Slope& slope, int window) {
  if (window < 0) throw Error(ErrorKind::BadParameter, "negative window");
  const auto w = static_cast<std::size_t>(window);
  const int q = slope.quadrant();
  const bool flip_x = q == 1 || q == 2, flip_y = q == 2 || q == 3;
  std::string base;
  if (slope.is_rational()) {
    const std::string period = expand(positive_primitive_word(iabs(slope.x()), iabs(slope.y())));
    while (base.size() < w) base += period;
    base.resize(w);
  } else {
    using boost::multiprecision::abs;
    Slope mag = Slope::real(abs(slope.x_real()), abs(slope.y_real()));
    if (q == 0 && slope.exact_ratio()) mag = slope;
    base = irrational_positive_stream(mag, w);
  }
  return flip_letters(base, flip_x, flip_y);
}

XYStream mechanical_word(const BigReal& rho, const BigReal& intercept, int window) {
  using boost::multiprecision::floor;
  XYStream out;
  out.reserve(static_cast<std::size_t>(std::max(window, 0)));
  BigReal prev = floor(intercept);
  for (int n = 0; n < window; ++n) {
    BigReal next = floor(rho * (n + 1) + intercept);
    out.push_back(next - prev == 1 ? 'Y' : 'X');
    prev = next;
  }
  return out;
}

std::string xy_to_lr(const XYStream& stream) {
  std::string out;
  out.reserve(2 * stream.size());
  for (char ch : stream) {
    switch (ch) {
      case 'X': out += "LR"; break;
      case 'Y': out += "RL"; break;
      case 'x': out += "rl"; break;
      case 'y': out += "lr"; break;
      default: throw Error(ErrorKind::ParseError, std::string("bad stream letter '") + ch + "'");
    }
  }
  return out;
}

std::pair<QuadSurd, QuadSurd> markov_pair(const Slope& slope) {
  const ProjMatrix m = word_to_matrix(primitive_word(slope));
  const QuadSurd plus = QuadSurd::attracting_fixed_point(m);
  return {plus.conjugate(), plus};
}

QuadSurd insh_surd(const Slope& slope) { return markov_pair(slope).second; }

CFSeq insh(const Slope& slope, int depth) {
  if (slope.is_rational()) return surd_to_cf(insh_surd(slope), depth);
  const int q = slope.quadrant();
  if (q == 1 || q == 3) throw Error(ErrorKind::NotNormalized, "irrational InSh needs x y >= 0");
  if (q == 2) {
    // Inversion is conjugation by S: alpha -> -1/alpha.
    CFSeq out = insh(Slope::real(-slope.x_real(), -slope.y_real()), depth);
    out.negated = true;
    return out;
  }
  for (int window = 4 * depth + 16;; window *= 2) {
    const std::string pos = xy_to_lr(cutting_sequence(slope, window));
    CFSeq out;
    std::size_t i = 0;
    const char up_r = 'R';
    // Leading R-run (possibly empty), then alternating runs; the last run may
    // be cut by the window and is dropped.
    std::vector<std::size_t> runs;
    std::size_t run = 0;
    while (i < pos.size() && pos[i] == up_r) ++run, ++i;
    runs.push_back(run);
    while (i < pos.size()) {
      const char c = pos[i];
      run = 0;
      while (i < pos.size() && pos[i] == c) ++run, ++i;
      runs.push_back(run);
    }
    runs.pop_back();
    if (static_cast<int>(runs.size()) >= depth) {
      for (int k = 0; k < depth; ++k) out.digits.emplace_back(runs[k]);
      return out;
    }
  }
}

bool is_balanced(const XYStream& s) {
  const std::size_t n = s.size();
  std::vector<int> pre(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) pre[i + 1] = pre[i] + (s[i] == 'X' || s[i] == 'x');
  for (std::size_t l = 1; l <= n; ++l) {
    int lo = pre[l], hi = pre[l];
    for (std::size_t i = 1; i + l <= n; ++i) {
      const int c = pre[i + l] - pre[i];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
      if (hi - lo > 1) return false;
    }
  }
  return true;
}

bool is_sturmian_window(const std::string& lr) {
  for (std::size_t offset = 0; offset < 2; ++offset) {
    XYStream xy;
    bool ok = true;
    std::size_t i = offset;
    for (; i + 1 < lr.size(); i += 2) {
      if (lr[i] == 'L' && lr[i + 1] == 'R') {
        xy.push_back('X');
      } else if (lr[i] == 'R' && lr[i + 1] == 'L') {
        xy.push_back('Y');
      } else {
        ok = false;
        break;
      }
    }
    if (ok && is_balanced(xy)) return true;
  }
  return false;
}

std::vector<std::size_t> factor_complexity(const XYStream& stream, int l_max) {
  if (l_max < 0) throw Error(ErrorKind::BadParameter, "negative length");
  if (stream.size() < 4 * static_cast<std::size_t>(l_max)) {
    throw Error(ErrorKind::WindowTooShort, "need at least " + std::to_string(4 * l_max) + " letters");
  }
  std::vector<std::size_t> out;
  const std::string_view sv(stream);
  for (int l = 0; l <= l_max; ++l) {
    std::set<std::string_view> factors;
    for (std::size_t i = 0; i + l <= sv.size(); ++i) factors.insert(sv.substr(i, l));
    out.push_back(factors.size());
  }
  return out;
}

std::vector<SchmidtRow> schmidt_diagnostic(const Slope& slope, int k_max) {
  if (slope.is_rational()) throw Error(ErrorKind::BadParameter, "Schmidt diagnostics need an irrational slope");
  if (slope.quadrant() != 0) throw Error(ErrorKind::NotNormalized, "positive quadrant only");
  using boost::multiprecision::abs;
  using boost::multiprecision::log;

  CFSeq ratio_cf = slope.exact_ratio() ? surd_to_cf(*slope.exact_ratio(), k_max)
                                       : real_to_cf(slope.x_real() / slope.y_real(), k_max);
  const auto conv = convergents(ratio_cf.digits);

  // alpha_plus to well beyond BigReal resolution.
  const CFSeq alpha_cf = insh(slope, 300);
  const auto ac = convergents(alpha_cf.digits);
  const BigReal alpha = BigReal(ac.back().first) / BigReal(ac.back().second);
  const BigReal floor_gap("1e-90");

  std::vector<SchmidtRow> rows;
  for (const auto& [p, q] : conv) {
    const QuadSurd xi = insh_surd(Slope::rational(p, q));
    SchmidtRow row{p, q, xi, abs(alpha - xi.value<BigReal>()), surd_height(xi), 0.0};
    if (row.gap < floor_gap) break;
    const BigReal lh = log(BigReal(row.height));
    row.beta = lh > 0 ? static_cast<double>(-log(row.gap) / lh) : std::numeric_limits<double>::infinity();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hexlab
