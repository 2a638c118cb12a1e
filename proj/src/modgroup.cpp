#include "hexlab/modgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>

namespace hexlab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotInMonoid: return "NotInMonoid";
    case ErrorKind::TorsionElement: return "TorsionElement";
    case ErrorKind::NotInDerivedGroup: return "NotInDerivedGroup";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::OddLength: return "OddLength";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::DegeneratePeriod: return "DegeneratePeriod";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotPrimitiveVector: return "NotPrimitiveVector";
    case ErrorKind::WindowTooShort: return "WindowTooShort";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NoSplitting: return "NoSplitting";
    case ErrorKind::RegionError: return "RegionError";
    case ErrorKind::ZeroTranslation: return "ZeroTranslation";
    case ErrorKind::OutOfDisk: return "OutOfDisk";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// ProjMatrix

ProjMatrix::ProjMatrix(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1) {
    throw Error(ErrorKind::BadParameter, "determinant is not 1: " + to_string());
  }
  normalize();
}

void ProjMatrix::normalize() {
  if (c_ < 0 || (c_ == 0 && d_ < 0)) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

bool ProjMatrix::is_torsion() const {
  if (is_identity()) return true;
  const Integer t = trace();
  return t > -2 && t < 2;
}

ProjMatrix ProjMatrix::pow(long long e) const {
  ProjMatrix base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : e;
  ProjMatrix out;
  while (k) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

ProjMatrix operator*(const ProjMatrix& x, const ProjMatrix& y) {
  return ProjMatrix(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                    x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

std::string ProjMatrix::to_string() const {
  std::ostringstream os;
  os << "[[" << a_ << "," << b_ << "],[" << c_ << "," << d_ << "]]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ProjMatrix& m) { return os << m.to_string(); }

namespace gen {
ProjMatrix S() { return ProjMatrix(0, -1, 1, 0); }
ProjMatrix T() { return ProjMatrix(1, -1, 1, 0); }
ProjMatrix L() { return ProjMatrix(1, 0, 1, 1); }
ProjMatrix R() { return ProjMatrix(1, 1, 0, 1); }
ProjMatrix X() { return ProjMatrix(1, 1, 1, 2); }
ProjMatrix Y() { return ProjMatrix(2, 1, 1, 1); }
}  // namespace gen

// ---------------------------------------------------------------------------
// GroupWord

namespace {

Alphabet alphabet_of(char symbol) {
  switch (symbol) {
    case 'S':
    case 'T': return Alphabet::ST;
    case 'L':
    case 'R': return Alphabet::LR;
    case 'X':
    case 'Y': return Alphabet::XY;
  }
  throw Error(ErrorKind::ParseError, std::string("unknown symbol '") + symbol + "'");
}

long long normalize_exponent(Alphabet alphabet, char symbol, long long e) {
  if (alphabet != Alphabet::ST) return e;
  if (symbol == 'S') return ((e % 2) + 2) % 2;
  long long r = ((e % 3) + 3) % 3;
  return r == 2 ? -1 : r;
}

}  // namespace

GroupWord::GroupWord(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  for (const Letter& l : letters_) {
    if (alphabet_of(l.symbol) != alphabet_) {
      throw Error(ErrorKind::BadParameter, std::string("symbol '") + l.symbol + "' outside alphabet");
    }
  }
  reduce();
  if (alphabet_ == Alphabet::LR) {
    for (const Letter& l : letters_) {
      if (l.exponent < 0) throw Error(ErrorKind::BadParameter, "L&R words are positive");
    }
  }
}

void GroupWord::reduce() {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_) {
    long long e = normalize_exponent(alphabet_, l.symbol, l.exponent);
    if (e == 0) continue;
    if (!out.empty() && out.back().symbol == l.symbol) {
      long long merged = normalize_exponent(alphabet_, l.symbol, out.back().exponent + e);
      if (merged == 0) {
        out.pop_back();
      } else {
        out.back().exponent = merged;
      }
    } else {
      out.push_back({l.symbol, e});
    }
  }
  letters_ = std::move(out);
}

GroupWord GroupWord::parse(std::string_view text, Alphabet fallback) {
  std::vector<Letter> letters;
  std::optional<Alphabet> alphabet;
  std::size_t i = 0;
  auto skip_separators = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '*' || text[i] == '.')) ++i;
  };
  while (true) {
    skip_separators();
    if (i >= text.size()) break;
    const char sym = text[i++];
    const Alphabet a = alphabet_of(sym);
    if (alphabet && *alphabet != a) throw Error(ErrorKind::ParseError, "mixed alphabets in '" + std::string(text) + "'");
    alphabet = a;
    long long e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool braced = i < text.size() && text[i] == '{';
      if (braced) ++i;
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i) throw Error(ErrorKind::ParseError, "missing exponent");
      try {
        e = std::stoll(std::string(text.substr(start, i - start)));
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad exponent");
      }
      if (braced) {
        if (i >= text.size() || text[i] != '}') throw Error(ErrorKind::ParseError, "unclosed brace");
        ++i;
      }
    }
    letters.push_back({sym, e});
  }
  return GroupWord(alphabet.value_or(fallback), std::move(letters));
}

long long GroupWord::length() const {
  long long n = 0;
  for (const Letter& l : letters_) n += l.exponent < 0 ? -l.exponent : l.exponent;
  return n;
}

std::vector<std::pair<char, int>> GroupWord::expanded() const {
  std::vector<std::pair<char, int>> out;
  for (const Letter& l : letters_) {
    const int sign = l.exponent < 0 ? -1 : 1;
    for (long long k = 0; k < l.exponent * sign; ++k) out.emplace_back(l.symbol, sign);
  }
  return out;
}

GroupWord GroupWord::inverse() const {
  if (alphabet_ == Alphabet::LR) throw Error(ErrorKind::BadParameter, "L&R monoid words have no inverse word");
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (Letter& l : inv) l.exponent = -l.exponent;
  return GroupWord(alphabet_, std::move(inv));
}

GroupWord GroupWord::operator*(const GroupWord& other) const {
  if (other.alphabet_ != alphabet_ && !other.empty() && !empty()) {
    throw Error(ErrorKind::BadParameter, "cannot concatenate words over different alphabets");
  }
  std::vector<Letter> all = letters_;
  all.insert(all.end(), other.letters_.begin(), other.letters_.end());
  return GroupWord(empty() ? other.alphabet_ : alphabet_, std::move(all));
}

std::string GroupWord::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : letters_) {
    if (!first) os << ' ';
    first = false;
    os << l.symbol;
    if (l.exponent != 1) os << '^' << l.exponent;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GroupWord& w) { return os << w.to_string(); }

// ---------------------------------------------------------------------------
// HexElement

std::array<long long, 2> HexElement::rotate(int k, long long x, long long y) {
  k = ((k % 6) + 6) % 6;
  for (int i = 0; i < k; ++i) {
    // Rot(1): X -> Y, Y -> Y - X.
    const long long nx = -y;
    const long long ny = x + y;
    x = nx;
    y = ny;
  }
  return {x, y};
}

HexElement operator*(const HexElement& x, const HexElement& y) {
  auto [rm, rn] = HexElement::rotate(x.rho, y.m, y.n);
  return {x.m + rm, x.n + rn, (x.rho + y.rho) % 6};
}

HexElement HexElement::inverse() const {
  const int r = (6 - rho) % 6;
  auto [im, in] = rotate(r, -m, -n);
  return {im, in, r};
}

HexElement HexElement::pow(long long e) const {
  HexElement base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : e;
  HexElement out;
  while (k) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const HexElement& h) {
  return os << "((" << h.m << "," << h.n << ")," << h.rho << ")";
}

// ---------------------------------------------------------------------------
// Factorizations

ProjMatrix word_to_matrix(const GroupWord& w) {
  ProjMatrix out;
  for (const Letter& l : w.letters()) {
    ProjMatrix g;
    switch (l.symbol) {
      case 'S': g = gen::S(); break;
      case 'T': g = gen::T(); break;
      case 'L': g = gen::L(); break;
      case 'R': g = gen::R(); break;
      case 'X': g = gen::X(); break;
      case 'Y': g = gen::Y(); break;
      default: throw Error(ErrorKind::BadParameter, "unknown symbol");
    }
    out = out * g.pow(l.exponent);
  }
  return out;
}

GroupWord lr_factorize(const ProjMatrix& m) {
  Integer a = m.a(), b = m.b(), c = m.c(), d = m.d();
  // Canonical sign already has c >= 0; a nonnegative representative must be
  // this one or its negation.
  if (a < 0 || b < 0 || c < 0 || d < 0) {
    a = -a, b = -b, c = -c, d = -d;
    if (a < 0 || b < 0 || c < 0 || d < 0) {
      throw Error(ErrorKind::NotInMonoid, m.to_string());
    }
  }
  std::vector<Letter> letters;
  while (!(a == 1 && b == 0 && c == 0 && d == 1)) {
    if (a >= c && b >= d) {
      // Peel R^k on the left with the largest k keeping rows nonnegative.
      Integer k = c == 0 ? b / d : (d == 0 ? a / c : std::min(a / c, b / d));
      if (k == 0) throw Error(ErrorKind::NotInMonoid, m.to_string());
      a -= k * c;
      b -= k * d;
      letters.push_back({'R', static_cast<long long>(k)});
    } else if (c >= a && d >= b) {
      Integer k = a == 0 ? d / b : (b == 0 ? c / a : std::min(c / a, d / b));
      if (k == 0) throw Error(ErrorKind::NotInMonoid, m.to_string());
      c -= k * a;
      d -= k * b;
      letters.push_back({'L', static_cast<long long>(k)});
    } else {
      throw Error(ErrorKind::NotInMonoid, m.to_string());
    }
  }
  return GroupWord(Alphabet::LR, std::move(letters));
}

namespace {

// A = product of tokens; each token is R^k (k != 0) or S (k == 0 marks S).
struct RSToken {
  bool is_s;
  Integer k;
};

std::vector<RSToken> rs_tokens(const ProjMatrix& m) {
  Integer a = m.a(), b = m.b(), c = m.c(), d = m.d();
  std::vector<RSToken> out;
  while (c != 0) {
    Integer k = floor_div(a, c);
    if (k != 0) {
      a -= k * c;
      b -= k * d;
      out.push_back({false, k});
    }
    out.push_back({true, 0});
    Integer na = c, nb = d, nc = -a, nd = -b;
    a = std::move(na), b = std::move(nb), c = std::move(nc), d = std::move(nd);
  }
  // a = d = +-1 here.
  Integer k = a * b;
  if (k != 0) out.push_back({false, k});
  return out;
}

}  // namespace

GroupWord st_factorize(const ProjMatrix& a) {
  std::vector<Letter> letters;
  for (const RSToken& t : rs_tokens(a)) {
    if (t.is_s) {
      letters.push_back({'S', 1});
      continue;
    }
    const long long k = static_cast<long long>(t.k);
    for (long long i = 0; i < (k > 0 ? k : -k); ++i) {
      if (k > 0) {
        letters.push_back({'T', 1});  // R = T S
        letters.push_back({'S', 1});
      } else {
        letters.push_back({'S', 1});  // R^-1 = S T^-1
        letters.push_back({'T', -1});
      }
    }
  }
  return GroupWord(Alphabet::ST, std::move(letters));
}

int gamma_abelian_class(const ProjMatrix& a) {
  int cls = 0;
  for (const RSToken& t : rs_tokens(a)) cls = (cls + (t.is_s ? 3 : mod6(t.k))) % 6;
  return cls;
}

Integer rademacher(const ProjMatrix& a) {
  if (a.is_torsion()) throw Error(ErrorKind::TorsionElement, a.to_string());
  std::vector<Letter> w = st_factorize(a).letters();
  // Cyclic reduction: conjugate until first and last symbols differ.
  while (w.size() >= 2 && w.front().symbol == w.back().symbol) {
    if (w.front().symbol == 'S') {
      w.pop_back();
      w.erase(w.begin());
    } else {
      long long e = normalize_exponent(Alphabet::ST, 'T', w.front().exponent + w.back().exponent);
      w.pop_back();
      if (e == 0) {
        w.erase(w.begin());
      } else {
        w.front().exponent = e;
      }
    }
  }
  if (w.size() < 2) throw Error(ErrorKind::TorsionElement, a.to_string());
  // Alternating S / T^{+-1}: every T^e S block is R (e = 1) or L (e = -1).
  Integer rad = 0;
  for (const Letter& l : w) {
    if (l.symbol == 'T') rad += l.exponent;
  }
  return rad;
}

// ---------------------------------------------------------------------------
// Hexagonal representation

namespace {

struct HexGenerators {
  HexElement s, t;
};

HexElement compose_word(const HexElement& s, const HexElement& t, std::string_view word) {
  HexElement out;
  for (char ch : word) {
    switch (ch) {
      case 'S': out = out * s; break;
      case 'T': out = out * t; break;
      case 't': out = out * t.inverse(); break;
    }
  }
  return out;
}

HexGenerators solve_hex_generators() {
  // phi(S) = (v_S, 3), phi(T) = (v_T, 4): rotation of T equals class(T) = 4.
  // X = L R = T^-1 S T S, Y = R L = T S T^-1 S. Conjugating by a translation
  // preserves phi(X), phi(Y); phi(R) = phi(T S) is pinned to a pure rotation
  // since R fixes the base cusp, where hexp vanishes.
  std::optional<HexGenerators> found;
  int count = 0;
  for (long long a = -3; a <= 3; ++a)
    for (long long b = -3; b <= 3; ++b)
      for (long long c = -3; c <= 3; ++c)
        for (long long d = -3; d <= 3; ++d) {
          HexElement s{a, b, 3}, t{c, d, 4};
          if (compose_word(s, t, "tSTS") == HexElement{1, 0, 0} &&
              compose_word(s, t, "TStS") == HexElement{0, 1, 0} &&
              compose_word(s, t, "TS") == HexElement{0, 0, 1}) {
            found = HexGenerators{s, t};
            ++count;
          }
        }
  if (count != 1) throw std::logic_error("hexagonal generator bootstrap is not unique");
  return *found;
}

const HexGenerators& hex_generators() {
  static const HexGenerators g = solve_hex_generators();
  return g;
}

}  // namespace

HexElement hex_image_S() { return hex_generators().s; }
HexElement hex_image_T() { return hex_generators().t; }

HexElement hex_image(const ProjMatrix& a) {
  const HexGenerators& g = hex_generators();
  const HexElement r = g.t * g.s;  // R = T S
  HexElement out;
  for (const RSToken& t : rs_tokens(a)) {
    out = out * (t.is_s ? g.s : r.pow(mod6(t.k)));
  }
  return out;
}

bool gamma_second_contains(const ProjMatrix& a) { return hex_image(a).is_identity(); }

// ---------------------------------------------------------------------------
// Reidemeister-Schreier rewriting into the free basis X, Y.

namespace {

struct SchreierTable {
  std::array<ProjMatrix, 6> reps;
  // gamma[c][0] for S, gamma[c][1] for T.
  std::array<std::array<GroupWord, 2>, 6> gamma;
};

SchreierTable build_schreier_table() {
  using namespace gen;
  SchreierTable tab;
  tab.reps = {ProjMatrix(), T() * S(), T() * T(), S(), T(), T() * T() * S()};
  for (int i = 0; i < 6; ++i) {
    if (gamma_abelian_class(tab.reps[i]) != i) throw std::logic_error("transversal class mismatch");
  }

  // Reduced X,Y words up to length 6 keyed by matrix.
  std::map<std::string, GroupWord> known;
  std::vector<GroupWord> frontier{GroupWord(Alphabet::XY)};
  known.emplace(ProjMatrix().to_string(), GroupWord(Alphabet::XY));
  const std::array<Letter, 4> steps{Letter{'X', 1}, Letter{'X', -1}, Letter{'Y', 1}, Letter{'Y', -1}};
  for (int len = 1; len <= 6; ++len) {
    std::vector<GroupWord> next;
    for (const GroupWord& w : frontier) {
      for (const Letter& s : steps) {
        GroupWord ext = w * GroupWord(Alphabet::XY, {s});
        if (ext.length() != len) continue;
        auto [it, inserted] = known.emplace(word_to_matrix(ext).to_string(), ext);
        if (inserted) next.push_back(ext);
      }
    }
    frontier = std::move(next);
  }

  const std::array<ProjMatrix, 2> gens{S(), T()};
  const std::array<int, 2> gen_class{3, 4};
  for (int c = 0; c < 6; ++c) {
    for (int g = 0; g < 2; ++g) {
      const int next = (c + gen_class[g]) % 6;
      const ProjMatrix elt = tab.reps[c] * gens[g] * tab.reps[next].inverse();
      auto it = known.find(elt.to_string());
      if (it == known.end()) throw std::logic_error("Schreier generator outside search radius");
      tab.gamma[c][g] = it->second;
    }
  }
  return tab;
}

const SchreierTable& schreier_table() {
  static const SchreierTable tab = build_schreier_table();
  return tab;
}

}  // namespace

GroupWord gamma_prime_decompose(const ProjMatrix& a) {
  if (gamma_abelian_class(a) != 0) throw Error(ErrorKind::NotInDerivedGroup, a.to_string());
  const SchreierTable& tab = schreier_table();
  std::vector<Letter> out;
  int coset = 0;
  auto step = [&](int g) {
    const GroupWord& piece = tab.gamma[coset][g];
    out.insert(out.end(), piece.letters().begin(), piece.letters().end());
    coset = (coset + (g == 0 ? 3 : 4)) % 6;
  };
  const GroupWord st = st_factorize(a);
  for (const Letter& l : st.letters()) {
    if (l.symbol == 'S') {
      step(0);
    } else if (l.exponent == 1) {
      step(1);
    } else {
      step(1);  // T^-1 = T^2
      step(1);
    }
  }
  if (coset != 0) throw std::logic_error("Schreier walk did not return to the trivial coset");
  return GroupWord(Alphabet::XY, std::move(out));
}

// ---------------------------------------------------------------------------

namespace {

// Returns (g, x, y) with a x + b y = g >= 0.
std::tuple<Integer, Integer, Integer> ext_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r, r = tmp;
    tmp = old_s - q * s;
    old_s = s, s = tmp;
    tmp = old_t - q * t;
    old_t = t, t = tmp;
  }
  if (old_r < 0) old_r = -old_r, old_s = -old_s, old_t = -old_t;
  return {old_r, old_s, old_t};
}

}  // namespace

ProjMatrix gamma_prime_rep_for_cusp(const Integer& a, const Integer& c, long long extra_sixes) {
  auto [g, x, y] = ext_gcd(a, c);
  if (g != 1) throw Error(ErrorKind::NotCoprime, "gcd(" + a.str() + "," + c.str() + ") != 1");
  // a x + c y = 1  =>  [[a, -y], [c, x]] has determinant 1.
  ProjMatrix base(a, -y, c, x);
  const int k = (6 - gamma_abelian_class(base)) % 6;
  ProjMatrix rep = base * gen::R().pow(k + 6 * extra_sixes);
  while (rep.is_torsion() && !rep.is_identity()) rep = rep * gen::R().pow(6);
  return rep;
}

ProjMatrix gamma_prime_rep_for_cusp(const Integer& a, const Integer& c) {
  return gamma_prime_rep_for_cusp(a, c, 0);
}

}  // namespace hexlab
