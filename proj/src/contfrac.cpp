#include "hexlab/contfrac.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hexlab {

namespace {

Integer iabs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer igcd(Integer a, Integer b) {
  a = iabs(a);
  b = iabs(b);
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Integer parse_integer(const std::string& s) {
  std::string t = trim(s);
  if (t.empty()) throw Error(ErrorKind::ParseError, "empty integer");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) throw Error(ErrorKind::ParseError, "bad integer '" + t + "'");
  for (std::size_t k = i; k < t.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(t[k]))) throw Error(ErrorKind::ParseError, "bad integer '" + t + "'");
  }
  return Integer(t);
}

}  // namespace

// ---------------------------------------------------------------------------
// CFSeq

CFSeq CFSeq::parse(std::string_view text) {
  std::string t = trim(text);
  CFSeq out;
  if (t.rfind("-1/", 0) == 0) {
    out.negated = true;
    t = trim(t.substr(3));
  }
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw Error(ErrorKind::ParseError, "expected [n0;n1,...], got '" + std::string(text) + "'");
  }
  std::string body = trim(t.substr(1, t.size() - 2));
  if (body.empty()) return out;
  std::string head = body, tail;
  if (auto semi = body.find(';'); semi != std::string::npos) {
    head = body.substr(0, semi);
    tail = body.substr(semi + 1);
  } else if (body.find(',') != std::string::npos) {
    throw Error(ErrorKind::ParseError, "missing ';' after the first digit");
  }
  out.digits.push_back(parse_integer(head));
  if (!trim(tail).empty()) {
    std::stringstream ss(tail);
    std::string item;
    while (std::getline(ss, item, ',')) out.digits.push_back(parse_integer(item));
  }
  if (out.digits[0] < 0) throw Error(ErrorKind::ParseError, "first digit must be nonnegative");
  for (std::size_t i = 1; i < out.digits.size(); ++i) {
    if (out.digits[i] < 1) throw Error(ErrorKind::ParseError, "digits after the first must be positive");
  }
  return out;
}

std::string CFSeq::to_string() const {
  std::ostringstream os;
  if (negated) os << "-1/";
  os << '[';
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i == 1) os << ';';
    if (i > 1) os << ',';
    os << digits[i];
  }
  os << ']';
  return os.str();
}

std::vector<std::pair<Integer, Integer>> convergents(const std::vector<Integer>& digits) {
  std::vector<std::pair<Integer, Integer>> out;
  Integer p0 = 0, p1 = 1, q0 = 1, q1 = 0;
  for (const Integer& n : digits) {
    Integer p = n * p1 + p0, q = n * q1 + q0;
    p0 = std::move(p1), q0 = std::move(q1);
    p1 = p, q1 = q;
    out.emplace_back(std::move(p), std::move(q));
  }
  return out;
}

std::pair<Integer, Integer> cf_value(const CFSeq& cf) {
  Integer p = 0, q = 1;
  if (!cf.digits.empty()) {
    auto c = convergents(cf.digits);
    p = c.back().first;
    q = c.back().second;
  }
  if (!cf.negated) return {p, q};
  if (p == 0) return {1, 0};
  return {Integer(-q), p};
}

CFSeq rational_to_cf(const Integer& num, const Integer& den, Parity parity) {
  if (num == 0 && den == 0) throw Error(ErrorKind::BadParameter, "0/0");
  Integer g = igcd(num, den);
  Integer n = num / g, d = den / g;
  if (d < 0) n = -n, d = -d;
  CFSeq out;
  if (d == 0) {
    out.negated = true;  // -1/<> = infinity
  } else if (n < 0) {
    out.negated = true;  // -1/x = d / (-n) > 0
    Integer t = -n;
    n = d;
    d = t;
  }
  if (!(d == 0 && out.negated)) {
    while (d != 0) {
      Integer a = floor_div(n, d);
      out.digits.push_back(a);
      Integer r = n - a * d;
      n = std::move(d);
      d = std::move(r);
    }
    if (out.digits.size() == 1 && out.digits[0] == 0) out.digits.clear();
  }
  const bool odd = out.digits.size() % 2 == 1;
  if (parity == Parity::Any || (parity == Parity::Odd) == odd) return out;
  if (out.digits.empty()) {
    out.digits.push_back(0);
  } else if (out.digits.size() >= 2 && out.digits.back() == 1) {
    out.digits.pop_back();
    out.digits.back() += 1;
  } else if (out.digits.size() == 1 && out.digits[0] == 0) {
    out.digits.clear();
  } else {
    out.digits.back() -= 1;
    out.digits.push_back(1);
  }
  return out;
}

std::string cf_digits_to_lr(const std::vector<Integer>& digits, std::size_t max_letters) {
  std::string out;
  for (std::size_t i = 0; i < digits.size() && out.size() < max_letters; ++i) {
    const char letter = i % 2 == 0 ? 'R' : 'L';
    Integer n = digits[i];
    while (n > 0 && out.size() < max_letters) {
      out.push_back(letter);
      --n;
    }
  }
  return out;
}

GroupWord cf_to_lr_word(const CFSeq& cf) {
  if (cf.negated) throw Error(ErrorKind::BadParameter, "negated CF has no L&R word");
  if (cf.digits.size() % 2 != 0) throw Error(ErrorKind::OddLength, cf.to_string());
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < cf.digits.size(); ++i) {
    if (cf.digits[i] != 0) letters.push_back({i % 2 == 0 ? 'R' : 'L', to_i64(cf.digits[i])});
  }
  return GroupWord(Alphabet::LR, std::move(letters));
}

// ---------------------------------------------------------------------------
// QuadSurd

QuadSurd::QuadSurd(Integer p, Integer q, Integer d, Integer r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
  if (d_ <= 1) throw Error(ErrorKind::BadParameter, "radicand must exceed 1");
  // Trial division removes square factors below 10^5; equality is decided on
  // minimal polynomials, so a leftover square factor is harmless.
  for (long f = 2; f < 100000 && Integer(f) * f <= d_; f += (f == 2 ? 1 : 2)) {
    const long f2 = f * f;
    while (d_ % f2 == 0) {
      d_ /= f2;
      q_ *= f;
    }
  }
  if (d_ == 1) throw Error(ErrorKind::BadParameter, "radicand is a perfect square");
  normalize();
}

QuadSurd::QuadSurd(Integer p, Integer q, Integer d, Integer r, ReducedRadicand)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
  normalize();
}

void QuadSurd::normalize() {
  if (r_ == 0) throw Error(ErrorKind::BadParameter, "zero denominator");
  if (q_ == 0) throw Error(ErrorKind::BadParameter, "rational value");
  if (r_ < 0) p_ = -p_, q_ = -q_, r_ = -r_;
  Integer g = igcd(igcd(p_, q_), r_);
  p_ /= g;
  q_ /= g;
  r_ /= g;
}

QuadSurd QuadSurd::from_quadratic(const Integer& a, const Integer& b, const Integer& c, int root_sign) {
  if (a == 0) throw Error(ErrorKind::BadParameter, "not quadratic");
  return QuadSurd(-b, root_sign < 0 ? -1 : 1, b * b - 4 * a * c, 2 * a);
}

QuadSurd QuadSurd::attracting_fixed_point(const ProjMatrix& m) {
  const Integer t = m.trace();
  if (t >= -2 && t <= 2) throw Error(ErrorKind::DegeneratePeriod, "period matrix is not hyperbolic: " + m.to_string());
  // c x^2 + (d - a) x - b = 0; the root with |c x + d| > 1 attracts.
  return from_quadratic(m.c(), m.d() - m.a(), -m.b(), t > 0 ? 1 : -1);
}

std::array<Integer, 3> QuadSurd::min_poly() const {
  Integer a = r_ * r_, b = -2 * p_ * r_, c = p_ * p_ - q_ * q_ * d_;
  Integer g = igcd(igcd(a, b), c);
  return {a / g, b / g, c / g};
}

QuadSurd QuadSurd::mobius(const Integer& a, const Integer& b, const Integer& c, const Integer& d) const {
  if (a * d - b * c == 0) throw Error(ErrorKind::BadParameter, "singular Mobius map");
  const Integer p1 = a * p_ + b * r_, q1 = a * q_;
  const Integer p2 = c * p_ + d * r_, q2 = c * q_;
  const Integer den = p2 * p2 - q2 * q2 * d_;
  return QuadSurd(p1 * p2 - q1 * q2 * d_, q1 * p2 - p1 * q2, d_, den, ReducedRadicand{});
}

namespace {

// Sign of P + Q sqrt(D), D > 0 not a square.
int sign_of(const Integer& P, const Integer& Q, const Integer& D) {
  const int sp = P > 0 ? 1 : (P < 0 ? -1 : 0);
  const int sq = Q > 0 ? 1 : (Q < 0 ? -1 : 0);
  if (sp == 0) return sq;
  if (sq == 0 || sp == sq) return sp;
  const Integer lhs = P * P, rhs = Q * Q * D;
  return lhs > rhs ? sp : sq;
}

}  // namespace

int QuadSurd::sign() const { return sign_of(p_, q_, d_); }

int QuadSurd::compare(const Integer& num, const Integer& den) const {
  return sign_of(p_ * den - num * r_, q_ * den, d_);
}

Integer QuadSurd::floor() const {
  using boost::multiprecision::floor;
  Integer k = static_cast<Integer>(floor(value<BigReal>()));
  while (compare(k, 1) < 0) --k;
  while (compare(k + 1, 1) >= 0) ++k;
  return k;
}

std::string QuadSurd::to_string() const {
  std::ostringstream os;
  os << "(" << p_ << (q_ < 0 ? " - " : " + ") << iabs(q_) << "*sqrt(" << d_ << "))/" << r_;
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// x = (P + sqrt(D)) / Q with Q | D - P^2.
struct SurdState {
  Integer P, Q, D;

  explicit SurdState(const QuadSurd& x) {
    // (p + q sqrt(d)) / r = (s p + sqrt(q^2 d)) / (s r) with s = sign(q).
    P = x.q() > 0 ? x.p() : Integer(-x.p());
    Q = x.q() > 0 ? x.r() : Integer(-x.r());
    D = x.q() * x.q() * x.d();
    if ((D - P * P) % Q != 0) {
      const Integer aq = iabs(Q);
      P *= aq;
      D *= Q * Q;
      Q *= aq;
    }
  }

  Integer digit(const Integer& s) const {
    if (Q > 0) return floor_div(P + s, Q);
    return -floor_div(P + s, -Q) - 1;
  }

  void advance(const Integer& a) {
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
};

QuadSurd positive_part(const QuadSurd& x, bool& negated) {
  negated = x.sign() < 0;
  return negated ? x.mobius(0, -1, 1, 0) : x;
}

}  // namespace

PeriodicCF surd_to_periodic_cf(const QuadSurd& x) {
  PeriodicCF out;
  SurdState st(positive_part(x, out.negated));
  const Integer s = boost::multiprecision::sqrt(st.D);
  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  std::vector<Integer> digits;
  while (true) {
    auto key = std::make_pair(st.P, st.Q);
    if (auto it = seen.find(key); it != seen.end()) {
      out.preperiod.assign(digits.begin(), digits.begin() + it->second);
      out.period.assign(digits.begin() + it->second, digits.end());
      return out;
    }
    seen.emplace(std::move(key), digits.size());
    Integer a = st.digit(s);
    digits.push_back(a);
    st.advance(a);
  }
}

CFSeq surd_to_cf(const QuadSurd& x, int depth) {
  CFSeq out;
  SurdState st(positive_part(x, out.negated));
  const Integer s = boost::multiprecision::sqrt(st.D);
  for (int i = 0; i < depth; ++i) {
    Integer a = st.digit(s);
    out.digits.push_back(a);
    st.advance(a);
  }
  return out;
}

QuadSurd periodic_cf_to_surd(const PeriodicCF& cf) {
  if (cf.period.empty()) throw Error(ErrorKind::DegeneratePeriod, "empty period");
  std::vector<Integer> period = cf.period;
  if (period.size() % 2 == 1) period.insert(period.end(), cf.period.begin(), cf.period.end());
  for (std::size_t i = 0; i < period.size(); ++i) {
    if (period[i] < 1) {
      throw Error(ErrorKind::BadParameter, "periodic digits must be positive");
    }
  }
  // [[n,1],[1,0]] products: two of them give R^n0 L^n1.
  Integer a = 1, b = 0, c = 0, d = 1;
  for (const Integer& n : period) {
    Integer na = a * n + b, nc = c * n + d;
    b = a, d = c;
    a = na, c = nc;
  }
  QuadSurd y = QuadSurd::attracting_fixed_point(ProjMatrix(a, b, c, d));
  for (auto it = cf.preperiod.rbegin(); it != cf.preperiod.rend(); ++it) y = y.mobius(*it, 1, 1, 0);
  if (cf.negated) y = y.mobius(0, -1, 1, 0);
  return y;
}

QuadSurd surd_from_period_word(const GroupWord& lr_word) {
  if (lr_word.empty()) throw Error(ErrorKind::DegeneratePeriod, "empty period word");
  return QuadSurd::attracting_fixed_point(word_to_matrix(lr_word));
}

CFSeq real_to_cf(const BigReal& x, int depth, const BigReal& radius) {
  using boost::multiprecision::abs;
  using boost::multiprecision::floor;
  const BigReal eps = std::numeric_limits<BigReal>::epsilon() * 16;
  const BigReal rad = radius < 0 ? BigReal((abs(x) + 1) * eps * 1024) : radius;
  BigReal lo = x - rad, hi = x + rad;
  CFSeq out;
  if (lo <= 0 && hi >= 0) {
    if (x == 0 && radius == 0) return out;
    throw Error(ErrorKind::PrecisionExhausted, "sign of x is not certified");
  }
  if (hi < 0) {
    out.negated = true;
    BigReal nlo = -1 / lo, nhi = -1 / hi;
    lo = nlo * (1 - eps);
    hi = nhi * (1 + eps);
  }
  for (int i = 0; i < depth; ++i) {
    const BigReal fl = floor(lo);
    if (floor(hi) != fl) {
      throw Error(ErrorKind::PrecisionExhausted, "digit " + std::to_string(i) + " is not certified");
    }
    out.digits.push_back(static_cast<Integer>(fl));
    if (i + 1 == depth) break;
    const BigReal flo = lo - fl, fhi = hi - fl;
    if (flo <= 0) throw Error(ErrorKind::PrecisionExhausted, "input is rational within precision");
    lo = (1 / fhi) * (1 - eps);
    hi = (1 / flo) * (1 + eps);
  }
  return out;
}

Integer surd_height(const QuadSurd& x) {
  auto poly = x.min_poly();
  Integer h = 0;
  for (const Integer& v : poly) h = std::max(h, iabs(v));
  return h;
}

namespace {

std::string transpose_letters(std::string s) {
  std::reverse(s.begin(), s.end());
  for (char& ch : s) ch = ch == 'R' ? 'L' : 'R';
  return s;
}

}  // namespace

GeodesicCode geodesic_code(const QuadSurd& alpha_minus, const QuadSurd& alpha_plus, int window) {
  if (!(alpha_minus.compare(-1, 1) > 0 && alpha_minus.sign() < 0 && alpha_plus.compare(1, 1) > 0)) {
    throw Error(ErrorKind::NotNormalized, "need -1 < alpha_minus < 0 < 1 < alpha_plus");
  }
  const auto w = static_cast<std::size_t>(window);
  GeodesicCode out;
  out.future = cf_digits_to_lr(surd_to_cf(alpha_plus, window + 1).digits, w);
  out.past = transpose_letters(cf_digits_to_lr(surd_to_cf(alpha_minus.mobius(0, -1, 1, 0), window + 1).digits, w));
  return out;
}

GeodesicCode geodesic_code(const BigReal& alpha_minus, const BigReal& alpha_plus, int window) {
  if (!(alpha_minus > -1 && alpha_minus < 0 && alpha_plus > 1)) {
    throw Error(ErrorKind::NotNormalized, "need -1 < alpha_minus < 0 < 1 < alpha_plus");
  }
  const auto w = static_cast<std::size_t>(window);
  GeodesicCode out;
  out.future = cf_digits_to_lr(real_to_cf(alpha_plus, window + 1).digits, w);
  out.past = transpose_letters(cf_digits_to_lr(real_to_cf(-1 / alpha_minus, window + 1).digits, w));
  return out;
}

}  // namespace hexlab
