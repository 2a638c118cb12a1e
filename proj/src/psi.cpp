#include "hexlab/psi.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace hexlab {

int chi12(long long n) {
  switch (((n % 12) + 12) % 12) {
    case 1:
    case 11: return 1;
    case 5:
    case 7: return -1;
    default: return 0;
  }
}

std::vector<EisensteinInt> EisensteinInt::units() {
  return {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
}

bool EisensteinInt::is_primary() const {
  // (x - 1) * conj(mu) divisible by N(mu) = 12, mu = 2 + 4j, conj(mu) = -2 - 4j.
  const EisensteinInt t = EisensteinInt{a - 1, b} * EisensteinInt{-2, -4};
  return t.a % 12 == 0 && t.b % 12 == 0;
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& z) {
  return os << z.a << (z.b < 0 ? " - " : " + ") << (z.b < 0 ? -z.b : z.b) << "j";
}

long long psi_bruteforce(long long n, long long bound) {
  if (n < 0) throw Error(ErrorKind::BadParameter, "negative index");
  if (n > bound) throw Error(ErrorKind::BoundExceeded, std::to_string(n) + " > " + std::to_string(bound));
  // chi(0) = 0 and chi vanishes on even numbers, so only odd entries count.
  long long total = 0;
  for (long long a = 1; a * a < n; a += 2) {
    for (long long b = 1; a * a + b * b < n; b += 2) {
      for (long long c = 1; a * a + b * b + c * c < n; c += 2) {
        const long long rest = n - a * a - b * b - c * c;
        long long d = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(rest))));
        while (d * d > rest) --d;
        while ((d + 1) * (d + 1) <= rest) ++d;
        if (d * d == rest && d % 2 == 1) total += chi12(a) * chi12(b) * chi12(c) * chi12(d);
      }
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// CoeffTable

CoeffTable::CoeffTable(std::vector<long long> a) : a_(std::move(a)) {}

long long CoeffTable::a(long long m) const {
  if (m < 1 || static_cast<std::size_t>(m) > a_.size()) {
    throw Error(ErrorKind::BoundExceeded, "a(" + std::to_string(m) + ") outside table of size " + std::to_string(a_.size()));
  }
  return a_[static_cast<std::size_t>(m - 1)];
}

long long CoeffTable::psi_raw(long long n) const {
  if (n <= 0 || n % 24 != 4) return 0;
  return a(n / 4);
}

namespace {

constexpr char kMagic[4] = {'H', 'X', 'C', 'T'};

}  // namespace

void CoeffTable::save_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << "# hexlab coefficient table\n";
  out << "format_version," << kFormatVersion << "\n";
  out << "N," << a_.size() << "\n";
  out << "m,a\n";
  for (std::size_t i = 0; i < a_.size(); ++i) out << (i + 1) << ',' << a_[i] << '\n';
  if (!out) throw Error(ErrorKind::IoError, "write failed: " + path);
}

void CoeffTable::save_binary(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  const std::uint32_t version = kFormatVersion;
  const std::uint64_t n = a_.size();
  out.write(kMagic, 4);
  out.write(reinterpret_cast<const char*>(&version), sizeof version);
  out.write(reinterpret_cast<const char*>(&n), sizeof n);
  out.write(reinterpret_cast<const char*>(a_.data()), static_cast<std::streamsize>(n * sizeof(long long)));
  if (!out) throw Error(ErrorKind::IoError, "write failed: " + path);
}

CoeffTable CoeffTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
  char magic[4] = {};
  in.read(magic, 4);
  if (in && std::memcmp(magic, kMagic, 4) == 0) {
    std::uint32_t version = 0;
    std::uint64_t n = 0;
    in.read(reinterpret_cast<char*>(&version), sizeof version);
    in.read(reinterpret_cast<char*>(&n), sizeof n);
    if (!in || version != kFormatVersion) throw Error(ErrorKind::IoError, "unsupported table version in " + path);
    std::vector<long long> a(n);
    in.read(reinterpret_cast<char*>(a.data()), static_cast<std::streamsize>(n * sizeof(long long)));
    if (!in) throw Error(ErrorKind::IoError, "truncated table " + path);
    return CoeffTable(std::move(a));
  }

  in.clear();
  in.seekg(0);
  std::string line;
  std::uint64_t n = 0;
  bool have_version = false, have_n = false, in_rows = false;
  std::vector<long long> a;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::IoError, "malformed line: " + line);
    const std::string key = line.substr(0, comma), val = line.substr(comma + 1);
    try {
      if (!in_rows && key == "format_version") {
        if (std::stoul(val) != kFormatVersion) throw Error(ErrorKind::IoError, "unsupported table version " + val);
        have_version = true;
      } else if (!in_rows && key == "N") {
        n = std::stoull(val);
        have_n = true;
      } else if (!in_rows && key == "m") {
        in_rows = true;
        a.reserve(n);
      } else if (in_rows) {
        if (std::stoull(key) != a.size() + 1) throw Error(ErrorKind::IoError, "rows out of order at m=" + key);
        a.push_back(std::stoll(val));
      } else {
        throw Error(ErrorKind::IoError, "unexpected header field " + key);
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::IoError, "malformed line: " + line);
    }
  }
  if (!have_version || !have_n || a.size() != n) throw Error(ErrorKind::IoError, "incomplete table " + path);
  return CoeffTable(std::move(a));
}

// ---------------------------------------------------------------------------
// Eta product

CoeffTable eta_product_coeffs(long long N) {
  if (N < 1) throw Error(ErrorKind::BadParameter, "N must be positive");
  const std::size_t J = static_cast<std::size_t>((N - 1) / 6);

  // Euler's pentagonal series for prod (1 - y^k).
  std::vector<std::pair<std::size_t, int>> pent;
  pent.emplace_back(0, 1);
  for (long long k = 1;; ++k) {
    const long long e1 = k * (3 * k - 1) / 2, e2 = k * (3 * k + 1) / 2;
    if (static_cast<std::size_t>(e1) > J) break;
    const int s = k % 2 ? -1 : 1;
    pent.emplace_back(static_cast<std::size_t>(e1), s);
    if (static_cast<std::size_t>(e2) <= J) pent.emplace_back(static_cast<std::size_t>(e2), s);
  }

  std::vector<long long> c(J + 1, 0);
  for (const auto& [e, s] : pent) c[e] = s;
  for (int pass = 0; pass < 3; ++pass) {
    std::vector<long long> next(J + 1, 0);
    for (std::size_t i = 0; i <= J; ++i) {
      if (c[i] == 0) continue;
      for (const auto& [e, s] : pent) {
        if (i + e > J) break;
        next[i + e] += s * c[i];
      }
    }
    c = std::move(next);
  }

  std::vector<long long> a(static_cast<std::size_t>(N), 0);
  for (std::size_t j = 0; j <= J; ++j) a[6 * j] = c[j];
  return CoeffTable(std::move(a));
}

// ---------------------------------------------------------------------------
// Euler factors

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

EisensteinInt split_prime_element(long long p) {
  // a^2 - a b + b^2 = p  <=>  (2a - b)^2 + 3 b^2 = 4p.
  for (long long b = 1; 3 * b * b <= 4 * p; ++b) {
    const long long rest = 4 * p - 3 * b * b;
    long long s = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(rest))));
    while (s * s > rest) --s;
    while ((s + 1) * (s + 1) <= rest) ++s;
    if (s * s == rest && (s + b) % 2 == 0) return {(s + b) / 2, b};
  }
  throw Error(ErrorKind::NoSplitting, std::to_string(p) + " is not a norm");
}

}  // namespace

EisensteinInt grossencharacter(long long p) {
  if (p % 3 != 1) throw Error(ErrorKind::NoSplitting, std::to_string(p) + " is not 1 mod 3");
  if (!is_prime(p)) throw Error(ErrorKind::BadParameter, std::to_string(p) + " is not prime");
  const EisensteinInt z = split_prime_element(p);
  EisensteinInt found;
  int count = 0;
  for (const EisensteinInt& u : EisensteinInt::units()) {
    const EisensteinInt cand = u * z;
    if (cand.is_primary()) {
      found = cand;
      ++count;
    }
  }
  if (count != 1) throw std::logic_error("primary associate is not unique");
  return found;
}

long long psi_prime_power(long long p, int e) {
  if (e == 0) return 1;
  if (p == 2 || p == 3) return 0;
  if (p % 3 == 2) {
    if (e % 2) return 0;
    long long v = 1;
    for (int i = 0; i < e / 2; ++i) v *= -p;
    return v;
  }
  // Full homogeneous sum pi^e + pi^(e-1) conj(pi) + ... + conj(pi)^e.
  const EisensteinInt pi = grossencharacter(p), pibar = pi.conj();
  EisensteinInt sum{0, 0};
  for (int i = 0; i <= e; ++i) {
    EisensteinInt term{1, 0};
    for (int k = 0; k < i; ++k) term = term * pi;
    for (int k = i; k < e; ++k) term = term * pibar;
    sum = sum + term;
  }
  if (sum.b != 0) throw std::logic_error("homogeneous sum is not rational");
  return sum.a;
}

long long psi_multiplicative(long long m) {
  if (m < 1) throw Error(ErrorKind::BadParameter, "m must be positive");
  long long value = 1;
  for (long long p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) value *= psi_prime_power(p, e);
    if (value == 0) return 0;
  }
  if (m > 1) value *= psi_prime_power(m, 1);
  return value;
}

CoeffTable multiplicative_table(long long N) {
  if (N < 1) throw Error(ErrorKind::BadParameter, "N must be positive");
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(N) + 1, 0);
  for (long long i = 2; i <= N; ++i) {
    if (spf[i]) continue;
    for (long long k = i; k <= N; k += i) {
      if (!spf[k]) spf[k] = static_cast<std::uint32_t>(i);
    }
  }
  // a(p^e) = t a(p^(e-1)) - p a(p^(e-2)) with t = a(p) = trace(pi) for split p;
  // the same recurrence generates the homogeneous sum.
  std::unordered_map<long long, long long> trace;
  std::vector<long long> a(static_cast<std::size_t>(N) + 1, 0);
  a[1] = 1;
  for (long long m = 2; m <= N; ++m) {
    const long long p = spf[m];
    long long r = m;
    int e = 0;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    long long local;
    if (p % 3 == 1) {
      auto it = trace.find(p);
      if (it == trace.end()) it = trace.emplace(p, grossencharacter(p).trace()).first;
      long long prev2 = 1, prev1 = it->second;
      for (int k = 2; k <= e; ++k) {
        const long long nxt = it->second * prev1 - p * prev2;
        prev2 = prev1;
        prev1 = nxt;
      }
      local = prev1;
    } else {
      local = psi_prime_power(p, e);
    }
    a[m] = a[r] * local;
  }
  a.erase(a.begin());
  return CoeffTable(std::move(a));
}

bool nonvanishing(long long n) {
  if (n <= 0 || n % 24 != 4) return false;
  long long m = n / 4;
  for (long long p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e && (p == 2 || p == 3)) return false;
    if (e % 2 == 1 && p % 3 == 2) return false;
  }
  if (m > 1 && (m % 3 == 2 || m == 3)) return false;
  return true;
}

double lacunarity_density(const CoeffTable& table, long long N) {
  if (N < 1) throw Error(ErrorKind::BadParameter, "N must be positive");
  long long count = 0;
  for (long long n = 4; n <= N; n += 24) {
    if (table.psi_raw(n) != 0) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(N);
}

double partial_sum_growth(const CoeffTable& table, long long N) {
  long long s = 0;
  double best = 0.0;
  for (long long M = 1; M <= N; ++M) {
    s += table.a(M);
    best = std::max(best, std::abs(static_cast<double>(s)) / std::pow(static_cast<double>(M), 5.0 / 6.0));
  }
  return best;
}

bool ramanujan_check(const CoeffTable& table, long long P) {
  std::vector<bool> composite(static_cast<std::size_t>(P) + 1, false);
  for (long long p = 2; p <= P; ++p) {
    if (composite[p]) continue;
    for (long long k = p * p; k <= P; k += p) composite[k] = true;
    const long long v = table.a(p);
    if (v * v > 4 * p) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

std::mutex g_table_mutex;
std::shared_ptr<const CoeffTable> g_table;

}  // namespace

std::shared_ptr<const CoeffTable> shared_table(long long min_limit) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  const long long have = g_table ? static_cast<long long>(g_table->limit()) : 0;
  if (have < min_limit) {
    const long long want = std::max<long long>(min_limit, std::max<long long>(2 * have, 4096));
    g_table = std::make_shared<const CoeffTable>(eta_product_coeffs(want));
  }
  return g_table;
}

void install_shared_table(std::shared_ptr<const CoeffTable> table) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  if (table && (!g_table || table->limit() >= g_table->limit())) g_table = std::move(table);
}

}  // namespace hexlab
