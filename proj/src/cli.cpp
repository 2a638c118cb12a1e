#include "hexlab/cli.hpp"

#include "hexlab/hyper2f1.hpp"
#include "hexlab/psi.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

namespace hexlab::cli {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

double parse_number(std::string_view s, std::string_view whole) {
  auto fail = [&]() { return Error(ErrorKind::ParseError, "bad number in '" + std::string(whole) + "'"); };
  if (s.empty()) throw fail();
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const double num = parse_number(s.substr(0, slash), whole);
    const double den = parse_number(s.substr(slash + 1), whole);
    if (den == 0) throw fail();
    return num / den;
  }
  std::string_view body = s;
  if (body.front() == '+') body.remove_prefix(1);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc() || ptr != body.data() + body.size()) throw fail();
  return v;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::string body(s);
  if (!body.empty() && body.front() == '+') body.erase(0, 1);
  const bool ok = !body.empty() &&
                  std::all_of(body.begin() + (body.front() == '-' ? 1 : 0), body.end(),
                              [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) &&
                  body != "-";
  if (!ok) throw Error(ErrorKind::ParseError, "bad integer in '" + std::string(whole) + "'");
  return Integer(body);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json header(const char* command, const RunConfig& cfg) {
  return {{"schema", std::string("hexlab/") + command + "/" + kSchemaVersion},
          {"command", command},
          {"precision_bits", cfg.precision_bits},
          {"tol", cfg.tol}};
}

std::string digits_string(const std::vector<Integer>& digits) {
  std::string s;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) s += ',';
    s += digits[i].str();
  }
  return s;
}

std::string periodic_string(const PeriodicCF& cf) {
  std::string s = cf.negated ? "-1/[" : "[";
  s += digits_string(cf.preperiod);
  s += ";(" + digits_string(cf.period) + ")]";
  return s;
}

ProjMatrix seeded_matrix(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, 12);
  std::bernoulli_distribution coin(0.5);
  std::vector<Letter> letters;
  bool s_next = coin(rng);
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    letters.push_back(s_next ? Letter{'S', 1} : Letter{'T', coin(rng) ? 1 : -1});
    s_next = !s_next;
  }
  return word_to_matrix(GroupWord(Alphabet::ST, letters));
}

json matrix_json(const ProjMatrix& m) {
  return json::array({json::array({m.a().str(), m.b().str()}), json::array({m.c().str(), m.d().str()})});
}

}  // namespace

void RunConfig::validate() const {
  if (precision_bits < 53 || precision_bits > 4096) throw Error(ErrorKind::BadParameter, "precision must lie in [53, 4096]");
  if (!(tol > 0) || tol < std::ldexp(1.0, 1 - precision_bits)) {
    throw Error(ErrorKind::BadParameter, "tolerance below 2^(1 - precision)");
  }
}

Complex parse_tau(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty complex number");
  if (s.back() != 'i') return {parse_number(s, text), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split_at = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  const std::string re = split_at == std::string::npos ? "" : body.substr(0, split_at);
  const std::string im = split_at == std::string::npos ? body : body.substr(split_at);
  double im_v = 0;
  if (im.empty() || im == "+") {
    im_v = 1;
  } else if (im == "-") {
    im_v = -1;
  } else {
    im_v = parse_number(im, text);
  }
  return {re.empty() ? 0.0 : parse_number(re, text), im_v};
}

Slope parse_slope(std::string_view text) {
  const std::string s = trim(text);
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw Error(ErrorKind::ParseError, "slope must be 'x,y'");
  auto is_sqrt = [](const std::string& p) { return p.rfind("sqrt(", 0) == 0 && p.size() > 6 && p.back() == ')'; };
  if (is_sqrt(parts[0]) || is_sqrt(parts[1])) {
    auto big = [&](const std::string& p) {
      if (!is_sqrt(p)) return BigReal(parse_integer(p, text));
      const Integer d = parse_integer(std::string_view(p).substr(5, p.size() - 6), text);
      if (d < 0) throw Error(ErrorKind::ParseError, "negative radicand in '" + std::string(text) + "'");
      return BigReal(sqrt(BigReal(d)));
    };
    return Slope::real(big(parts[0]), big(parts[1]));
  }
  // Decimals are exact rationals: scale both components by a common power of ten.
  auto decimal = [&](const std::string& p) {
    const auto dot = p.find('.');
    if (dot == std::string::npos) return std::pair<Integer, std::size_t>{parse_integer(p, text), 0};
    const std::string frac = p.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::ParseError, "bad decimal in '" + std::string(text) + "'");
    }
    std::string whole = p.substr(0, dot);
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    return std::pair<Integer, std::size_t>{parse_integer(whole + frac, text), frac.size()};
  };
  auto [x, ex] = decimal(parts[0]);
  auto [y, ey] = decimal(parts[1]);
  const std::size_t e = std::max(ex, ey);
  x *= pow(Integer(10), static_cast<unsigned>(e - ex));
  y *= pow(Integer(10), static_cast<unsigned>(e - ey));
  const Integer g = gcd(x, y);
  if (g == 0) throw Error(ErrorKind::ParseError, "zero slope");
  return Slope::rational(x / g, y / g);
}

QuadSurd parse_surd(std::string_view text) {
  const std::string s = trim(text);
  if (s.rfind("slope:", 0) == 0) {
    const Slope slope = parse_slope(std::string_view(s).substr(6));
    if (!slope.is_rational()) throw Error(ErrorKind::ParseError, "slope: needs integer components");
    return insh_surd(slope);
  }
  const auto parts = split(s, ',');
  if (parts.size() != 4) throw Error(ErrorKind::ParseError, "surd must be 'p,q,d,r' or 'slope:x,y'");
  return QuadSurd(parse_integer(parts[0], text), parse_integer(parts[1], text), parse_integer(parts[2], text),
                  parse_integer(parts[3], text));
}

std::pair<Integer, Integer> parse_fraction(std::string_view text) {
  const std::string s = trim(text);
  const auto parts = split(s, '/');
  if (parts.size() != 2) throw Error(ErrorKind::ParseError, "fraction must be 'a/c'");
  return {parse_integer(parts[0], text), parse_integer(parts[1], text)};
}

CommandOutput cmd_psi(const RunConfig& cfg, long long max, long long inject_at) {
  if (max < 1 || max > 10000000) throw Error(ErrorKind::BoundExceeded, "max must lie in [1, 10^7]");
  CoeffTable table = eta_product_coeffs(max);
  if (inject_at > 0 && inject_at <= max) {
    std::vector<long long> v = table.values();
    v[static_cast<std::size_t>(inject_at - 1)] += 1;
    table = CoeffTable(std::move(v));
  }
  const CoeffTable mult = multiplicative_table(max);
  long long mismatches = 0;
  json first = json::array();
  for (long long m = 1; m <= max; ++m) {
    if (table.a(m) != mult.a(m)) {
      ++mismatches;
      if (first.size() < 10) first.push_back({{"m", m}, {"table", table.a(m)}, {"multiplicative", mult.a(m)}});
    }
  }
  const long long brute_limit = std::min<long long>(4 * max, 4000);
  for (long long n = 0; n <= brute_limit; ++n) {
    if (psi_bruteforce(n) != table.psi_raw(n)) {
      ++mismatches;
      if (first.size() < 10) first.push_back({{"n", n}, {"table", table.psi_raw(n)}, {"bruteforce", psi_bruteforce(n)}});
    }
  }
  CommandOutput out;
  out.doc = header("psi", cfg);
  out.doc["max"] = max;
  out.doc["oracle"] = {{"multiplicative_checked", max}, {"bruteforce_checked", brute_limit}, {"mismatches", mismatches},
                       {"first_mismatches", first}};
  json rows = json::array();
  for (long long m = 1; m <= max; ++m) rows.push_back({{"m", m}, {"a", table.a(m)}});
  out.doc["rows"] = std::move(rows);
  if (!cfg.out_path.empty()) {
    const bool binary = cfg.out_path.size() >= 4 && cfg.out_path.compare(cfg.out_path.size() - 4, 4, ".bin") == 0;
    binary ? table.save_binary(cfg.out_path) : table.save_csv(cfg.out_path);
    out.doc["dump"] = cfg.out_path;
  }
  out.doc["verified"] = mismatches == 0;
  out.exit_code = mismatches == 0 ? kExitOk : kExitVerification;
  return out;
}

CommandOutput cmd_cusp(const RunConfig& cfg, std::string_view fraction) {
  const auto [a, c] = parse_fraction(fraction);
  const CuspValue v = cusp_value(a, c);
  const Integer cabs = c < 0 ? Integer(-c) : c;
  const double eps = c == 0 ? 0.05 : 1e-3 / static_cast<double>(cabs * cabs);
  const ComplexVal numeric = cusp_limit_numeric(a, c, {eps})[0];
  const double distance = std::abs(numeric.value - v.value);
  CommandOutput out;
  out.doc = header("cusp", cfg);
  out.doc["a"] = a.str();
  out.doc["c"] = c.str();
  out.doc["m"] = v.m;
  out.doc["n"] = v.n;
  out.doc["value"] = complex_json(v.value);
  out.doc["numeric"] = {{"eps", eps}, {"value", complex_json(numeric.value)}, {"distance", distance}};
  out.doc["verified"] = distance < 1e-6;
  out.exit_code = distance < 1e-6 ? kExitOk : kExitVerification;
  return out;
}

CommandOutput cmd_eval(const RunConfig& cfg, std::string_view tau_text, bool check_equivariance) {
  const Complex tau = parse_tau(tau_text);
  const ComplexVal v = hexp_eval(tau, std::max(cfg.tol / 10, 1e-15));
  CommandOutput out;
  out.doc = header("eval", cfg);
  out.doc["tau"] = complex_json(tau);
  out.doc["value"] = complex_json(v.value);
  out.doc["error"] = v.error;
  if (v.error > cfg.tol) {
    out.doc["verified"] = false;
    out.exit_code = kExitPrecision;
    return out;
  }
  bool ok = true;
  if (check_equivariance) {
    const ProjMatrix A = seeded_matrix(cfg.seed);
    const Complex lhs = hexp_eval(A.apply(tau)).value;
    const Complex rhs = hex_affine(hex_image(A), v.value);
    const double diff = std::abs(lhs - rhs);
    const HexElement h = hex_image(A);
    out.doc["equivariance"] = {{"matrix", matrix_json(A)},
                               {"hex_image", {{"m", h.m}, {"n", h.n}, {"rho", h.rho}}},
                               {"difference", diff}};
    ok = diff < 1e-8;
  }
  out.doc["verified"] = ok;
  out.exit_code = ok ? kExitOk : kExitVerification;
  return out;
}

CommandOutput cmd_sturmian(const RunConfig& cfg, std::string_view slope_text, int length) {
  if (length < 1 || length > 1000000) throw Error(ErrorKind::BoundExceeded, "length must lie in [1, 10^6]");
  const Slope slope = parse_slope(slope_text);
  const XYStream stream = cutting_sequence(slope, length);
  CommandOutput out;
  out.doc = header("sturmian", cfg);
  out.doc["slope"] = trim(slope_text);
  out.doc["rational"] = slope.is_rational();
  out.doc["stream"] = stream;
  out.doc["lr"] = xy_to_lr(stream);
  out.doc["balanced"] = is_balanced(stream.substr(0, std::min<std::size_t>(stream.size(), 2000)));
  if (slope.is_rational()) out.doc["period"] = primitive_word(slope).to_string();
  const int l_max = std::min(12, length / 4);
  json cx = json::array();
  for (std::size_t p : factor_complexity(stream, l_max)) cx.push_back(p);
  out.doc["complexity"] = std::move(cx);
  return out;
}

CommandOutput cmd_markov(const RunConfig& cfg, std::string_view slope_text) {
  const Slope slope = parse_slope(slope_text);
  const GroupWord w = primitive_word(slope);
  const ProjMatrix m = word_to_matrix(w);
  const auto [lo, hi] = markov_pair(slope);
  auto surd_json = [](const QuadSurd& s) {
    return json{{"surd", s.to_string()},
                {"p", s.p().str()}, {"q", s.q().str()}, {"d", s.d().str()}, {"r", s.r().str()},
                {"value", s.value<double>()},
                {"cf", periodic_string(surd_to_periodic_cf(s))}};
  };
  CommandOutput out;
  out.doc = header("markov", cfg);
  out.doc["slope"] = trim(slope_text);
  out.doc["word"] = w.to_string();
  out.doc["matrix"] = matrix_json(m);
  out.doc["trace"] = m.trace().str();
  out.doc["alpha_minus"] = surd_json(lo);
  out.doc["alpha_plus"] = surd_json(hi);
  out.doc["height"] = surd_height(hi).str();
  return out;
}

CommandOutput cmd_radial(const RunConfig& cfg, std::string_view alpha_text, double t_max, int steps) {
  const QuadSurd alpha = parse_surd(alpha_text);
  const auto samples = radial_scan(alpha, t_max, steps);
  CommandOutput out;
  out.doc = header("radial", cfg);
  out.doc["alpha"] = alpha.to_string();
  out.doc["t_max"] = t_max;
  json rows = json::array();
  for (const RadialSample& s : samples) {
    rows.push_back({{"t", s.t}, {"modulus", s.modulus}, {"argument", s.argument}, {"re", s.value.real()},
                    {"im", s.value.imag()}});
  }
  out.doc["samples"] = std::move(rows);
  const std::string t = trim(alpha_text);
  if (t.rfind("slope:", 0) == 0) {
    const double predicted = shexp_limit(parse_slope(std::string_view(t).substr(6)));
    const double miss = std::abs(std::remainder(samples.back().argument - predicted, 2 * M_PI));
    out.doc["predicted_argument"] = predicted;
    out.doc["final_argument_error"] = miss;
  }
  return out;
}

CommandOutput cmd_lambda(const RunConfig& cfg, std::string_view tau_text) {
  const Complex tau = parse_tau(tau_text);
  CommandOutput out;
  out.doc = header("lambda", cfg);
  out.doc["tau"] = complex_json(tau);
  out.doc["lambda"] = complex_json(lambda_modular(tau).value);
  if (tau.imag() >= 1) {
    const LambdaHexp h = hexp_via_lambda(tau);
    const Complex ref = hexp_eval(tau).value;
    const double diff = std::abs(h.f21_form.value - ref);
    out.doc["hexp_f21"] = complex_json(h.f21_form.value);
    out.doc["hexp_cf"] = complex_json(h.cf_form.value);
    out.doc["cf_residual"] = h.residual;
    out.doc["hexp_series"] = complex_json(ref);
    out.doc["difference"] = diff;
    out.doc["verified"] = diff < 1e-6;
    out.exit_code = diff < 1e-6 ? kExitOk : kExitVerification;
  }
  return out;
}

CommandOutput cmd_svg_lattice(const RunConfig& cfg, int qmax) {
  if (qmax < 1 || qmax > 200) throw Error(ErrorKind::BoundExceeded, "qmax must lie in [1, 200]");
  struct Point {
    std::string label;
    long long m, n;
    Complex z;
  };
  std::vector<Point> pts;
  pts.push_back({"1/0", 0, 0, cusp_value(1, 0).value});
  for (int c = 1; c <= qmax; ++c) {
    for (int a = 0; a <= c; ++a) {
      if (std::gcd(a, c) != 1) continue;
      const CuspValue v = cusp_value(a, c);
      pts.push_back({std::to_string(a) + "/" + std::to_string(c), v.m, v.n, v.value});
    }
  }
  // Every value must sit on the lattice point its (m, n) names.
  const Constants& k = constants();
  int off_lattice = 0;
  for (const Point& p : pts) {
    const double s = p.z.real() / (k.abs_omega0 * std::sqrt(3.0) / 2);  // m + n
    const double d = p.z.imag() / (k.abs_omega0 / 2);                   // n - m
    const double m = (s - d) / 2, n = (s + d) / 2;
    if (std::abs(m - std::round(m)) > 1e-9 || std::abs(n - std::round(n)) > 1e-9 ||
        std::llround(m) != p.m || std::llround(n) != p.n) {
      ++off_lattice;
    }
  }
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (const Point& p : pts) {
    x0 = std::min(x0, p.z.real());
    x1 = std::max(x1, p.z.real());
    y0 = std::min(y0, p.z.imag());
    y1 = std::max(y1, p.z.imag());
  }
  const double pad = k.abs_omega0;
  x0 -= pad, x1 += pad, y0 -= pad, y1 += pad;
  const double scale = 600.0 / std::max(x1 - x0, y1 - y0);
  auto px = [&](Complex z) { return std::pair<double, double>{(z.real() - x0) * scale, (y1 - z.imag()) * scale}; };
  const double width = (x1 - x0) * scale, height = (y1 - y0) * scale;

  std::ostringstream svg;
  svg << std::fixed << std::setprecision(2);
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
      << "<title>cusp values of hexp, denominators up to " << qmax << "</title>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<g id=\"lattice\" fill=\"#bbbbbb\">\n";
  const long long span = static_cast<long long>(std::ceil((x1 - x0 + y1 - y0) / k.abs_omega0)) + 2;
  for (long long m = -span; m <= span; ++m) {
    for (long long n = -span; n <= span; ++n) {
      const Complex z = lattice_point(m, n);
      if (z.real() < x0 || z.real() > x1 || z.imag() < y0 || z.imag() > y1) continue;
      const auto [x, y] = px(z);
      svg << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"1.5\"/>\n";
    }
  }
  svg << "</g>\n<g id=\"cusps\">\n";
  static const char* palette[6] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02"};
  std::set<std::pair<long long, long long>> distinct;
  for (const Point& p : pts) {
    const auto [x, y] = px(p.z);
    const int cls = static_cast<int>(((p.m - p.n) % 3 + 3) % 3 + 3 * (((p.m + p.n) % 2 + 2) % 2));
    svg << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3.5\" fill=\"" << palette[cls] << "\"><title>" << p.label
        << " -> (" << p.m << "," << p.n << ")</title></circle>\n";
    distinct.insert({p.m, p.n});
  }
  svg << "</g>\n</svg>\n";

  CommandOutput out;
  out.doc = header("svg", cfg);
  out.doc["qmax"] = qmax;
  out.doc["fractions"] = pts.size();
  out.doc["distinct_points"] = distinct.size();
  out.doc["off_lattice"] = off_lattice;
  out.doc["verified"] = off_lattice == 0;
  out.doc["svg"] = svg.str();
  if (!cfg.out_path.empty()) {
    std::ofstream f(cfg.out_path);
    if (!f) throw Error(ErrorKind::IoError, "cannot write " + cfg.out_path);
    f << svg.str();
    if (!f) throw Error(ErrorKind::IoError, "write failed for " + cfg.out_path);
    out.doc["path"] = cfg.out_path;
  }
  out.exit_code = off_lattice == 0 ? kExitOk : kExitVerification;
  return out;
}

namespace {

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

// The first array of objects in the document, if any.
const json* find_table(const json& doc, std::string* name) {
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.value().is_array() && !it.value().empty() && it.value().front().is_object()) {
      *name = it.key();
      return &it.value();
    }
  }
  return nullptr;
}

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_cell(const json& v) {
  std::string s = cell(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

}  // namespace

std::string render(const json& doc, OutputFormat format) {
  std::ostringstream os;
  std::string table_name;
  const json* table = find_table(doc, &table_name);
  switch (format) {
    case OutputFormat::Json:
      os << doc.dump(2) << "\n";
      break;
    case OutputFormat::Csv: {
      if (table) {
        std::vector<std::string> keys;
        for (auto it = table->front().begin(); it != table->front().end(); ++it) keys.push_back(it.key());
        for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
        os << "\n";
        for (const json& row : *table) {
          for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << (row.contains(keys[i]) ? csv_cell(row[keys[i]]) : "");
          os << "\n";
        }
      } else {
        std::vector<std::pair<std::string, std::string>> flat;
        flatten(doc, "", flat);
        os << "key,value\n";
        for (const auto& [k, v] : flat) os << csv_cell(k) << "," << csv_cell(v) << "\n";
      }
      break;
    }
    case OutputFormat::Text: {
      json scalars = doc;
      if (table) scalars.erase(table_name);
      std::vector<std::pair<std::string, std::string>> flat;
      flatten(scalars, "", flat);
      for (const auto& [k, v] : flat) os << k << ": " << v << "\n";
      if (table) {
        os << table_name << ":\n";
        for (const json& row : *table) {
          bool first = true;
          for (auto it = row.begin(); it != row.end(); ++it) {
            os << (first ? "  " : "  ") << it.key() << "=" << cell(it.value());
            first = false;
          }
          os << "\n";
        }
      }
      break;
    }
  }
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"hexlab: the hexponential map, its cusp values, Sturmian slopes and psi(n)"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string format = "json";
  app.add_option("--precision", cfg.precision_bits, "working precision in bits (53..4096)");
  app.add_option("--tol", cfg.tol, "target absolute tolerance");
  app.add_option("--table", cfg.table_path, "coefficient table dump to load")->envname("HEXLAB_TABLE");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--out", cfg.out_path, "output file (table dump for psi, SVG for svg)");

  long long psi_max = 100, psi_inject = 0;
  auto* psi = app.add_subcommand("psi", "newform coefficients a(m), cross-checked");
  psi->add_option("--max", psi_max, "largest m")->required();
  psi->add_option("--inject-mismatch", psi_inject, "corrupt a(m) to exercise the failure path")->group("");

  std::string frac;
  auto* cusp = app.add_subcommand("cusp", "cusp value of hexp at a/c");
  cusp->add_option("fraction", frac, "a/c")->required();

  std::string tau;
  bool equivariance = false;
  auto* eval = app.add_subcommand("eval", "hexp(tau)");
  eval->add_option("tau", tau, "x+yi")->required();
  eval->add_flag("--equivariance", equivariance, "re-check one seeded random A");

  std::string slope;
  int length = 64;
  auto* sturm = app.add_subcommand("sturmian", "cutting sequence of a slope");
  sturm->add_option("slope", slope, "x,y")->required();
  sturm->add_option("--length", length, "letters");

  auto* markov = app.add_subcommand("markov", "Markov pair of a rational slope");
  markov->add_option("slope", slope, "x,y")->required();

  std::string alpha;
  double t_max = 50;
  int steps = 10;
  auto* radial = app.add_subcommand("radial", "hexp along the geodesic from i to alpha");
  radial->add_option("alpha", alpha, "p,q,d,r or slope:x,y")->required();
  radial->add_option("--t-max", t_max, "hyperbolic length");
  radial->add_option("--steps", steps, "samples");

  auto* lambda = app.add_subcommand("lambda", "modular lambda and hexp through 2F1");
  lambda->add_option("tau", tau, "x+yi")->required();

  int qmax = 8;
  auto* svg = app.add_subcommand("svg", "SVG of cusp values over the lattice");
  svg->add_option("--qmax", qmax, "largest denominator (<= 200)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.format = format == "csv" ? OutputFormat::Csv : format == "text" ? OutputFormat::Text : OutputFormat::Json;

  try {
    cfg.validate();
    if (!cfg.table_path.empty()) install_shared_table(std::make_shared<const CoeffTable>(CoeffTable::load(cfg.table_path)));
    CommandOutput result;
    bool raw_svg = false;
    if (psi->parsed()) {
      result = cmd_psi(cfg, psi_max, psi_inject);
    } else if (cusp->parsed()) {
      result = cmd_cusp(cfg, frac);
    } else if (eval->parsed()) {
      result = cmd_eval(cfg, tau, equivariance);
    } else if (sturm->parsed()) {
      result = cmd_sturmian(cfg, slope, length);
    } else if (markov->parsed()) {
      result = cmd_markov(cfg, slope);
    } else if (radial->parsed()) {
      result = cmd_radial(cfg, alpha, t_max, steps);
    } else if (lambda->parsed()) {
      result = cmd_lambda(cfg, tau);
    } else if (svg->parsed()) {
      result = cmd_svg_lattice(cfg, qmax);
      raw_svg = cfg.out_path.empty();
      if (raw_svg) {
        out << result.doc["svg"].get<std::string>();
        return result.exit_code;
      }
      result.doc.erase("svg");
    }
    const std::string text = render(result.doc, cfg.format);
    const bool to_file = !cfg.out_path.empty() && !psi->parsed() && !svg->parsed();
    if (to_file) {
      std::ofstream f(cfg.out_path);
      if (!f) throw Error(ErrorKind::IoError, "cannot write " + cfg.out_path);
      f << text;
    } else {
      out << text;
    }
    return result.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::PrecisionExhausted:
      case ErrorKind::NonConvergence:
        return kExitPrecision;
      default:
        return kExitUsage;
    }
  }
}

}  // namespace hexlab::cli
