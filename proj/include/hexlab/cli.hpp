#pragma once

// Command-line front end. Every command builds a JSON document; render()
// turns it into json, csv or text.

#include "hexlab/contfrac.hpp"
#include "hexlab/hexpnum.hpp"
#include "hexlab/sturmian.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

namespace hexlab::cli {

enum class OutputFormat { Json, Csv, Text };

struct RunConfig {
  int precision_bits = 53;  // 53..4096
  double tol = 1e-12;
  std::string table_path;   // defaults to $HEXLAB_TABLE
  OutputFormat format = OutputFormat::Json;
  std::uint64_t seed = 1;
  std::string out_path;

  /// BadParameter for bits outside [53, 4096] or tol below 2^(1 - bits).
  void validate() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitPrecision = 3;

inline constexpr const char* kSchemaVersion = "1";

/// Output of one command: the document plus the exit code it implies.
struct CommandOutput {
  nlohmann::json doc;
  int exit_code = kExitOk;
};

/// "x+yi" with decimal or rational components: "2i", "i", "1/3+2i", "-0.5+0.1i".
Complex parse_tau(std::string_view text);

/// "x,y": integer or decimal components give a rational slope; a component
/// "sqrt(d)" gives a real direction, e.g. "1,sqrt(2)".
Slope parse_slope(std::string_view text);

/// "p,q,d,r" for (p + q sqrt d) / r, or "slope:x,y" for the InSh endpoint of a rational slope.
QuadSurd parse_surd(std::string_view text);

/// "a/c" with integers.
std::pair<Integer, Integer> parse_fraction(std::string_view text);

/// Table dump a(1..max) cross-checked against the multiplicative formula and,
/// for psi(n) with n <= 4000, the four-squares sum. inject_at > 0 corrupts
/// a(inject_at) before the check (harness for the failure path).
CommandOutput cmd_psi(const RunConfig& cfg, long long max, long long inject_at = 0);

CommandOutput cmd_cusp(const RunConfig& cfg, std::string_view fraction);

/// check_equivariance re-evaluates at A tau for one seeded random A.
CommandOutput cmd_eval(const RunConfig& cfg, std::string_view tau, bool check_equivariance);

CommandOutput cmd_sturmian(const RunConfig& cfg, std::string_view slope, int length);
CommandOutput cmd_markov(const RunConfig& cfg, std::string_view slope);
CommandOutput cmd_radial(const RunConfig& cfg, std::string_view alpha, double t_max, int steps);
CommandOutput cmd_lambda(const RunConfig& cfg, std::string_view tau);

/// Cusp values of Farey fractions in [0, 1] with denominator <= qmax, plus
/// 1/0, drawn over the lattice omega0 Z[j]. Returns the SVG text; writes it
/// to cfg.out_path when set.
CommandOutput cmd_svg_lattice(const RunConfig& cfg, int qmax);

std::string render(const nlohmann::json& doc, OutputFormat format);

/// Full CLI: parses argv, runs one subcommand, prints the rendered document.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hexlab::cli
