#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hsqm::cli {

enum class Format { Csv, Json };

struct RunConfig {
  std::string subcommand;
  int N = 24;
  double mass = 1.0;
  double omega0 = 1.0;
  double omega_c = 2.0;
  double theta = 0.1;
  double hbar = 1.0;
  double beta = 1.0;
  double omega = 1.0;
  std::optional<int> radial_nodes;
  std::optional<int> angular_nodes;
  bool allow_small = false;
  Format format = Format::Csv;
  std::string out;

  /// Throws ConfigError for N < 4 or undersized quadrature.
  void validate() const;
};

struct ConfigError {
  std::string message;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kContractViolation = 1;
inline constexpr int kInvalidConfig = 2;

const std::vector<std::string>& subcommands();

/// Runs one validated configuration, writing the table to `out` (or to
/// config.out when set). Invalid parameter regimes print a one-line JSON
/// error to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Never throws.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hsqm::cli
