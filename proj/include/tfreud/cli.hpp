#ifndef TFREUD_CLI_HPP
#define TFREUD_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tfreud/verify.hpp"

namespace tfreud {

inline constexpr const char* kVersion = "0.3.0";

enum class ExitCode : int {
  ok = 0,
  verification_failed = 1,
  usage = 2,
  numerical = 3,
};

enum class OutputFormat { csv, json };

struct RunConfig {
  std::string command;
  double z = 1.0;
  int n_max = 14;
  /// 0 means the precision policy for n_max.
  int bits = 0;
  double epsilon = 1e-3;
  double t = 1.0;
  int points = 64;
  OutputFormat format = OutputFormat::csv;
  std::string out;
  bool table_check = false;
  bool all_zeros = false;
  std::optional<int> round;
  std::optional<FaultSpec> fault;
  std::optional<int> guard_bits;

  /// Throws DomainError naming the first invalid field.
  void validate() const;
  int effective_bits() const;
};

/// Smallest and largest zeros for n = 1..14 at z = 1, as printed (4 decimals).
extern const char* const kTableSmallest[14];
extern const char* const kTableLargest[14];

struct TableCheckRow {
  int n;
  std::string smallest, largest;  // computed, rounded to 4 decimals
  bool smallest_ok, largest_ok;
};

/// Zeros of P_1..P_min(14, n_max) at z = 1 compared with the embedded tables.
std::vector<TableCheckRow> table_check(int n_max, int bits);

/// Parses argv-style arguments (without the program name), runs the command
/// and returns the process exit code. Errors go to `err` as one line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tfreud

#endif  // TFREUD_CLI_HPP
