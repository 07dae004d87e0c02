#ifndef TFREUD_VERIFY_HPP
#define TFREUD_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "tfreud/real.hpp"

namespace tfreud {

/// One row of the verification report. For residual checks `max_residual`
/// is the worst |residual| / scale and `tolerance` the bound it must meet.
struct CheckRecord {
  std::string name;
  int n_lo = 0;
  int n_hi = 0;
  std::vector<double> z_values;
  Real max_residual;
  Real tolerance;
  bool pass = false;
};

struct VerificationReport {
  std::vector<CheckRecord> records;

  bool pass() const;
  const CheckRecord* find(const std::string& name) const;
  std::vector<std::string> failures() const;
};

/// Additive perturbation of one recurrence coefficient, "a:3:1e-6".
struct FaultSpec {
  char which;
  int index;
  double delta;

  /// Throws DomainError on a malformed spec.
  static FaultSpec parse(const std::string& spec);
};

struct SuiteConfig {
  std::vector<double> z_values{1.0};
  int n_max = 14;
  /// 0 selects the precision policy for the table size actually built.
  int bits = 0;
  std::optional<int> guard_bits;
  double epsilon = 1e-3;
  double t = 1.0;
  std::optional<FaultSpec> fault;
  /// Also rerun the core checks at doubled precision.
  bool self_consistency = true;
};

/// The full residual suite. Throws PrecisionExhausted if a table cannot be
/// built at the requested precision.
VerificationReport run_verification(const SuiteConfig& cfg);

/// Subsets of the suite, used by run_verification and the acceptance tests.
void check_moments(const SuiteConfig& cfg, VerificationReport& rep);
void check_laguerre_freud(const SuiteConfig& cfg, VerificationReport& rep);
void check_operators(const SuiteConfig& cfg, VerificationReport& rep);
void check_scaling(const SuiteConfig& cfg, VerificationReport& rep);
void check_zeros(const SuiteConfig& cfg, VerificationReport& rep);
void check_density(const SuiteConfig& cfg, VerificationReport& rep);
void check_self_consistency(const SuiteConfig& cfg, VerificationReport& rep);

/// Working precision for a table of size n_max under cfg.
int suite_bits(const SuiteConfig& cfg, int n_max);

}  // namespace tfreud

#endif  // TFREUD_VERIFY_HPP
