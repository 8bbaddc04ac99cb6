#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace zeck {

inline constexpr const char* kVersion = "0.1.0";

/// One experiment run: name, full parameter set, seed, tabular rows, summary
/// statistics, wall clock.  Re-running with identical parameters and seed
/// reproduces every field except wall_ms bit-exactly (all numeric formatting
/// goes through a fixed %.17g path).
class ExperimentReport {
 public:
  ExperimentReport(std::string experiment, std::uint64_t seed);

  void param(const std::string& key, const std::string& value);
  void param(const std::string& key, std::uint64_t value);
  void param(const std::string& key, double value);

  void columns(std::vector<std::string> names);
  void row(std::vector<std::string> cells);
  void row_values(const std::vector<double>& cells);

  void summary(const std::string& key, double value);
  void summary(const std::string& key, const std::string& value);

  void set_wall_ms(double ms) { wall_ms_ = ms; }

  /// Fixed-format float: shortest round-trip via %.17g.
  static std::string fmt(double v);

  void write_csv(std::ostream& os) const;
  void write_json(std::ostream& os) const;

  /// Serialization with timing stripped; equal strings mean an identical run.
  std::string stable_digest() const;

  const std::string& name() const { return name_; }

 private:
  std::string name_;
  std::uint64_t seed_;
  std::vector<std::pair<std::string, std::string>> params_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::pair<std::string, std::string>> summary_;
  double wall_ms_ = 0.0;
};

/// Plain key=value configuration: tolerances and resource budgets.  Lookup
/// order: explicit flag > config file > built-in default.  The file path
/// comes from the ZECKPRIME_CONFIG environment variable.
class Config {
 public:
  Config() = default;
  static Config from_env();
  static Config from_file(const std::string& path);

  double get(const std::string& key, double fallback) const;
  void set(const std::string& key, double value);
  bool has(const std::string& key) const;

 private:
  std::map<std::string, double> values_;
};

/// Built-in tolerance defaults (the acceptance thresholds).
namespace defaults {
inline constexpr double kCltSupTol = 0.01;         // local CLT sup error / pi(x)
inline constexpr double kCltModalTol = 0.10;       // relative error at the mode
inline constexpr double kResidueTol = 0.01;        // residue deviation at 1e8
inline constexpr double kDigitStatsTol = 2e-3;     // digit pattern vs chain
inline constexpr double kFourierMatchTol = 1e-9;   // matrix vs direct G~
inline constexpr double kMemoryBudgetMb = 4096.0;  // sieve memory guard
}  // namespace defaults

}  // namespace zeck
