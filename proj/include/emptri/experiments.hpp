// Generation, verification, analysis and scaling runs with flat text reports.
// Shared by the command-line tool, the acceptance harness and the Python module.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "emptri/point_set.hpp"
#include "emptri/triangles.hpp"
#include "emptri/validation.hpp"

namespace emptri {

inline constexpr const char* kToolVersion = "0.1.0";

/// Ordered `key: value` lines.
class Report {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }
  void add(const std::string& key, std::uint64_t value) { add(key, std::to_string(value)); }
  void add(const std::string& key, int value) { add(key, std::to_string(value)); }
  void add(const std::string& key, double value);
  void add_check(const std::string& name, const CheckResult& r);
  void add_validation(const std::string& prefix, const ValidationReport& r);
  void append(const Report& other);

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  /// First value stored under `key`, if any.
  std::optional<std::string> get(const std::string& key) const;
  std::string text() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Fixed-precision formatting used in every report and table.
std::string format_double(double v);
std::string format_witness(const std::vector<std::size_t>& w);

struct GenerateConfig {
  Family family = Family::Horton;
  int k = 0;            ///< Horton level, or points per diamond
  int g = 0;            ///< squared Horton side
  std::size_t m = 0;    ///< number of diamonds
  std::uint64_t n = 0;  ///< with alpha: diamond sizes from the (n, alpha) rule
  double alpha = -1;
  /// Validation used while shrinking eps; by default Full up to 64 points.
  std::optional<ValidationMode> mode;
  std::uint64_t seed = 1;
};

struct Generated {
  PointSet set;
  Report report;
};

/// Throws std::invalid_argument on bad parameters.
Generated run_generate(const GenerateConfig& config);

/// Default validation for a squared Horton side: Full up to g = 8, else
/// one million sampled triples.
ValidationMode default_mode(int g, std::uint64_t seed);

struct VerifyConfig {
  /// horton, horton-strict, squared-horton, diamond, visible-edges, lattice-heights,
  /// totient-sum, general-position, pullback
  std::string check;
  int k = 0;            ///< visible-edges without a file
  int g = 0;            ///< lattice-heights grid side
  std::uint64_t n = 0;  ///< totient-sum bound
  std::optional<ValidationMode> mode;
  std::uint64_t seed = 1;
  bool strip_unions = true;  ///< squared-horton: also every parallel line pair (g <= 8)
};

struct Verified {
  bool ok = false;
  Report report;
};

/// `set` may be null for the checks that build their own input.
Verified run_verify(const VerifyConfig& config, const PointSet* set);

/// Check names accepted by run_verify.
const std::vector<std::string>& verify_checks();
/// Whether the check reads a point-set file.
bool verify_needs_input(const std::string& check);

struct AnalyzeConfig {
  unsigned strategies = kCentroids | kGridCells | kLocalSearch;
  std::uint64_t seed = 1;
  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t max_centroids = 65536;
  bool exact_when_small = true;  ///< also run the exact maximum when tau <= 2000
  bool timings = false;
  std::vector<ExactPoint> queries;
};

struct Analysis {
  Report report;
  std::uint64_t n = 0;
  std::uint64_t tau = 0;
  bool truncated = false;
  StabEstimate best;
  std::optional<StabEstimate> exact;
  std::uint64_t max_incidence = 0;
  std::vector<std::uint64_t> query_counts;
};

Analysis run_analyze(const PointSet& set, const AnalyzeConfig& config);

struct ScalingRow {
  std::string family;
  std::uint64_t n = 0, m = 0, k = 0, g = 0;
  double alpha_realized = 0;
  std::uint64_t tau = 0;
  bool truncated = false;
  std::uint64_t max_stab = 0;
  bool max_stab_sampled = false;
  std::uint64_t max_incidence = 0;
  double tau_norm = 0;        ///< tau / (m^2 k^3)
  double stab_norm = 0;       ///< max_stab / (m k^3)
  double incidence_norm = 0;  ///< max_incidence / (n log2 n)
  double stab_nlogn = 0;      ///< max_stab / (n log2 n)
  std::optional<double> tau_ratio, stab_ratio;  ///< against the previous row
  double t_generate = 0, t_enumerate = 0, t_stab = 0;
};

/// A cell is a generation config; Horton and squared Horton sets count as
/// m = n diamonds of one point (k = 1).
struct ScalingConfig {
  std::vector<GenerateConfig> cells;
  AnalyzeConfig analyze;
};

struct ScalingTable {
  std::vector<ScalingRow> rows;
  std::string csv;  ///< header plus one line per row
};

ScalingTable run_scaling(const ScalingConfig& config);
/// Column order of the scaling CSV.
const std::vector<std::string>& scaling_columns();

}  // namespace emptri
