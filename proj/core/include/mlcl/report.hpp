#ifndef MLCL_REPORT_HPP
#define MLCL_REPORT_HPP

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "mlcl/montecarlo.hpp"
#include "mlcl/orbit.hpp"
#include "mlcl/sums.hpp"
#include "mlcl/trajectory.hpp"

namespace mlcl {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

/// All numeric CSV/JSON cells are deterministic decimals rendered from exact
/// rationals (round-half-even at `sig` significant digits).
struct ReportOptions {
  int sig_digits = 15;
};

void write_trajectory_csv(std::ostream& out, const ScanResult& scan, const ReportOptions& = {});
void write_sum_series_csv(std::ostream& out, const SumSeries& series, const ReportOptions& = {});
void write_mc_csv(std::ostream& out, const McReport& report);
void write_dhyp_csv(std::ostream& out, const DhypReport& report, const ReportOptions& = {});
void write_phi_sweep_csv(std::ostream& out, const PhiSweepResult& sweep, const ReportOptions& = {});

// Single-document JSON outputs (schema_version included).
std::string construction_json(const ConstructionResult& result, const ReportOptions& = {});
std::string bwgap_json(const BwGapResult& result, const ReportOptions& = {});
std::string mc_summary_json(const McReport& report, const ReportOptions& = {});
std::string sum_series_json(const SumSeries& series, const ReportOptions& = {});

struct OutputDigest {
  std::string path;    // as recorded (relative to the manifest's directory)
  std::string sha256;
  std::uint64_t bytes = 0;
};

/// Run record: resolved config plus digests of every output file. Re-running
/// the same manifest must reproduce the digests byte-exactly (timestamps are
/// metadata, excluded from the comparison).
struct RunManifest {
  std::string schema_version = kSchemaVersion;
  std::string tool_version = kToolVersion;
  std::string subcommand;
  std::map<std::string, std::string> config;
  std::uint64_t seed = 0;
  std::string started_at;
  std::string finished_at;
  std::vector<OutputDigest> outputs;

  std::string to_json_string() const;
  static RunManifest from_json_string(const std::string& text);
  void write(const std::string& path) const;
  static RunManifest load(const std::string& path);
};

std::string iso8601_now();

}  // namespace mlcl

#endif  // MLCL_REPORT_HPP
