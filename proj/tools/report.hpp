#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sostree/boundary_laws.hpp"
#include "sostree/broadcast.hpp"
#include "sostree/extremality.hpp"
#include "sostree/recursion.hpp"
#include "sostree/thresholds.hpp"

namespace sostree::report {

inline constexpr const char* kScanHeader = "theta,branch,x,y,lambda1,lambda2,eta,kappa,u,verdict";
inline constexpr const char* kTvHeader = "depth,tv,stderr,n_samples,seed,null_tv,rng";

struct ScanRow {
  double theta = 0.0;
  int branch = 1;
  double x = 0.0;
  double y = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double eta = 0.0;
  double kappa = 0.0;
  double u = 0.0;
  std::string verdict;

  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

[[nodiscard]] std::vector<ScanRow> scan_rows(const std::vector<PhaseRow>& table);
[[nodiscard]] std::string format_scan_row(const ScanRow& row);
/// Inverse of format_scan_row. Throws std::invalid_argument on malformed input.
[[nodiscard]] ScanRow parse_scan_row(const std::string& line);
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

[[nodiscard]] std::string format_tv_row(const TvEstimate& est);
void write_tv_csv(std::ostream& out, const std::vector<TvEstimate>& rows);

[[nodiscard]] nlohmann::json catalog_json(const SolutionCatalog& catalog);
[[nodiscard]] nlohmann::json thresholds_json(const ThresholdSet& set);
[[nodiscard]] nlohmann::json gamma_json(const GammaGridReport& report, int branch, double theta);

/// Outcome of a damped fixed-point iteration of the m, k map.
[[nodiscard]] nlohmann::json general_json(const FixedPointResult& result, const TiLaw& start, double theta,
                                          const FixedPointOptions& options);

/// Branch-1 indicator with both numerators on a theta grid, their roots on
/// (1, 4) if any, and theta** recomputed with the row-distance kappa.
struct Audit {
  std::vector<double> thetas;
  std::vector<double> u1_derived;
  std::vector<double> u1_printed;
  std::optional<double> theta_bar_derived;
  std::optional<double> theta_bar_printed;
  std::optional<double> theta_double_star_general;
};

[[nodiscard]] Audit run_audit(const ThresholdSet& set);
[[nodiscard]] nlohmann::json audit_json(const Audit& audit);

}  // namespace sostree::report
