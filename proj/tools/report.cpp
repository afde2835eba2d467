#include "report.hpp"

#include <ostream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "sostree/channel.hpp"
#include "sostree/errors.hpp"

namespace sostree::report {

namespace {

double parse_double(const std::string& field) {
  std::size_t used = 0;
  const double v = std::stod(field, &used);
  if (used != field.size()) throw std::invalid_argument("trailing characters in '" + field + "'");
  return v;
}

std::optional<double> try_root(const std::string& name, const std::function<double(double)>& f, double lo,
                               double hi) {
  try {
    return locate_threshold(name, name, f, lo, hi).value;
  } catch (const BracketError&) {
    return std::nullopt;
  }
}

nlohmann::json optional_json(const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(); }

}  // namespace

std::vector<ScanRow> scan_rows(const std::vector<PhaseRow>& table) {
  std::vector<ScanRow> rows;
  for (const auto& pr : table) {
    for (std::size_t i = 0; i < pr.laws.size(); ++i) {
      const auto& rep = pr.reports[i];
      rows.push_back({pr.theta, pr.laws[i].branch, pr.laws[i].x, pr.laws[i].y, pr.lambda1[i], pr.lambda2[i], rep.eta,
                      rep.kappa, rep.u, std::string(to_string(rep.verdict))});
    }
  }
  return rows;
}

std::string format_scan_row(const ScanRow& r) {
  return fmt::format("{:.17g},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{}", r.theta, r.branch, r.x,
                     r.y, r.lambda1, r.lambda2, r.eta, r.kappa, r.u, r.verdict);
}

ScanRow parse_scan_row(const std::string& line) {
  std::vector<std::string> f;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) f.push_back(item);
  if (f.size() != 10) throw std::invalid_argument("scan row needs 10 fields");
  ScanRow r;
  r.theta = parse_double(f[0]);
  r.branch = std::stoi(f[1]);
  r.x = parse_double(f[2]);
  r.y = parse_double(f[3]);
  r.lambda1 = parse_double(f[4]);
  r.lambda2 = parse_double(f[5]);
  r.eta = parse_double(f[6]);
  r.kappa = parse_double(f[7]);
  r.u = parse_double(f[8]);
  r.verdict = f[9];
  return r;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << kScanHeader << '\n';
  for (const auto& r : rows) out << format_scan_row(r) << '\n';
}

std::string format_tv_row(const TvEstimate& e) {
  return fmt::format("{},{:.17g},{:.17g},{},{},{:.17g},{}", e.depth, e.tv, e.std_error, e.n_samples, e.seed,
                     e.null_tv, kRngAlgorithm);
}

void write_tv_csv(std::ostream& out, const std::vector<TvEstimate>& rows) {
  out << kTvHeader << '\n';
  for (const auto& e : rows) out << format_tv_row(e) << '\n';
}

nlohmann::json catalog_json(const SolutionCatalog& catalog) {
  nlohmann::json laws = nlohmann::json::object();
  for (const auto& law : catalog.laws) {
    laws[std::to_string(law.branch)] = {{"x", law.x},
                                        {"y", law.y},
                                        {"residual", max_system_residual(catalog.theta, law)}};
  }
  return {{"theta", catalog.theta.value()},
          {"regime", std::string(to_string(catalog.regime))},
          {"count", catalog.laws.size()},
          {"laws", laws}};
}

nlohmann::json thresholds_json(const ThresholdSet& set) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto* t : set.all()) {
    out[t->name] = {{"value", t->value},
                    {"indicator", t->indicator},
                    {"residual", t->residual},
                    {"bracket", {t->bracket.first, t->bracket.second}}};
  }
  out["ordered"] = set.ordered();
  return out;
}

nlohmann::json gamma_json(const GammaGridReport& r, int branch, double theta) {
  return {{"theta", theta},
          {"branch", branch},
          {"grid", r.grid},
          {"bound", r.bound},
          {"max_abs_f", r.max_abs_f},
          {"f_argmax", {r.f_argmax_t, r.f_argmax_u}},
          {"max_abs_g", r.max_abs_g},
          {"g_argmax", {r.g_argmax_t, r.g_argmax_u}},
          {"reference_point", {r.reference_t, r.reference_u}},
          {"pass", r.pass}};
}

nlohmann::json general_json(const FixedPointResult& result, const TiLaw& start, double theta,
                            const FixedPointOptions& options) {
  return {{"theta", theta},
          {"m", start.z.size()},
          {"k", start.k},
          {"damping", options.damping},
          {"tol", options.tol},
          {"max_iter", options.max_iter},
          {"z0", start.z},
          {"z", result.law.z},
          {"converged", result.converged},
          {"iterations", result.iterations},
          {"last_step", result.last_step},
          {"residual", result.residual}};
}

Audit run_audit(const ThresholdSet& set) {
  Audit a;
  for (const double t : {1.5, 2.0, 2.5, 2.6, 2.65, 2.7, 3.0, 3.5, 4.0}) {
    a.thetas.push_back(t);
    a.u1_derived.push_back(msw_indicator(Coupling{t}, 1));
    a.u1_printed.push_back(msw_indicator_u1_printed(Coupling{t}));
  }
  a.theta_bar_derived = set.theta_bar.value;
  a.theta_bar_printed = try_root(
      "u_1 printed", [](double t) { return msw_indicator_u1_printed(Coupling{t}); }, 1.0, 4.0);
  const double pad = 10.0 * kCriticalThetaTol;
  a.theta_double_star_general = try_root(
      "u_5 general", [](double t) { return msw_indicator_general(Coupling{t}, 5); }, set.theta_star.value,
      set.theta_c_prime.value - pad);
  return a;
}

nlohmann::json audit_json(const Audit& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.thetas.size(); ++i) {
    rows.push_back({{"theta", a.thetas[i]}, {"u1_derived", a.u1_derived[i]}, {"u1_printed", a.u1_printed[i]}});
  }
  return {{"u1", rows},
          {"theta_bar_derived", optional_json(a.theta_bar_derived)},
          {"theta_bar_printed", optional_json(a.theta_bar_printed)},
          {"theta_double_star_general_kappa", optional_json(a.theta_double_star_general)}};
}

}  // namespace sostree::report
