#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "report.hpp"
#include "sostree/errors.hpp"

namespace {

enum ExitCode : int { kOk = 0, kIo = 1, kArgument = 2, kDomain = 3, kNumeric = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Opens `path` for writing, or returns stdout for "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path == "-") return;
    file_.open(path, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!file_) throw IoError("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  void close(const std::string& path) {
    if (!file_.is_open()) return;
    file_.close();
    if (!file_) throw IoError("failed writing '" + path + "'");
  }

 private:
  std::ofstream file_;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace sostree;

  CLI::App app{"Translation-invariant Gibbs measures of the three-state SOS model on the binary tree"};
  app.require_subcommand(1);

  double theta = 1.0;
  auto* solve = app.add_subcommand("solve", "Print every boundary law at theta as JSON");
  solve->add_option("--theta", theta, "Coupling exp(J beta)")->required();

  double theta_min = 0.05;
  double theta_max = 0.29;
  int steps = 100;
  std::string output = "-";
  auto* scan = app.add_subcommand("scan", "Per-branch table on a theta grid (CSV)");
  scan->add_option("--theta-min", theta_min)->required();
  scan->add_option("--theta-max", theta_max)->required();
  scan->add_option("--steps", steps)->required()->check(CLI::PositiveNumber);
  scan->add_option("--output,-o", output, "Output path, '-' for stdout");

  bool as_json = false;
  bool audit = false;
  auto* thresholds = app.add_subcommand("thresholds", "The six critical couplings");
  thresholds->add_flag("--json", as_json, "Emit JSON");
  thresholds->add_flag("--audit", audit, "Show both branch-1 indicator numerators and theta** with row-distance kappa");

  int branch = 1;
  int depth = 8;
  int samples = 10000;
  std::uint64_t seed = 1;
  auto* simulate = app.add_subcommand("simulate", "Census total variation by depth (CSV)");
  simulate->add_option("--theta", theta)->required();
  simulate->add_option("--branch", branch)->required()->check(CLI::Range(1, 7));
  simulate->add_option("--depth", depth)->check(CLI::Range(1, kMaxBroadcastDepth));
  simulate->add_option("--samples", samples)->check(CLI::Range(kMinSamples, 100000000));
  simulate->add_option("--seed", seed);
  simulate->add_option("--output,-o", output, "Output path, '-' for stdout");

  int grid = 200;
  auto* gamma = app.add_subcommand("verify-gamma", "Grid check of the disagreement bound (JSON)");
  gamma->add_option("--theta", theta)->required();
  gamma->add_option("--branch", branch)->required()->check(CLI::Range(1, 7));
  gamma->add_option("--grid", grid)->check(CLI::Range(1, 5000));

  int m = 2;
  int k = 2;
  std::vector<double> z0;
  FixedPointOptions fp;
  auto* general = app.add_subcommand("general", "Damped fixed-point iteration of the m, k recursion (JSON)");
  general->add_option("--theta", theta)->required();
  general->add_option("--m", m)->check(CLI::Range(1, 64));
  general->add_option("--k", k)->check(CLI::Range(1, 64));
  general->add_option("--z", z0, "Starting law z_0..z_{m-1}; all ones by default")->expected(1, 64);
  general->add_option("--damping", fp.damping);
  general->add_option("--tol", fp.tol);
  general->add_option("--max-iter", fp.max_iter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kArgument;
  }

  try {
    if (solve->parsed()) {
      std::cout << report::catalog_json(enumerate_tisgms(Coupling{theta})).dump(2) << '\n';
    } else if (scan->parsed()) {
      const auto rows = report::scan_rows(phase_diagram(theta_min, theta_max, steps));
      Output out(output);
      report::write_scan_csv(out.stream(), rows);
      out.close(output);
    } else if (thresholds->parsed()) {
      const ThresholdSet set = find_all_thresholds();
      if (as_json) {
        auto j = report::thresholds_json(set);
        if (audit) j["audit"] = report::audit_json(report::run_audit(set));
        std::cout << j.dump(2) << '\n';
      } else {
        for (const auto* t : set.all()) {
          std::cout << fmt::format("{:<18} {:.17g}  residual {:.3g}  [{:.17g}, {:.17g}]  ({})\n", t->name, t->value,
                                   t->residual, t->bracket.first, t->bracket.second, t->indicator);
        }
        if (audit) {
          const auto a = report::run_audit(set);
          std::cout << fmt::format("\n{:>6} {:>24} {:>24}\n", "theta", "u1 (1-theta^2)^2", "u1 (1-theta)^2");
          for (std::size_t i = 0; i < a.thetas.size(); ++i) {
            std::cout << fmt::format("{:>6} {:>24.17g} {:>24.17g}\n", a.thetas[i], a.u1_derived[i], a.u1_printed[i]);
          }
          const auto show = [](const std::optional<double>& v) {
            return v ? fmt::format("{:.17g}", *v) : std::string("none");
          };
          std::cout << fmt::format("root on (1,4): (1-theta^2)^2 {}  (1-theta)^2 {}\n", show(a.theta_bar_derived),
                                   show(a.theta_bar_printed));
          std::cout << fmt::format("theta** with row-distance kappa: {}\n", show(a.theta_double_star_general));
        }
      }
    } else if (simulate->parsed()) {
      const auto curve = decay_curve(Coupling{theta}, branch, depth, samples, seed);
      Output out(output);
      report::write_tv_csv(out.stream(), curve);
      out.close(output);
    } else if (general->parsed()) {
      if (z0.empty()) z0.assign(static_cast<std::size_t>(m), 1.0);
      if (static_cast<int>(z0.size()) != m) throw DomainError("--z must have m components");
      const TiLaw start{z0, k};
      const auto result = iterate_to_fixed_point(start, Coupling{theta}, fp);
      std::cout << report::general_json(result, start, theta, fp).dump(2) << '\n';
    } else if (gamma->parsed()) {
      const Coupling c{theta};
      const auto law = enumerate_tisgms(c).at(branch);
      std::cout << report::gamma_json(verify_gamma_bound(c, law, grid), branch, theta).dump(2) << '\n';
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumeric;
  }
  return kOk;
}
