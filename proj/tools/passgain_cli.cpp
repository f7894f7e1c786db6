// passgain: regenerate the array-gain sweeps as CSV.
//
//   passgain <subcommand> [--config FILE] [--out FILE] [--seed N] [--trials N]
//                         [--case 1|2|both] [sweep flags]
//
// Exit codes: 0 success, 2 configuration or usage error, 3 numeric failure.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "passgain/config.hpp"
#include "passgain/error.hpp"
#include "passgain/experiments.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr double kCaseTwoLoss = 0.08;  // dB/m

struct Options {
  std::string config;
  std::string out = "-";
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::string case_sel = "both";
  std::size_t n_max = 10000;
  std::vector<double> delta_p;
  std::vector<std::size_t> n_list;
  std::vector<double> n_eff;
  double grid_step = 0.0;
  double x_max = 10.0;
  bool exhaustive = false;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config, "Scenario key-value file")->check(CLI::ExistingFile);
  sub->add_option("--out", o.out, "Output CSV path, '-' for stdout");
  sub->add_option("--seed", o.seed, "RNG seed");
  sub->add_option("--trials", o.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  sub->add_option("--case", o.case_sel, "Waveguide loss case: 1 (lossless), 2 (0.08 dB/m), both")
      ->check(CLI::IsMember({"1", "2", "both"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pinching-antenna array gain sweeps"};
  app.require_subcommand(1);
  Options o;

  struct Entry {
    const char* name;
    passgain::SweepKind kind;
    const char* help;
  };
  const std::vector<Entry> entries = {
      {"fub-curve", passgain::SweepKind::fub_curve, "Tabulate f_ub(x) and its maximiser"},
      {"fmc-curve", passgain::SweepKind::fmc_curve, "Tabulate f_mc(delta/lambda) per n_eff"},
      {"gain-vs-n", passgain::SweepKind::gain_vs_n, "Gain against antenna count"},
      {"maxgain-vs-spacing", passgain::SweepKind::maxgain_vs_spacing,
       "Monte Carlo best gain against minimum spacing"},
      {"gain-vs-delta-mc", passgain::SweepKind::gain_vs_delta_mc,
       "Gain against spacing with and without mutual coupling"},
  };
  std::vector<std::pair<CLI::App*, passgain::SweepKind>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub, o);
    sub->add_option("--grid-step", o.grid_step, "Grid step of the swept variable");
    switch (e.kind) {
      case passgain::SweepKind::fub_curve:
        sub->add_option("--x-max", o.x_max, "Upper end of the x range");
        break;
      case passgain::SweepKind::fmc_curve:
        sub->add_option("--n-eff", o.n_eff, "Comma-separated n_eff values")->delimiter(',');
        break;
      case passgain::SweepKind::gain_vs_n:
      case passgain::SweepKind::maxgain_vs_spacing:
        sub->add_option("--n-max", o.n_max, "Largest antenna count");
        sub->add_option("--delta-p", o.delta_p, "Comma-separated minimum spacings (wavelengths)")
            ->delimiter(',');
        sub->add_flag("--exhaustive", o.exhaustive, "Visit every even N in the search");
        break;
      case passgain::SweepKind::gain_vs_delta_mc:
        sub->add_option("--n-list", o.n_list, "Comma-separated antenna counts")->delimiter(',');
        break;
    }
    subs.emplace_back(sub, e.kind);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    passgain::SweepSpec spec;
    for (const auto& [sub, kind] : subs) {
      if (sub->parsed()) spec.kind = kind;
    }
    if (spec.kind == passgain::SweepKind::maxgain_vs_spacing) spec.delta_p = {0.5, 1.0, 1.5, 2.0};
    if (!o.delta_p.empty()) spec.delta_p = o.delta_p;
    if (!o.n_list.empty()) spec.n_list = o.n_list;
    if (!o.n_eff.empty()) spec.n_eff = o.n_eff;
    if (o.grid_step != 0.0) spec.grid_step = o.grid_step;
    spec.n_max = o.n_max;
    spec.x_max = o.x_max;
    spec.seed = o.seed;
    spec.trials = o.trials;
    spec.exhaustive = o.exhaustive;
    if (o.case_sel == "1") {
      spec.cases = {0.0};
    } else if (o.case_sel == "2") {
      spec.cases = {kCaseTwoLoss};
    } else {
      spec.cases = {0.0, kCaseTwoLoss};
    }

    const passgain::SystemConfig cfg =
        o.config.empty() ? passgain::SystemConfig{} : passgain::load_config(o.config);
    const auto points = passgain::run_sweep(spec, cfg);
    const std::string comment = "seed=" + std::to_string(spec.seed);
    if (o.out == "-") {
      std::cout << passgain::format_csv(points, comment);
    } else {
      passgain::write_csv(points, o.out, comment);
    }
  } catch (const passgain::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
