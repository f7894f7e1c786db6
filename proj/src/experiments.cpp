#include "passgain/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "passgain/channel.hpp"
#include "passgain/coupling.hpp"
#include "passgain/error.hpp"
#include "passgain/gain.hpp"
#include "passgain/numerics.hpp"
#include "passgain/refine.hpp"

namespace passgain {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string case_label(double alpha) { return alpha == 0.0 ? "lossless" : "loss=" + num(alpha); }

// Inclusive grid lo, lo + step, ... up to hi (last point snapped to hi).
std::vector<double> linear_grid(double lo, double hi, double step) {
  std::vector<double> out;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  for (std::size_t i = 0; i <= count; ++i) out.push_back(lo + step * static_cast<double>(i));
  if (hi - out.back() > 1e-12 * std::max(1.0, std::abs(hi))) out.push_back(hi);
  return out;
}

void mark_max(Curve& out, const std::string& series, std::size_t begin) {
  const auto first = out.begin() + static_cast<std::ptrdiff_t>(begin);
  if (first == out.end()) return;
  const auto best = std::max_element(first, out.end(), [](const auto& a, const auto& b) {
    return a.y < b.y;
  });
  out.push_back({series + ":max", best->x, best->y, best->std_error});
}

template <typename F>
void add_series(Curve& out, const std::string& series, std::span<const double> xs, F&& f,
                bool with_max) {
  const std::size_t begin = out.size();
  for (const double x : xs) out.push_back({series, x, f(x), 0.0});
  if (with_max) mark_max(out, series, begin);
}

double step_or(const SweepSpec& spec, double fallback) {
  return spec.grid_step.value_or(fallback);
}

struct Stats {
  double mean = 0.0;
  double std_error = 0.0;
};

Stats summarize(std::span<const double> v) {
  Stats s;
  if (v.empty()) return s;
  for (const double x : v) s.mean += x;
  s.mean /= static_cast<double>(v.size());
  if (v.size() > 1) {
    double ss = 0.0;
    for (const double x : v) ss += (x - s.mean) * (x - s.mean);
    const double var = ss / static_cast<double>(v.size() - 1);
    s.std_error = std::sqrt(var / static_cast<double>(v.size()));
  }
  return s;
}

// Uniform draw in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

void SweepSpec::validate() const {
  if (grid_step && !(*grid_step > 0.0)) throw ConfigError("grid step must be positive");
  if (trials < 1) throw ConfigError("trials must be >= 1");
  switch (kind) {
    case SweepKind::fub_curve:
      if (!(x_max > 0.0)) throw ConfigError("x range must be non-empty");
      break;
    case SweepKind::fmc_curve:
      if (n_eff.empty()) throw ConfigError("n_eff list is empty");
      for (const double n : n_eff)
        if (!(n >= 1.0)) throw ConfigError("n_eff values must be >= 1");
      break;
    case SweepKind::gain_vs_n:
    case SweepKind::maxgain_vs_spacing:
      if (delta_p.empty()) throw ConfigError("delta_p list is empty");
      for (const double d : delta_p)
        if (!(d > 0.0)) throw ConfigError("delta_p values must be positive");
      if (n_max < 2) throw ConfigError("n_max must be >= 2");
      if (cases.empty()) throw ConfigError("no loss cases selected");
      break;
    case SweepKind::gain_vs_delta_mc:
      if (n_list.empty()) throw ConfigError("N list is empty");
      for (const std::size_t n : n_list)
        if (n < 2 || n % 2 != 0) throw ConfigError("N list entries must be even and >= 2");
      break;
  }
}

Curve run_fub_curve(const SweepSpec& spec) {
  const double step = step_or(spec, 0.01);
  auto xs = linear_grid(step, spec.x_max, step);
  Curve out;
  add_series(out, "f_ub", xs, f_ub, false);
  const XStar star = find_xstar();
  out.push_back({"f_ub:max", star.x, star.f, 0.0});
  return out;
}

Curve run_fmc_curve(const SweepSpec& spec) {
  const auto xs = linear_grid(0.0, 1.0, step_or(spec, 1e-3));
  Curve out;
  for (const double n_eff : spec.n_eff) {
    add_series(out, "f_mc:n_eff=" + num(n_eff), xs, [&](double x) { return f_mc(x, n_eff); },
               true);
  }
  return out;
}

Curve run_gain_vs_n(const SweepSpec& spec, const SystemConfig& cfg) {
  const auto stride = static_cast<std::size_t>(
      std::max(2.0, 2.0 * std::round(step_or(spec, 2.0) / 2.0)));
  const std::size_t pairs = spec.n_max / 2;

  Curve out;
  for (const double dp : spec.delta_p) {
    SystemConfig c = cfg;
    c.delta_p = dp;
    const DerivedConstants k = derive_constants(c);
    const auto refined_r = refine_side(pairs, Side::right, c, k).offsets;
    const auto refined_l = refine_side(pairs, Side::left, c, k).offsets;
    const auto uniform = uniform_offsets(2 * pairs, c, k);

    for (const double alpha : spec.cases) {
      c.alpha_wg = alpha;
      const std::string tag = ":dp=" + num(dp) + ":" + case_label(alpha);
      auto emit = [&](const std::string& name, const std::vector<double>& profile) {
        const std::size_t begin = out.size();
        for (std::size_t n = 2; n <= 2 * profile.size(); n += stride) {
          out.push_back({name + tag, static_cast<double>(n), profile[n / 2 - 1], 0.0});
        }
        mark_max(out, name + tag, begin);
      };
      emit("bound", nested_bound_profile(uniform, uniform, c, k));
      emit("refined", nested_gain_profile(refined_r, refined_l, c, k));
      emit("uniform", nested_gain_profile(uniform, uniform, c, k));
    }
  }

  const DerivedConstants k = derive_constants(cfg);
  const double fixed = k.eta / (cfg.x_u * cfg.x_u + cfg.d * cfg.d);
  for (std::size_t n = 2; n <= 2 * pairs; n += stride) {
    out.push_back({"fixed", static_cast<double>(n), fixed, 0.0});
  }
  return out;
}

Curve run_maxgain_vs_spacing(const SweepSpec& spec, const SystemConfig& cfg) {
  std::mt19937_64 rng(spec.seed);
  std::vector<double> users(spec.trials);
  for (double& u : users) u = -15.0 + 30.0 * unit_draw(rng);

  const double feed = cfg.x_0.value_or(-30.0);
  const std::size_t pairs = spec.n_max / 2;
  const DerivedConstants base = derive_constants(cfg);
  const double fluid_edge = 500.0 * base.lambda;

  Curve out;
  for (const double dp : spec.delta_p) {
    SystemConfig c = cfg;
    c.delta_p = dp;
    c.x_0 = feed;
    const DerivedConstants k = derive_constants(c);
    const auto refined_r = refine_side(pairs, Side::right, c, k).offsets;
    const auto refined_l = refine_side(pairs, Side::left, c, k).offsets;
    const auto uniform = uniform_offsets(2 * pairs, c, k);
    out.push_back({"bound_estimate", dp, max_gain_estimate(c, k), 0.0});

    std::vector<double> fluid1;
    std::vector<double> fluid2;
    std::vector<double> fixed;
    for (const double xu : users) {
      const double d2 = c.d * c.d;
      const double gap = std::max(0.0, std::abs(xu) - fluid_edge);
      fluid1.push_back(k.eta / d2);
      fluid2.push_back(k.eta / (gap * gap + d2));
      fixed.push_back(k.eta / (xu * xu + d2));
    }
    for (const auto& [name, v] : {std::pair{"fluid1", &fluid1}, std::pair{"fluid2", &fluid2},
                                  std::pair{"fixed", &fixed}}) {
      const Stats s = summarize(*v);
      out.push_back({name, dp, s.mean, s.std_error});
    }

    for (const double alpha : spec.cases) {
      c.alpha_wg = alpha;
      std::vector<double> best_refined;
      std::vector<double> best_uniform;
      for (const double xu : users) {
        c.x_u = xu;
        auto best = [&](const std::vector<double>& r, const std::vector<double>& l) {
          const auto profile = nested_gain_profile(r, l, c, k);
          if (profile.empty()) throw NumericError("no feasible antenna count right of the feed");
          return maximize_over_even([&](std::size_t n) { return profile[n / 2 - 1]; }, 2,
                                    2 * profile.size(), spec.exhaustive)
              .value;
        };
        best_refined.push_back(best(refined_r, refined_l));
        best_uniform.push_back(best(uniform, uniform));
      }
      const Stats r = summarize(best_refined);
      const Stats u = summarize(best_uniform);
      out.push_back({"refined:" + case_label(alpha), dp, r.mean, r.std_error});
      out.push_back({"uniform:" + case_label(alpha), dp, u.mean, u.std_error});
    }
  }
  return out;
}

Curve run_gain_vs_delta_mc(const SweepSpec& spec, const SystemConfig& cfg) {
  SystemConfig c = cfg;
  c.alpha_wg = 0.0;
  c.x_0.reset();
  const DerivedConstants k = derive_constants(c);
  const auto grid = linear_grid(1e-3, 1.0, step_or(spec, 1e-3));
  const double d2 = c.d * c.d;

  Curve out;
  for (const std::size_t n : spec.n_list) {
    const std::string tag = ":N=" + std::to_string(n);

    std::size_t begin = out.size();
    out.push_back({"mc" + tag, 0.0, k.eta / d2, 0.0});
    for (const double x : grid) {
      out.push_back({"mc" + tag, x, gain_mc(n, x * k.lambda, c, k).gain, 0.0});
    }
    mark_max(out, "mc" + tag, begin);

    begin = out.size();
    out.push_back({"free" + tag, 0.0, static_cast<double>(n) * k.eta / d2, 0.0});
    for (const double x : grid) {
      const auto layout = symmetric_uniform_layout(c, n, x * k.lambda);
      out.push_back({"free" + tag, x, array_gain_exact(layout, c, k), 0.0});
    }
    mark_max(out, "free" + tag, begin);

    if (n == 2) {
      begin = out.size();
      out.push_back({"closed" + tag, 0.0, gain_mc_two_closed(0.0, c, k), 0.0});
      for (const double x : grid) {
        out.push_back({"closed" + tag, x, gain_mc_two_closed(x * k.lambda, c, k), 0.0});
      }
      mark_max(out, "closed" + tag, begin);
      begin = out.size();
      out.push_back({"closed_approx" + tag, 0.0, gain_mc_two_approx(0.0, c, k), 0.0});
      for (const double x : grid) {
        out.push_back({"closed_approx" + tag, x, gain_mc_two_approx(x * k.lambda, c, k), 0.0});
      }
      mark_max(out, "closed_approx" + tag, begin);
    }
  }
  const double fixed = k.eta / (c.x_u * c.x_u + d2);
  out.push_back({"fixed", 0.0, fixed, 0.0});
  for (const double x : grid) out.push_back({"fixed", x, fixed, 0.0});
  return out;
}

Curve run_sweep(const SweepSpec& spec, const SystemConfig& cfg) {
  spec.validate();
  cfg.validate();
  switch (spec.kind) {
    case SweepKind::fub_curve: return run_fub_curve(spec);
    case SweepKind::fmc_curve: return run_fmc_curve(spec);
    case SweepKind::gain_vs_n: return run_gain_vs_n(spec, cfg);
    case SweepKind::maxgain_vs_spacing: return run_maxgain_vs_spacing(spec, cfg);
    case SweepKind::gain_vs_delta_mc: return run_gain_vs_delta_mc(spec, cfg);
  }
  throw std::invalid_argument("unknown sweep kind");
}

std::string format_csv(std::span<const CurvePoint> points, const std::string& comment) {
  std::vector<const CurvePoint*> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back(&p);
  std::stable_sort(rows.begin(), rows.end(), [](const CurvePoint* a, const CurvePoint* b) {
    if (a->series != b->series) return a->series < b->series;
    return a->x < b->x;
  });

  std::string out;
  if (!comment.empty()) out += "# " + comment + "\n";
  out += "series,x,y,stderr\n";
  char buf[128];
  for (const CurvePoint* p : rows) {
    std::snprintf(buf, sizeof buf, ",%.11e,%.11e,%.11e\n", p->x, p->y, p->std_error);
    out += p->series;
    out += buf;
  }
  return out;
}

void write_csv(std::span<const CurvePoint> points, const std::filesystem::path& path,
               const std::string& comment) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << format_csv(points, comment);
  f.flush();
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace passgain
