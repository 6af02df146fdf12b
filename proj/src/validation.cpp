#include "qscatter/validation.hpp"

#include "qscatter/closed_form.hpp"
#include "qscatter/error.hpp"
#include "qscatter/figures.hpp"
#include "qscatter/potential.hpp"
#include "qscatter/scattering.hpp"
#include "qscatter/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace qscatter {

namespace {

using W = WellShape;

std::string fmt(const char *pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

// State shared by all criteria of one run.
class Suite {
public:
  explicit Suite(const ValidationOptions &options) : options_(options) {
    if (options.forced_step) {
      cfg_.h = *options.forced_step;
      cfg_.resolve_wavelength = false;
    }
  }

  const NumericsConfig &cfg() const { return cfg_; }

  ScatteringResult point(const PotentialProfile &p, double energy) {
    const ScatteringResult r = transmission(p, energy, cfg_);
    note_drift(r.wronskian_drift, p);
    return r;
  }

  TransmissionCurve sweep(const PotentialProfile &p, const std::vector<double> &grid) {
    TransmissionCurve c = run_sweep(p, grid, cfg_, {options_.threads});
    note_drift(c.max_wronskian_drift, p);
    return c;
  }

  CurveStats stats(const PotentialProfile &p, const std::vector<double> &grid) {
    const CurveStats coarse = curve_stats(sweep(p, grid));
    const CurveStats fine = curve_stats(sweep(p, refine_grid(grid)));
    const auto a = static_cast<long>(coarse.n_local_maxima);
    const auto b = static_cast<long>(fine.n_local_maxima);
    if (std::abs(a - b) > 1)
      throw Error(ErrorCode::GridTooCoarse,
                  fmt("grid too coarse for %s: %ld maxima, %ld on the refined grid",
                      describe(p).c_str(), a, b));
    return coarse;
  }

  double max_drift() const { return max_drift_; }
  const std::string &drift_source() const { return drift_source_; }
  bool any_drift() const { return !drift_source_.empty(); }

private:
  void note_drift(double drift, const PotentialProfile &p) {
    if (p.family == Family::DeltaPair)
      return;
    if (drift_source_.empty() || drift > max_drift_) {
      max_drift_ = drift;
      drift_source_ = describe(p);
    }
  }

  ValidationOptions options_;
  NumericsConfig cfg_;
  double max_drift_ = 0.0;
  std::string drift_source_;
};

double shaped_v_m() { return shaped_barrier_height(); }

std::vector<std::pair<std::string, PotentialProfile>> family_representatives() {
  return {
      {"free", PotentialProfile::free()},
      {"delta_pair", PotentialProfile::delta_pair(1.0, 5.0, 3.0)},
      {"finite_composite",
       PotentialProfile::finite_composite(10.0, {W::Rectangular, 5.0}, 5.0, 11.5)},
      {"continuous_joined",
       PotentialProfile::continuous_joined(10.0, 5.0, BarrierForm::XGauss)},
      {"discontinuous_joined",
       PotentialProfile::discontinuous_joined(15.0, 5.0, BarrierForm::Gauss)},
      {"single_smooth", PotentialProfile::single_smooth(1.0, 5.0, 3.0)},
  };
}

void unitarity(Suite &suite, CriterionResult &r) {
  std::string worst;
  for (const auto &[name, p] : family_representatives()) {
    const double v_m = effective_barrier_height(p);
    const auto curve = suite.sweep(p, open_grid(v_m > 0.0 ? 10.0 * v_m : 10.0, 50));
    for (double u : curve.unitarity_defect)
      if (u > r.measured || worst.empty()) {
        r.measured = std::max(r.measured, u);
        worst = name;
      }
  }
  r.passed = r.measured <= r.threshold;
  r.detail = "max |T+R-1|, worst family " + worst;
}

void delta_closed_form(Suite &suite, CriterionResult &r) {
  const auto grid = open_grid(50.0, 500);
  double defect = 0.0, barrier = 0.0;
  for (const auto &[v_w, d] : {std::pair{1.0, 3.0}, {1.0, 1.0}, {5.0, 3.0}, {5.0, 1.0}}) {
    const auto curve = suite.sweep(PotentialProfile::delta_pair(v_w, 5.0, d), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      defect = std::max(defect, curve.unitarity_defect[i]);
      barrier = std::max(barrier, std::abs(curve.T_b[i] -
                                           delta_barrier_T(5.0, grid[i], suite.cfg())));
    }
  }
  r.measured = std::max(defect, barrier);
  r.passed = r.measured <= r.threshold;
  r.detail = fmt("max |R+T-1| = %.3g, max |T(v_w=0) - single delta| = %.3g",
                 defect, barrier);
}

void rectangular_oracle(Suite &suite, CriterionResult &r) {
  NumericsConfig cfg = suite.cfg();
  if (cfg.resolve_wavelength) {
    cfg.h = 1e-3;
    cfg.resolve_wavelength = false;
  }
  const auto p = PotentialProfile::finite_composite(0.0, {W::Rectangular, 0.0}, 0.0,
                                                    5.0, BarrierForm::Rectangular, 1.0);
  double worst_e = 0.0;
  for (double e : {0.5, 2.5, 5.5, 10.0, 25.0}) {
    const double err =
        relative_error(transmission(p, e, cfg).T, rectangular_barrier_T(5.0, 1.0, e, cfg));
    if (err >= r.measured) {
      r.measured = err;
      worst_e = e;
    }
  }
  r.passed = r.measured <= r.threshold;
  r.detail = fmt("max relative error at h = %g, worst at E = %g", cfg.h, worst_e);
}

void scarf_oracle(Suite &suite, CriterionResult &r) {
  double narrowest = 1e300;
  for (double v0 : {5.0, 10.0, 15.0}) {
    const auto p = PotentialProfile::continuous_joined(v0, v0, BarrierForm::TanhSech);
    const Window w = integration_window(p, suite.cfg());
    narrowest = std::min({narrowest, -w.left, w.right});
    const auto grid = open_grid(3.0 * v0, 50);
    const auto curve = suite.sweep(p, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
      r.measured = std::max(r.measured,
                            relative_error(curve.T[i], scarf2_T(v0, 1.0, grid[i])));
  }
  r.passed = r.measured <= r.threshold && narrowest >= 12.0;
  r.detail = fmt("max relative error; narrowest half-window %.3f (needs >= 12)",
                 narrowest);
}

void transfer_matrix(Suite &suite, CriterionResult &r) {
  const auto p = figure_curves("fig5").at(2).profile;
  const auto grid = open_grid(10.0 * shaped_v_m(), 50);
  const auto curve = suite.sweep(p, grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
    r.measured = std::max(r.measured, relative_error(curve.T[i],
                                                     transfer_matrix_T(p, grid[i], 10000,
                                                                       suite.cfg())));
  r.passed = r.measured <= r.threshold;
  r.detail = "max relative error, " + describe(p) + ", 10^4 slices";
}

void wronskian(Suite &suite, CriterionResult &r) {
  r.measured = suite.max_drift();
  r.passed = suite.any_drift() && r.measured <= r.threshold;
  r.detail = "max |W - 1| over every integration of this run, worst " +
             suite.drift_source();
}

void delta_surrogate(Suite &suite, CriterionResult &r) {
  const double limit = delta_barrier_T(5.0, 25.0, suite.cfg());
  std::vector<double> errors;
  for (double w : {0.1, 0.05, 0.025})
    errors.push_back(std::abs(suite.point(delta_as_rectangle(5.0, w), 25.0).T - limit));
  const bool monotone = errors[0] > errors[1] && errors[1] > errors[2];
  r.measured = errors.back();
  r.threshold = errors[1];
  r.passed = monotone;
  r.detail = fmt("|T - %.6g| = %.3g, %.3g, %.3g for w = 0.1, 0.05, 0.025", limit,
                 errors[0], errors[1], errors[2]);
}

void resonances(Suite &suite, CriterionResult &r) {
  const double d = 3.0;
  const auto p = PotentialProfile::delta_pair(5.0, 5.0, d);
  std::string values;
  for (int n = 0; n <= 2; ++n) {
    const double k = (n + 0.5) * std::numbers::pi / d;
    const double t = suite.point(p, k * k / suite.cfg().coupling()).T;
    r.measured = std::max(r.measured, std::abs(t - 1.0));
    values += fmt("%sT = %.6g", n ? ", " : "", t);
  }
  r.passed = r.measured <= r.threshold;
  r.detail = "max |T - 1|; " + values;
}

void frequency_trend(Suite &suite, CriterionResult &r) {
  const auto delta_grid = open_grid(50.0, 500);
  const auto n_d3 =
      suite.stats(PotentialProfile::delta_pair(1.0, 5.0, 3.0), delta_grid).n_local_maxima;
  const auto n_d1 =
      suite.stats(PotentialProfile::delta_pair(1.0, 5.0, 1.0), delta_grid).n_local_maxima;
  const auto n_c5 = suite.stats(figure_curves("fig3c").at(0).profile,
                                figure_curves("fig3c").at(0).grid).n_local_maxima;
  const auto n_c0 = suite.stats(figure_curves("fig3b").at(0).profile,
                                figure_curves("fig3b").at(0).grid).n_local_maxima;
  r.measured = std::min(static_cast<double>(n_d3) - static_cast<double>(n_d1),
                        static_cast<double>(n_c5) - static_cast<double>(n_c0));
  r.passed = n_d3 > n_d1 && n_c5 > n_c0;
  r.detail = fmt("delta maxima d=3: %zu, d=1: %zu; rectangular-well maxima d=5: %zu, "
                 "d=0: %zu; measured is the smaller gap",
                 n_d3, n_d1, n_c5, n_c0);
}

void amplitude_trend(Suite &suite, CriterionResult &r) {
  const auto grid = open_grid(50.0, 500);
  const double a5 = suite.stats(PotentialProfile::delta_pair(5.0, 5.0, 3.0), grid).max_excursion;
  const double a1 = suite.stats(PotentialProfile::delta_pair(1.0, 5.0, 3.0), grid).max_excursion;
  r.measured = a5 - a1;
  r.passed = a5 > a1;
  r.detail = fmt("max |T - T_b| v_w=5: %.6g, v_w=1: %.6g; measured is the difference",
                 a5, a1);
}

void suppression(Suite &suite, CriterionResult &r) {
  r.measured = -1e300;
  const auto grid = open_grid(15.0, 500);
  const auto curve =
      suite.sweep(PotentialProfile::discontinuous_joined(15.0, 5.0, BarrierForm::Gauss), grid);
  double at = 0.0;
  std::size_t above = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double excess = curve.T[i] - curve.T_b[i];
    if (excess > r.measured) {
      r.measured = excess;
      at = grid[i];
    }
    above += excess > r.threshold;
  }
  r.passed = r.measured <= r.threshold;
  r.detail = fmt("max T - T_b at E = %.4g; %zu of %zu points above tolerance", at,
                 above, grid.size());
}

void non_oscillation(Suite &suite, CriterionResult &r) {
  const auto grid = open_grid(15.0, 500);
  std::string counts;
  for (double v_w : {5.0, 10.0, 15.0}) {
    const auto n = suite.stats(PotentialProfile::continuous_joined(v_w, 5.0,
                                                                   BarrierForm::XGauss),
                               grid).n_local_maxima;
    r.measured = std::max(r.measured, static_cast<double>(n));
    counts += fmt("%sv_w=%g: %zu", counts.empty() ? "" : ", ", v_w, n);
  }
  r.passed = r.measured <= r.threshold;
  r.detail = "max n_local_maxima; " + counts;
}

void depth_trend(Suite &suite, CriterionResult &r) {
  const auto grid = open_grid(50.0, 500);
  std::vector<CurveStats> s;
  for (double v_w : {0.0, 2000.0, 5000.0})
    s.push_back(suite.stats(PotentialProfile::single_smooth(v_w, 5.0, 8.0), grid));
  const bool maxima = s[0].n_local_maxima < s[1].n_local_maxima &&
                      s[1].n_local_maxima < s[2].n_local_maxima;
  const bool excursion = s[0].max_excursion < s[1].max_excursion &&
                         s[1].max_excursion < s[2].max_excursion;
  r.measured = static_cast<double>(s[2].n_local_maxima) -
               static_cast<double>(s[1].n_local_maxima);
  r.passed = maxima && excursion;
  r.detail = fmt("v_w = 0, 2000, 5000: maxima %zu, %zu, %zu; max excursion %.4g, "
                 "%.4g, %.4g; measured is maxima(5000) - maxima(2000)",
                 s[0].n_local_maxima, s[1].n_local_maxima, s[2].n_local_maxima,
                 s[0].max_excursion, s[1].max_excursion, s[2].max_excursion);
}

void time_reversal(Suite &suite, CriterionResult &r) {
  std::string worst;
  for (const auto &[name, p] : family_representatives())
    for (double e : {0.7, 3.1, 12.5, 40.0}) {
      const double diff = std::abs(suite.point(p, e).T - suite.point(mirror(p), e).T);
      if (diff >= r.measured) {
        r.measured = diff;
        worst = name;
      }
    }
  r.passed = r.measured <= r.threshold;
  r.detail = "max |T(mirror) - T|, worst family " + worst;
}

void performance(Suite &suite, CriterionResult &r) {
  const auto fig = figure_curves("fig3c").at(0);
  const Window w = integration_window(fig.profile, suite.cfg());
  const auto start = std::chrono::steady_clock::now();
  suite.sweep(fig.profile, fig.grid);
  r.measured = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = r.measured < r.threshold && w.length() <= 20.0;
  r.detail = fmt("seconds for %zu energies (T and T_b), window length %.3f",
                 fig.grid.size(), w.length());
}

} // namespace

std::vector<CriterionResult> run_acceptance(const ValidationOptions &options) {
  Suite suite(options);
  struct Check {
    int id;
    const char *name;
    double threshold;
    void (*run)(Suite &, CriterionResult &);
    bool quick;
  };
  // Wronskian drift is gathered from every other criterion, so it runs last.
  const std::vector<Check> checks{
      {1, "unitarity over every family", 1e-8, unitarity, false},
      {2, "delta pair closed form", 1e-12, delta_closed_form, true},
      {3, "rectangular barrier oracle", 1e-8, rectangular_oracle, true},
      {4, "Scarf II oracle", 1e-4, scarf_oracle, false},
      {5, "transfer matrix cross-check", 1e-6, transfer_matrix, false},
      {7, "delta surrogate convergence", 0.0, delta_surrogate, true},
      {8, "resonances at kd = (n + 1/2) pi", 1e-10, resonances, true},
      {9, "oscillation frequency grows with d", 0.0, frequency_trend, false},
      {10, "oscillation amplitude grows with v_w", 0.0, amplitude_trend, false},
      {11, "discontinuous joined well suppresses T", 1e-6, suppression, false},
      {12, "continuous joined well does not oscillate", 1.0, non_oscillation, false},
      {13, "single smooth depth trend", 0.0, depth_trend, false},
      {14, "time reversal", 1e-10, time_reversal, false},
      {15, "500-energy composite sweep time", 10.0, performance, false},
      {6, "Wronskian conservation", 1e-9, wronskian, false},
  };

  std::vector<CriterionResult> results;
  for (const Check &check : checks) {
    if (options.quick && !check.quick)
      continue;
    CriterionResult r{check.id, check.name, false, 0.0, check.threshold, {}};
    try {
      check.run(suite, r);
    } catch (const std::exception &e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  std::sort(results.begin(), results.end(),
            [](const auto &a, const auto &b) { return a.id < b.id; });
  return results;
}

std::string format_result(const CriterionResult &r) {
  return fmt("%s %2d %-42s measured=%-11.4g threshold=%-9.3g %s",
             r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.measured,
             r.threshold, r.detail.c_str());
}

} // namespace qscatter
