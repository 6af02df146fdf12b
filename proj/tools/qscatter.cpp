// qscatter: transmission sweeps, figure panel data and the acceptance suite.

#include "qscatter/error.hpp"
#include "qscatter/figures.hpp"
#include "qscatter/run_spec.hpp"
#include "qscatter/sweep.hpp"
#include "qscatter/validation.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using namespace qscatter;

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

int cmd_sweep(RunSpec spec, unsigned threads) {
  const auto curve =
      run_sweep(spec.profile, spec.grid.points(), spec.numerics, {threads});
  if (spec.outputs.csv.empty())
    write_csv(std::cout, curve);
  else
    write_csv_file(spec.outputs.csv, curve);
  if (!spec.outputs.plot.empty())
    write_svg_file(spec.outputs.plot, curve, describe(spec.profile));
  if (spec.outputs.stats)
    (spec.outputs.csv.empty() ? std::cerr : std::cout)
        << format_stats(curve_stats(curve), curve) << '\n';
  return 0;
}

int cmd_figure(const std::string &name, const fs::path &outdir, bool svg,
               unsigned threads) {
  const auto curves = figure_curves(name);
  fs::create_directories(outdir);
  const NumericsConfig cfg;
  for (const auto &c : curves) {
    const std::string stem = c.label.empty() ? name : name + "_" + c.label;
    const auto curve = run_sweep(c.profile, c.grid, cfg, {threads});
    const fs::path csv = outdir / (stem + ".csv");
    write_csv_file(csv.string(), curve);
    std::cout << csv.string() << '\n';
    if (svg) {
      const fs::path plot = outdir / (stem + ".svg");
      write_svg_file(plot.string(), curve, stem + ": " + describe(c.profile));
      std::cout << plot.string() << '\n';
    }
  }
  return 0;
}

int cmd_validate(const ValidationOptions &options) {
  bool ok = true;
  for (const auto &r : run_acceptance(options)) {
    std::cout << format_result(r) << std::endl;
    ok = ok && r.passed;
  }
  std::cout << (ok ? "all criteria passed" : "some criteria failed") << '\n';
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"1D transmission through a well next to a finite barrier"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = all cores)");

  auto *sweep = app.add_subcommand("sweep", "T(E) and T_b(E) for a spec file");
  std::string spec_path;
  OutputSpec outputs;
  sweep->add_option("spec", spec_path, "key=value spec file")->required();
  sweep->add_option("--csv", outputs.csv, "CSV output (default stdout)");
  sweep->add_option("--plot", outputs.plot, "SVG plot output");
  sweep->add_flag("--stats", outputs.stats, "print excursion statistics");

  auto *figure = app.add_subcommand("figure", "write the curves of a figure panel");
  std::string figure_name;
  std::string outdir;
  bool svg = false;
  figure->add_option("name", figure_name, "fig2a..fig2d, fig3a..fig3d, fig4a..fig4d, "
                                          "fig5, fig6a..fig6d")
      ->required();
  figure->add_option("--outdir", outdir, "output directory")->required();
  figure->add_flag("--svg", svg, "also write an SVG plot per curve");

  auto *validate = app.add_subcommand("validate", "run the acceptance criteria");
  ValidationOptions voptions;
  double forced_h = 0.0;
  validate->add_flag("--quick", voptions.quick, "closed-form checks only");
  validate->add_option("--step", forced_h, "fixed RK4 step instead of the adaptive one")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep) {
      RunSpec spec = parse_spec(read_file(spec_path));
      spec.outputs = outputs;
      return cmd_sweep(spec, threads);
    }
    if (*figure)
      return cmd_figure(figure_name, outdir, svg, threads);
    if (forced_h > 0.0)
      voptions.forced_step = forced_h;
    voptions.threads = threads;
    return cmd_validate(voptions);
  } catch (const std::exception &e) {
    std::cerr << "qscatter: " << e.what() << '\n';
  }
  return 1;
}
