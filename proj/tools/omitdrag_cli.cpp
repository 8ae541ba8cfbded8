// Command-line front end: spectrum / drag / poles / sweep / figure / selfcheck.
//
// Exit codes: 0 success, 1 validation failure, 2 numerical-domain error,
// 3 I/O error.  Validation failures additionally emit a machine-readable
// JSON object on stderr.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "omit/errors.hpp"
#include "omit/io.hpp"
#include "omit/selfcheck.hpp"
#include "omit/sweep.hpp"
#include "omit/version.hpp"

namespace {

struct CommonOpts {
  double kappa = 1e4;
  double omega_m = 1e4;
  double gamma_m = 1.0;
  std::optional<double> beta;
  bool beta_ideal = false;
  std::string unit_scale = "gamma_m";
  std::optional<double> x_min, x_max;
  std::size_t points = 2001;
  std::optional<double> omega_probe;
  std::string format = "csv";
  std::string out = "-";
  std::string drag_mode = "real-parts";
  unsigned threads = 0;
};

void add_param_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--kappa", o.kappa, "cavity field decay rate")->capture_default_str();
  cmd->add_option("--omega-m", o.omega_m, "mechanical frequency")->capture_default_str();
  cmd->add_option("--gamma-m", o.gamma_m, "mechanical damping rate")->capture_default_str();
  cmd->add_option("--beta", o.beta,
                  "drive strength (default: ideal value beta0 of the parameter set)");
  cmd->add_flag("--beta-ideal", o.beta_ideal,
                "recompute beta = beta0 for every evaluated parameter set");
  cmd->add_option("--unit-scale", o.unit_scale, "unit convention tag")->capture_default_str();
}

void add_grid_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--x-min", o.x_min, "grid start (default -3*gamma_m)");
  cmd->add_option("--x-max", o.x_max, "grid end (default +3*gamma_m)");
  cmd->add_option("--points", o.points, "grid point count")->capture_default_str();
}

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--omega-probe", o.omega_probe,
                  "probe angular frequency in the group-index term (default 1e4*omega_m)");
  cmd->add_option("--format", o.format, "csv or json")->capture_default_str();
  cmd->add_option("--out", o.out, "output path ('-' = stdout)")->capture_default_str();
  cmd->add_option("--drag-mode", o.drag_mode, "real-parts or complex-then-real")
      ->capture_default_str();
  cmd->add_option("--threads", o.threads, "worker threads (0 = hardware)");
}

omit::SystemParams make_params(const CommonOpts& o) {
  omit::SystemParams p{o.kappa, o.omega_m, o.gamma_m, 0.0, o.unit_scale};
  p.beta = o.beta ? *o.beta : omit::beta_ideal(o.kappa, o.omega_m, o.gamma_m);
  p.validate();
  return p;
}

omit::SweepSpec base_spec(const CommonOpts& o, const omit::SystemParams& params) {
  omit::SweepSpec spec;
  spec.base = params;
  spec.x_grid.x_min = o.x_min.value_or(-3.0 * params.gamma_m);
  spec.x_grid.x_max = o.x_max.value_or(3.0 * params.gamma_m);
  spec.x_grid.points = o.points;
  spec.omega_probe = o.omega_probe.value_or(omit::default_omega_probe(params));
  spec.drag_mode = o.drag_mode == "complex-then-real" ? omit::DragMode::ComplexThenReal
                                                      : omit::DragMode::RealParts;
  spec.beta_ideal = o.beta_ideal;
  return spec;
}

void emit(const omit::SweepSpec& spec, const CommonOpts& o) {
  const auto series = omit::run_sweep(spec, o.threads);
  omit::write_output(spec, series, omit::format_from_string(o.format), o.out);
}

void report_validation(const omit::validation_error& e) {
  nlohmann::json err;
  err["error"]["type"] = "validation";
  err["error"]["fields"] = e.fields();
  std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(omit::kToolName) +
               " - driven optomechanical cavity response, group index and light drag"};
  app.set_version_flag("--version", omit::kVersion);
  app.require_subcommand(1);

  CommonOpts o;

  // spectrum
  auto* spectrum = app.add_subcommand(
      "spectrum", "probe response, susceptibility, refractive and group index over x");
  add_param_flags(spectrum, o);
  add_grid_flags(spectrum, o);
  add_output_flags(spectrum, o);

  // drag
  auto* drag = app.add_subcommand("drag", "lateral drag displacement over x or v");
  double drag_v = 2.0, drag_length = 0.0;
  std::optional<double> x_at;
  std::string sweep_over = "x";
  add_param_flags(drag, o);
  add_grid_flags(drag, o);
  add_output_flags(drag, o);
  drag->add_option("--v", drag_v, "medium velocity, m/s (v-sweeps: max |v|)")
      ->capture_default_str();
  drag->add_option("--length", drag_length, "medium length, m")->required();
  drag->add_option("--sweep-over", sweep_over, "x or v")->capture_default_str();
  drag->add_option("--x-at", x_at, "detuning for v-sweeps (default 0.3*gamma_m)");

  // poles
  auto* poles = app.add_subcommand(
      "poles", "transparency operating point (x0, beta0) and the response there");
  add_param_flags(poles, o);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "sweep one parameter over a value list");
  std::string varied_name = "gamma_m";
  std::vector<double> sweep_values;
  double sweep_length = 0.0, sweep_v = 2.0;
  bool with_drag = false;
  add_param_flags(sweep, o);
  add_grid_flags(sweep, o);
  add_output_flags(sweep, o);
  sweep->add_option("--varied", varied_name, "gamma_m, kappa, omega_m, beta or v")
      ->capture_default_str();
  sweep->add_option("--values", sweep_values, "values of the varied parameter")
      ->required()
      ->delimiter(',');
  sweep->add_flag("--with-drag", with_drag, "also emit delta_x per row");
  sweep->add_option("--length", sweep_length, "medium length, m (drag sweeps)");
  sweep->add_option("--v", sweep_v, "medium velocity, m/s (drag sweeps)")
      ->capture_default_str();

  // figure
  auto* figure = app.add_subcommand("figure", "run a named preset study");
  std::string figure_name;
  std::optional<double> fig_length, fig_velocity;
  figure->add_option("name", figure_name, "fig2 .. fig8")->required();
  figure->add_option("--length", fig_length, "medium length, m (drag presets)");
  figure->add_option("--v", fig_velocity, "medium velocity, m/s (drag presets; default 2)");
  figure->add_option("--omega-probe", o.omega_probe, "override the 1e4*omega_m default");
  figure->add_option("--format", o.format, "csv or json")->capture_default_str();
  figure->add_option("--out", o.out, "output path ('-' = stdout)")->capture_default_str();
  figure->add_option("--threads", o.threads, "worker threads (0 = hardware)");

  // selfcheck
  auto* selfcheck = app.add_subcommand("selfcheck", "run the embedded invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    nlohmann::json err;
    err["error"]["type"] = "validation";
    err["error"]["fields"] = {std::string(e.what())};
    std::cerr << err.dump() << "\n";
    return 1;
  }

  try {
    if (spectrum->parsed()) {
      const auto params = make_params(o);
      auto spec = base_spec(o, params);
      spec.varied = omit::VariedParam::Beta;
      spec.values = {params.beta};
      spec.beta_ideal = false;
      spec.extra_metadata["subcommand"] = "spectrum";
      emit(spec, o);
    } else if (drag->parsed()) {
      const auto params = make_params(o);
      auto spec = base_spec(o, params);
      omit::DragConfig cfg;
      cfg.l = drag_length;
      cfg.omega_probe = spec.omega_probe;
      spec.varied = omit::VariedParam::V;
      spec.extra_metadata["subcommand"] = "drag";
      if (sweep_over == "v") {
        const double anchor = x_at.value_or(0.3 * params.gamma_m);
        cfg.v = drag_v;
        spec.values = omit::symmetric_values(drag_v, o.points);
        spec.x_grid = omit::GridSpec{anchor - 1.0, anchor + 1.0, 3};
        spec.layout = "v-profile";
        spec.extra_metadata["x_at"] = omit::format_double(anchor);
      } else if (sweep_over == "x") {
        cfg.v = drag_v;
        spec.values = {drag_v};
        spec.layout = "drag-x";
      } else {
        throw omit::validation_error({"sweep-over: must be 'x' or 'v'"});
      }
      spec.drag = cfg;
      emit(spec, o);
    } else if (poles->parsed()) {
      const auto params = make_params(o);
      const auto pc = omit::pole_conditions(params);
      omit::SystemParams at_pole = params;
      at_pole.beta = pc.beta0;
      std::cout << "unit_scale = " << params.unit_scale << "\n"
                << "x0 = " << omit::format_double(pc.x0) << "\n"
                << "beta0 = " << omit::format_double(pc.beta0) << "\n"
                << "|eps_T(x0; beta0)| = "
                << omit::format_double(std::abs(omit::eps_T_resonant(at_pole, pc.x0)))
                << "\n";
    } else if (sweep->parsed()) {
      const auto params = make_params(o);
      auto spec = base_spec(o, params);
      spec.varied = omit::varied_param_from_string(varied_name);
      spec.values = sweep_values;
      spec.extra_metadata["subcommand"] = "sweep";
      if (with_drag || spec.varied == omit::VariedParam::V) {
        omit::DragConfig cfg;
        cfg.v = sweep_v;
        cfg.l = sweep_length;
        cfg.omega_probe = spec.omega_probe;
        spec.drag = cfg;
      }
      emit(spec, o);
    } else if (figure->parsed()) {
      omit::FigureOptions fo;
      fo.length = fig_length;
      fo.omega_probe = o.omega_probe;
      fo.velocity = fig_velocity;
      auto spec = omit::figure_preset(figure_name, fo);
      spec.extra_metadata["subcommand"] = "figure";
      emit(spec, o);
    } else if (selfcheck->parsed()) {
      bool all_pass = true;
      for (const auto& r : omit::run_selfcheck()) {
        all_pass = all_pass && r.pass;
        std::printf("%-4s %-24s measured=%.3e threshold=%.3e  (%s)\n",
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.measured, r.threshold,
                    r.detail.c_str());
      }
      if (!all_pass) return 2;
    }
  } catch (const omit::validation_error& e) {
    report_validation(e);
    return 1;
  } catch (const omit::domain_error& e) {
    std::cerr << "numerical-domain error: " << e.what() << "\n";
    return 2;
  } catch (const omit::io_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
