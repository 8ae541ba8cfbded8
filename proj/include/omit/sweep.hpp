#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omit/optics.hpp"
#include "omit/params.hpp"

namespace omit {

enum class VariedParam { GammaM, Kappa, OmegaM, Beta, V };

const char* to_string(VariedParam p);
VariedParam varied_param_from_string(const std::string& name);

struct GridSpec {
  double x_min = 0.0;
  double x_max = 0.0;
  std::size_t points = 0;  // >= 3

  double step() const { return (x_max - x_min) / static_cast<double>(points - 1); }
  double at(std::size_t i) const {
    // endpoint-exact, strictly increasing for x_min < x_max
    if (i == points - 1) return x_max;
    return x_min + static_cast<double>(i) * step();
  }
};

struct SweepSpec {
  SystemParams base;
  VariedParam varied = VariedParam::GammaM;
  std::vector<double> values;
  GridSpec x_grid;
  std::optional<DragConfig> drag;  // required when varied == V or drag output wanted
  double omega_probe = 0.0;
  DragMode drag_mode = DragMode::RealParts;
  bool beta_ideal = false;  ///< recompute beta = beta0 for each evaluated parameter set
  std::string preset_name;  ///< set by figure_preset, echoed in metadata

  /// Row layout of emitted files: "grid" = full spectrum columns, one row per
  /// grid point per series; "drag-x" = (x, delta_x) rows per series;
  /// "v-profile" = one (v, delta_x) row per series, taken at the centre grid
  /// point (used by drag sweeps over the medium velocity).
  std::string layout = "grid";

  /// Extra key=value pairs echoed verbatim in the output metadata (and
  /// preserved through metadata round-trips).
  std::map<std::string, std::string> extra_metadata;

  /// Throws validation_error listing every violated field.
  void validate() const;
};

/// One varied-parameter value worth of results.  `metadata` echoes every knob
/// needed to re-run the series bit-identically.
struct SeriesResult {
  double varied_value = 0.0;
  SystemParams params;                    ///< effective parameters of this series
  std::vector<SpectrumPoint> points;      ///< rows in x order
  std::vector<double> drag_x;             ///< delta_x per row (present iff drag configured)
  std::vector<char> drag_singular;        ///< rows where Re(n_r) = 0 (delta_x is NaN, kept)
  std::optional<DragConfig> drag;         ///< effective drag config of this series
  std::map<std::string, std::string> metadata;
};

/// Deterministic map of the spec over (series, grid point).  Each point is a
/// pure function of its inputs, so any thread count yields bit-identical
/// results; n_threads = 0 picks the hardware concurrency.
std::vector<SeriesResult> run_sweep(const SweepSpec& spec, unsigned n_threads = 0);

/// Figure presets.  fig2/fig3 sweep gamma_m over {0.5, 1, 1.5, 2} with
/// kappa = omega_m = 1e4 (gamma_m units); fig4/fig5 sweep kappa over
/// {0.5, 1, 1.5, 2} x omega_m with gamma_m = 1e-4 omega_m; fig6/fig7 sweep
/// omega_m over {5000, 7000, 11000} rad/s with kappa fixed at 7000 rad/s and
/// gamma_m = 0.7 rad/s; fig8 sweeps the medium velocity over {-4, -2, 2, 4}
/// m/s.  beta defaults to beta0 of the base set; omega_probe defaults to
/// 1e4 * omega_m.  Drag presets (fig3/5/7/8) require an explicit medium
/// length.  Every choice is echoed in the emitted metadata.
struct FigureOptions {
  std::optional<double> length;       // m; required for fig3/5/7/8
  std::optional<double> omega_probe;  // overrides the 1e4 * omega_m default
  std::optional<double> velocity;     // m/s; default 2 for fig3/5/7
};

SweepSpec figure_preset(const std::string& name, const FigureOptions& opts = {});

std::vector<std::string> figure_preset_names();

/// Column selector for extremum searches.
enum class SeriesColumn { ReNr, ImNg };

const char* to_string(SeriesColumn c);

struct Extremum {
  std::size_t index = 0;       ///< grid index of the extremum
  double x_grid = 0.0;         ///< grid abscissa
  double value = 0.0;          ///< grid value
  double x_refined = 0.0;      ///< parabolic refinement through the three
                               ///< points around the extremum (<= half a step
                               ///< away from x_grid)
  double value_refined = 0.0;  ///< parabola vertex value
  bool boundary = false;       ///< extremum sits on the grid edge; no refinement
};

/// Grid argmin of the chosen column, refined by parabolic interpolation.
Extremum locate_dip(const SeriesResult& series, SeriesColumn column);

/// Both signed extrema of the chosen column.
struct ExtremumPair {
  Extremum min;
  Extremum max;
};

ExtremumPair extremum_pair(const SeriesResult& series, SeriesColumn column);

/// 1e4 * omega_m, the documented default probe frequency for group-index
/// evaluation.
double default_omega_probe(const SystemParams& params);

/// n equally spaced values spanning [-max_abs, max_abs], constructed so that
/// values[n-1-i] == -values[i] exactly (odd n puts an exact 0 in the middle).
std::vector<double> symmetric_values(double max_abs, std::size_t n);

}  // namespace omit
