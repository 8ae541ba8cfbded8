#include "omit/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "omit/errors.hpp"
#include "omit/io.hpp"
#include "omit/version.hpp"

namespace omit {

const char* to_string(VariedParam p) {
  switch (p) {
    case VariedParam::GammaM: return "gamma_m";
    case VariedParam::Kappa: return "kappa";
    case VariedParam::OmegaM: return "omega_m";
    case VariedParam::Beta: return "beta";
    case VariedParam::V: return "v";
  }
  return "?";
}

VariedParam varied_param_from_string(const std::string& name) {
  if (name == "gamma_m" || name == "gamma-m") return VariedParam::GammaM;
  if (name == "kappa") return VariedParam::Kappa;
  if (name == "omega_m" || name == "omega-m") return VariedParam::OmegaM;
  if (name == "beta") return VariedParam::Beta;
  if (name == "v") return VariedParam::V;
  throw validation_error({"varied: unknown parameter '" + name +
                          "' (expected gamma_m, kappa, omega_m, beta or v)"});
}

const char* to_string(SeriesColumn c) {
  return c == SeriesColumn::ReNr ? "re_n_r" : "im_n_g";
}

double default_omega_probe(const SystemParams& params) { return 1e4 * params.omega_m; }

void SweepSpec::validate() const {
  std::vector<std::string> bad = base.check();
  for (auto& m : bad) m.insert(0, "base.");

  if (values.empty()) bad.push_back("values: must be nonempty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    const std::string tag = "values[" + std::to_string(i) + "]";
    if (!std::isfinite(v)) {
      bad.push_back(tag + ": must be finite");
      continue;
    }
    switch (varied) {
      case VariedParam::GammaM:
        if (v < 0.0) bad.push_back(tag + ": gamma_m must be >= 0");
        break;
      case VariedParam::Kappa:
        if (v <= 0.0) bad.push_back(tag + ": kappa must be > 0");
        break;
      case VariedParam::OmegaM:
        if (v <= 0.0) bad.push_back(tag + ": omega_m must be > 0");
        break;
      case VariedParam::Beta:
        if (v < 0.0) bad.push_back(tag + ": beta must be >= 0");
        break;
      case VariedParam::V:
        break;
    }
  }

  if (!(std::isfinite(x_grid.x_min) && std::isfinite(x_grid.x_max) &&
        x_grid.x_min < x_grid.x_max))
    bad.push_back("x_grid: x_min must be finite and < x_max");
  if (x_grid.points < 3) bad.push_back("x_grid.points: must be >= 3");

  if (!(std::isfinite(omega_probe) && omega_probe > 0.0))
    bad.push_back("omega_probe: must be finite and > 0");

  if (varied == VariedParam::V && !drag)
    bad.push_back("drag: required when varied = v");
  if (drag) {
    auto db = drag->check();
    for (auto& m : db) bad.push_back("drag." + m);
    if (db.empty() && drag->omega_probe != omega_probe)
      bad.push_back("drag.omega_probe: must equal the sweep omega_probe (no unit mixing)");
  }
  if (beta_ideal && varied == VariedParam::Beta)
    bad.push_back("beta_ideal: cannot combine with varied = beta");

  if (layout != "grid" && layout != "v-profile" && layout != "drag-x")
    bad.push_back("layout: must be 'grid', 'drag-x' or 'v-profile'");
  if (layout == "v-profile" && varied != VariedParam::V)
    bad.push_back("layout: 'v-profile' requires varied = v");
  if ((layout == "v-profile" || layout == "drag-x") && !drag)
    bad.push_back("layout: '" + layout + "' requires a drag configuration");

  if (!bad.empty()) throw validation_error(std::move(bad));
}

namespace {

SystemParams series_params(const SweepSpec& spec, double value) {
  SystemParams p = spec.base;
  switch (spec.varied) {
    case VariedParam::GammaM: p.gamma_m = value; break;
    case VariedParam::Kappa: p.kappa = value; break;
    case VariedParam::OmegaM: p.omega_m = value; break;
    case VariedParam::Beta: p.beta = value; break;
    case VariedParam::V: break;
  }
  if (spec.beta_ideal) p.beta = beta_ideal(p.kappa, p.omega_m, p.gamma_m);
  return p;
}

void fill_range(const SystemParams& params, const SweepSpec& spec,
                const std::optional<DragConfig>& cfg, SeriesResult& out,
                std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    const double x = spec.x_grid.at(i);
    out.points[i] = evaluate_point(params, x, spec.omega_probe);
    if (cfg) {
      const SpectrumPoint& pt = out.points[i];
      const bool singular = (spec.drag_mode == DragMode::RealParts)
                                ? pt.n_r.real() == 0.0
                                : std::abs(pt.n_r) == 0.0;
      if (singular) {
        out.drag_x[i] = std::numeric_limits<double>::quiet_NaN();
        out.drag_singular[i] = 1;
      } else {
        out.drag_x[i] = light_drag(pt.n_g, pt.n_r, *cfg, spec.drag_mode);
        out.drag_singular[i] = 0;
      }
    }
  }
}

unsigned resolve_threads(unsigned n_threads) {
  if (n_threads != 0) return n_threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

std::vector<SeriesResult> run_sweep(const SweepSpec& spec, unsigned n_threads) {
  spec.validate();
  const unsigned threads = std::min<unsigned>(resolve_threads(n_threads), 64);
  const std::size_t n = spec.x_grid.points;

  std::vector<SeriesResult> out;
  out.reserve(spec.values.size());

  for (double value : spec.values) {
    SeriesResult series;
    series.varied_value = value;
    series.params = series_params(spec, value);
    series.params.validate();
    if (spec.drag) {
      DragConfig cfg = *spec.drag;
      if (spec.varied == VariedParam::V) cfg.v = value;
      series.drag = cfg;
      series.drag_x.resize(n);
      series.drag_singular.resize(n);
    }
    series.points.resize(n);

    const std::optional<DragConfig>& cfg = series.drag;
    if (threads <= 1 || n < 2 * threads) {
      fill_range(series.params, spec, cfg, series, 0, n);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(threads);
      const std::size_t chunk = (n + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] { fill_range(series.params, spec, cfg, series, lo, hi); });
      }
      for (auto& th : pool) th.join();
    }

    series.metadata = sweep_metadata(spec);
    series.metadata["varied_value"] = format_double(value);
    series.metadata["series.kappa"] = format_double(series.params.kappa);
    series.metadata["series.omega_m"] = format_double(series.params.omega_m);
    series.metadata["series.gamma_m"] = format_double(series.params.gamma_m);
    series.metadata["series.beta"] = format_double(series.params.beta);
    if (series.drag) series.metadata["series.v"] = format_double(series.drag->v);
    out.push_back(std::move(series));
  }
  return out;
}

SweepSpec figure_preset(const std::string& name, const FigureOptions& opts) {
  const bool known =
      name == "fig2" || name == "fig3" || name == "fig4" || name == "fig5" ||
      name == "fig6" || name == "fig7" || name == "fig8";
  if (!known) {
    std::string valid = "figure: unknown name '" + name + "' (valid:";
    for (const auto& n : figure_preset_names()) valid += " " + n;
    valid += ")";
    throw validation_error({valid});
  }

  SweepSpec spec;
  spec.preset_name = name;

  const bool absolute_units = (name == "fig6" || name == "fig7");
  if (absolute_units) {
    // omega_m family in absolute angular frequency; kappa pinned to the mid
    // value, gamma_m = 1e-4 * kappa
    const double kappa = 7000.0;
    const double gm = 1e-4 * kappa;
    spec.base = SystemParams{kappa, kappa, gm, beta_ideal(kappa, kappa, gm), "rad/s"};
    spec.varied = VariedParam::OmegaM;
    spec.values = {5000.0, 7000.0, 11000.0};
  } else {
    // gamma_m-normalised base: kappa = omega_m = 1e4 gives gamma_m = 1e-4 omega_m
    const double kappa = 1e4;
    spec.base = SystemParams{kappa, kappa, 1.0, beta_ideal(kappa, kappa, 1.0), "gamma_m"};
    if (name == "fig2" || name == "fig3") {
      spec.varied = VariedParam::GammaM;
      spec.values = {0.5, 1.0, 1.5, 2.0};
    } else if (name == "fig4" || name == "fig5") {
      spec.varied = VariedParam::Kappa;
      spec.values = {0.5e4, 1.0e4, 1.5e4, 2.0e4};
    } else {  // fig8
      spec.varied = VariedParam::V;
      spec.values = {-4.0, -2.0, 2.0, 4.0};
    }
  }

  // grid: [-3, 3] x the largest mechanical damping rate in play, 2001 points
  double gm_max = spec.base.gamma_m;
  if (spec.varied == VariedParam::GammaM)
    gm_max = *std::max_element(spec.values.begin(), spec.values.end());
  spec.x_grid = GridSpec{-3.0 * gm_max, 3.0 * gm_max, 2001};

  spec.omega_probe = opts.omega_probe.value_or(default_omega_probe(spec.base));

  const bool wants_drag =
      name == "fig3" || name == "fig5" || name == "fig7" || name == "fig8";
  if (wants_drag) {
    if (!opts.length)
      throw validation_error({"length: required for drag preset " + name +
                              " (the medium length is not implied by the model)"});
    DragConfig cfg;
    cfg.v = opts.velocity.value_or(2.0);
    cfg.l = *opts.length;
    cfg.omega_probe = spec.omega_probe;
    spec.drag = cfg;
    spec.layout = "drag-x";
  }

  spec.validate();
  return spec;
}

std::vector<double> symmetric_values(double max_abs, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n / 2; ++i) {
    const double a = max_abs * static_cast<double>(n - 1 - 2 * i) / static_cast<double>(n - 1);
    v[i] = -a;
    v[n - 1 - i] = a;
  }
  if (n % 2 == 1) v[n / 2] = 0.0;
  return v;
}

std::vector<std::string> figure_preset_names() {
  return {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"};
}

namespace {

double column_value(const SeriesResult& s, std::size_t i, SeriesColumn c) {
  return c == SeriesColumn::ReNr ? s.points[i].n_r.real() : s.points[i].n_g.imag();
}

Extremum locate_extremum(const SeriesResult& series, SeriesColumn column, bool want_max) {
  if (series.points.size() < 3)
    throw validation_error({"series: needs at least 3 grid points"});

  const std::size_t n = series.points.size();
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    const double v = column_value(series, i, column);
    const double best = column_value(series, k, column);
    if (want_max ? v > best : v < best) k = i;
  }

  Extremum e;
  e.index = k;
  e.x_grid = series.points[k].x;
  e.value = column_value(series, k, column);
  e.x_refined = e.x_grid;
  e.value_refined = e.value;
  if (k == 0 || k == n - 1) {
    e.boundary = true;
    return e;
  }

  // parabola through the three points around the extremum; the vertex offset
  // is at most half a grid step when the middle point is the grid extremum
  const double y0 = column_value(series, k - 1, column);
  const double y1 = e.value;
  const double y2 = column_value(series, k + 1, column);
  const double curv = y0 - 2.0 * y1 + y2;
  if (curv != 0.0) {
    const double h = series.points[k].x - series.points[k - 1].x;
    const double off = 0.5 * (y0 - y2) / curv;
    e.x_refined = e.x_grid + off * h;
    e.value_refined = y1 - 0.125 * (y0 - y2) * (y0 - y2) / curv;
  }
  return e;
}

}  // namespace

Extremum locate_dip(const SeriesResult& series, SeriesColumn column) {
  return locate_extremum(series, column, /*want_max=*/false);
}

ExtremumPair extremum_pair(const SeriesResult& series, SeriesColumn column) {
  return ExtremumPair{
      locate_extremum(series, column, false),
      locate_extremum(series, column, true),
  };
}

}  // namespace omit
