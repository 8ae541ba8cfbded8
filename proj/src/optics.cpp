#include "omit/optics.hpp"

#include <cmath>
#include <vector>

#include "omit/errors.hpp"

namespace omit {

std::vector<std::string> DragConfig::check() const {
  std::vector<std::string> bad;
  if (!(std::isfinite(v))) bad.push_back("v: must be finite");
  if (!(std::isfinite(l) && l > 0.0)) bad.push_back("l: must be finite and > 0");
  if (!(std::isfinite(c_light) && c_light > 0.0)) bad.push_back("c_light: must be finite and > 0");
  if (!(std::isfinite(omega_probe) && omega_probe > 0.0))
    bad.push_back("omega_probe: must be finite and > 0");
  return bad;
}

void DragConfig::validate() const {
  auto bad = check();
  if (!bad.empty()) throw validation_error(std::move(bad));
}

const char* to_string(DragMode mode) {
  return mode == DragMode::RealParts ? "real-parts" : "complex-then-real";
}

Complex dchi_dx_analytic(const SystemParams& p, double x, bool* pole_limit) {
  if (pole_limit) *pole_limit = false;
  const Complex outer(p.kappa, -x);
  if (p.beta == 0.0) {
    return Complex(0.0, 2.0 * p.kappa) / (outer * outer);
  }
  const Complex sub = Complex(0.5 * p.gamma_m, -x) + compute_N(p);
  if (std::abs(sub) < kPoleEps) {
    // slope of the 0-limit branch: chi ~ 2 kappa S(x) / beta near S = 0
    if (pole_limit) *pole_limit = true;
    return Complex(0.0, -2.0 * p.kappa / p.beta);
  }
  const Complex D = outer + p.beta / sub;
  const Complex Dprime = Complex(0.0, -1.0) + Complex(0.0, 1.0) * p.beta / (sub * sub);
  return -2.0 * p.kappa * Dprime / (D * D);
}

Complex dchi_dx_fd(const SystemParams& p, double x, double h) {
  return (eps_T_resonant(p, x + h) - eps_T_resonant(p, x - h)) / (2.0 * h);
}

double default_fd_step(const SystemParams& p, double x) {
  // floor keeps the step positive when gamma_m = 0 and x = 0
  return std::max({1e-6 * p.gamma_m, 1e-9 * std::abs(x), 1e-12});
}

Complex group_index(const SystemParams& p, double x, double omega_probe) {
  const Complex n_r = refractive_index(susceptibility(eps_T_resonant(p, x)));
  return n_r + kTwoPi * omega_probe * dchi_dx_analytic(p, x);
}

double light_drag(Complex n_g, Complex n_r, const DragConfig& cfg, DragMode mode) {
  if (mode == DragMode::RealParts) {
    if (n_r.real() == 0.0) throw domain_error("singular refractive index: Re(n_r) = 0");
    const double coeff = (n_g.real() - 1.0 / n_r.real()) * (cfg.l / cfg.c_light);
    return coeff * cfg.v;
  }
  if (std::abs(n_r) == 0.0) throw domain_error("singular refractive index: n_r = 0");
  const Complex coeff = (n_g - 1.0 / n_r) * (cfg.l / cfg.c_light);
  return coeff.real() * cfg.v;
}

SpectrumPoint evaluate_point(const SystemParams& p, double x, double omega_probe) {
  SpectrumPoint pt;
  pt.x = x;
  pt.eps_T = eps_T_resonant(p, x);
  pt.chi = susceptibility(pt.eps_T);
  pt.n_r = refractive_index(pt.chi);
  pt.dchi_dx = dchi_dx_analytic(p, x, &pt.pole_limit);
  pt.n_g = pt.n_r + kTwoPi * omega_probe * pt.dchi_dx;
  return pt;
}

}  // namespace omit
