#include "omit/params.hpp"

#include <cmath>

#include "omit/errors.hpp"

namespace omit {

std::vector<std::string> SystemParams::check() const {
  std::vector<std::string> bad;
  if (!(std::isfinite(kappa) && kappa > 0.0)) bad.push_back("kappa: must be finite and > 0");
  if (!(std::isfinite(omega_m) && omega_m > 0.0)) bad.push_back("omega_m: must be finite and > 0");
  if (!(std::isfinite(gamma_m) && gamma_m >= 0.0)) bad.push_back("gamma_m: must be finite and >= 0");
  if (!(std::isfinite(beta) && beta >= 0.0)) bad.push_back("beta: must be finite and >= 0");
  if (unit_scale.empty()) bad.push_back("unit_scale: tag must be present");
  return bad;
}

void SystemParams::validate() const {
  auto bad = check();
  if (!bad.empty()) throw validation_error(std::move(bad));
}

SystemParams SystemParams::validated(double kappa, double omega_m, double gamma_m,
                                     double beta, std::string unit_scale) {
  SystemParams p{kappa, omega_m, gamma_m, beta, std::move(unit_scale)};
  p.validate();
  return p;
}

std::vector<std::string> MicroscopicParams::check() const {
  std::vector<std::string> bad;
  if (!(std::isfinite(g_m) && g_m > 0.0)) bad.push_back("g_m: must be finite and > 0");
  if (!(std::isfinite(pump_amplitude) && pump_amplitude >= 0.0))
    bad.push_back("pump_amplitude: must be finite and >= 0");
  if (!(std::isfinite(mass) && mass > 0.0)) bad.push_back("mass: must be finite and > 0");
  if (!(std::isfinite(hbar) && hbar > 0.0)) bad.push_back("hbar: must be finite and > 0");
  return bad;
}

void MicroscopicParams::validate() const {
  auto bad = check();
  if (!bad.empty()) throw validation_error(std::move(bad));
}

double compute_beta(const MicroscopicParams& micro, double kappa, double omega_m) {
  auto bad = micro.check();
  if (!(std::isfinite(kappa) && kappa > 0.0)) bad.push_back("kappa: must be finite and > 0");
  if (!(std::isfinite(omega_m) && omega_m > 0.0)) bad.push_back("omega_m: must be finite and > 0");
  if (!bad.empty()) throw validation_error(std::move(bad));

  const double num = micro.g_m * micro.g_m * micro.pump_amplitude * micro.pump_amplitude;
  return num / (micro.Lambda(omega_m) * (kappa * kappa + omega_m * omega_m));
}

double beta_ideal(double kappa, double omega_m, double gamma_m) {
  return gamma_m * (4.0 * omega_m * omega_m + kappa * kappa) / (2.0 * kappa);
}

PoleConditions pole_conditions(const SystemParams& params) {
  return PoleConditions{
      -params.omega_m * params.gamma_m / params.kappa,
      beta_ideal(params.kappa, params.omega_m, params.gamma_m),
  };
}

}  // namespace omit
