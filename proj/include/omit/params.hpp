#pragma once

#include <string>
#include <vector>

#include "omit/constants.hpp"

namespace omit {

/// Cavity/mechanics parameter set in one consistent angular-frequency unit
/// convention identified by `unit_scale` (default: units of the mechanical
/// damping rate, so gamma_m = 1). All response formulas are scale-invariant;
/// the tag exists so outputs are self-describing and sets from different
/// conventions cannot be mixed silently.
struct SystemParams {
  double kappa = 0.0;    ///< cavity field decay rate
  double omega_m = 0.0;  ///< mechanical resonator frequency
  double gamma_m = 0.0;  ///< mechanical momentum damping rate
  double beta = 0.0;     ///< effective drive strength (angular frequency squared)
  std::string unit_scale = "gamma_m";

  /// One message per violated field; empty when valid.
  std::vector<std::string> check() const;

  /// Throws validation_error listing every violated field.
  void validate() const;

  static SystemParams validated(double kappa, double omega_m, double gamma_m,
                                double beta, std::string unit_scale = "gamma_m");
};

/// Microscopic provenance for the effective drive strength: coupling
/// constant, pump amplitude and resonator mass. Optional; the response
/// depends on (kappa, omega_m, gamma_m, beta) only.
struct MicroscopicParams {
  double g_m = 0.0;             ///< optomechanical coupling, omega_c / L
  double pump_amplitude = 0.0;  ///< driving-field amplitude
  double mass = 0.0;            ///< resonator mass, kg
  double hbar = kHbar;          ///< settable so records can pin a value

  /// 2 m omega_m / hbar, always recomputed.
  double Lambda(double omega_m) const { return 2.0 * mass * omega_m / hbar; }

  std::vector<std::string> check() const;
  void validate() const;
};

/// Drive strength from microscopic inputs:
///   beta = g_m^2 eps0^2 / (Lambda (kappa^2 + omega_m^2)).
/// Quadratic in the pump amplitude.
double compute_beta(const MicroscopicParams& micro, double kappa, double omega_m);

/// Simultaneous zero of the response subfraction denominator.  Solving
/// gamma_m/2 - i x - beta/(kappa - 2 i omega_m) = 0 for real (x, beta) gives
///   x0    = -omega_m gamma_m / kappa
///   beta0 =  gamma_m (4 omega_m^2 + kappa^2) / (2 kappa)
/// At (x0, beta0) the probe response vanishes (perfect transparency).
struct PoleConditions {
  double x0 = 0.0;
  double beta0 = 0.0;
};

PoleConditions pole_conditions(const SystemParams& params);

/// Ideal drive strength beta0 for given cavity/mechanics rates.
double beta_ideal(double kappa, double omega_m, double gamma_m);

}  // namespace omit
