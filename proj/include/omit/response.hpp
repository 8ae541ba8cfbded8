#pragma once

#include <complex>

#include "omit/params.hpp"

namespace omit {

using Complex = std::complex<double>;

/// Nonlinear correction term N = -beta / (kappa - 2 i omega_m), evaluated in
/// real arithmetic (N = -beta (kappa + 2 i omega_m) / (kappa^2 + 4 omega_m^2))
/// so that scaling beta by a power of two scales N exactly.
Complex compute_N(const SystemParams& params);

/// Probe-frequency output response at detuning x = delta - omega_m:
///
///   eps_T(x) = 2 kappa / (kappa - i x + beta / (gamma_m/2 - i x + N))
///
/// The subfraction denominator vanishes at (x0, beta0) from pole_conditions;
/// there the subfraction diverges and the response goes to zero, so an exact
/// (or < 1e-300) zero of the denominator returns the analytic limit 0 rather
/// than a floating-point infinity.  beta = 0 short-circuits to the bare-cavity
/// Lorentzian 2 kappa / (kappa - i x), bit-identical to evaluating it directly.
Complex eps_T_resonant(const SystemParams& params, double x);

/// Same response with the nonlinear term dropped (N = 0), i.e. the result of
/// linearising the equations of motion before solving.  Coincides with
/// eps_T_resonant exactly when beta = 0; elsewhere the subfraction pole moves
/// and the perfect-transparency point is lost.
Complex eps_T_linearized(const SystemParams& params, double x);

/// Un-approximated first-order sideband amplitude:
///
///   c+ = 1 / ( kappa + i (Delta - delta)
///            + beta / ( (delta^2 - omega_m^2 + i delta gamma_m) / (2 i omega_m)
///                       - beta / (kappa - i (Delta + delta)) ) )
///
/// Near resonance (Delta ~ delta ~ omega_m, x = delta - omega_m) this reduces
/// to eps_T_resonant(x) / (2 kappa).  Inner-denominator zeros use the same
/// analytic-limit convention as eps_T_resonant.
Complex c_plus_full(const SystemParams& params, double Delta, double delta);

}  // namespace omit
