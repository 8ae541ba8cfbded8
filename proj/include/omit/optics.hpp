#pragma once

#include <complex>
#include <string>
#include <vector>

#include "omit/constants.hpp"
#include "omit/params.hpp"
#include "omit/response.hpp"

namespace omit {

/// Moving-medium configuration for the lateral drag displacement.
struct DragConfig {
  double v = 0.0;                     ///< medium velocity, m/s (signed)
  double l = 0.0;                     ///< medium length, m
  double c_light = kSpeedOfLight;     ///< vacuum light speed, m/s
  double omega_probe = 0.0;           ///< probe angular frequency in the group-index term

  std::vector<std::string> check() const;
  void validate() const;  // l > 0, c_light > 0, omega_probe > 0
};

/// How the complex indices reduce to the real displacement of the Fresnel
/// formula.  RealParts applies the formula to Re(n_g) and Re(n_r), which carry
/// the propagation semantics; ComplexThenReal takes the real part of the full
/// complex expression and is exposed for sensitivity studies.
enum class DragMode { RealParts, ComplexThenReal };

const char* to_string(DragMode mode);

/// One probe-detuning sample.  The definitional chain
///   chi = eps_T,  n_r = 1 + 2 pi chi,  n_g = n_r + 2 pi omega_probe dchi/dx
/// holds exactly (bitwise) between the stored fields.
struct SpectrumPoint {
  double x = 0.0;
  Complex eps_T;
  Complex chi;
  Complex n_r;
  Complex dchi_dx;
  Complex n_g;
  bool pole_limit = false;  ///< derivative/response evaluated on the limit branch
};

/// chi = eps_T.  The identification is its own function so the mapping has a
/// single auditable site.
inline Complex susceptibility(Complex eps_T) { return eps_T; }

/// n_r = 1 + 2 pi chi.  Note the column conventions downstream: the real part
/// is reported as absorption and the imaginary part as dispersion, which
/// inverts the more common usage.
inline Complex refractive_index(Complex chi) { return 1.0 + kTwoPi * chi; }

/// Closed-form derivative of eps_T_resonant with respect to x.  With
/// D(x) = kappa - i x + beta / S(x) and S(x) = gamma_m/2 - i x + N:
///   d chi / dx = -2 kappa D'(x) / D(x)^2,   D'(x) = -i + i beta / S(x)^2.
/// At the subfraction zero the response's 0-limit branch has the finite slope
/// -2 i kappa / beta, which is returned there (set *pole_limit when given).
Complex dchi_dx_analytic(const SystemParams& params, double x,
                         bool* pole_limit = nullptr);

/// Central finite difference (chi(x+h) - chi(x-h)) / (2h); the independent
/// cross-check for dchi_dx_analytic.
Complex dchi_dx_fd(const SystemParams& params, double x, double h);

/// Default step for dchi_dx_fd.
double default_fd_step(const SystemParams& params, double x);

/// n_g = n_r + 2 pi omega_probe * dchi/dx at detuning x.
Complex group_index(const SystemParams& params, double x, double omega_probe);

/// Lateral displacement of a beam crossing the moving medium:
///   delta_x = (n_g - 1/n_r) v l / c
/// reduced to real indices per DragMode.  Odd in v; exactly so in floating
/// point for sign flips and power-of-two scalings of v.  Throws domain_error
/// when the relevant n_r reduction is zero.
double light_drag(Complex n_g, Complex n_r, const DragConfig& cfg,
                  DragMode mode = DragMode::RealParts);

/// Full per-point evaluation maintaining the definitional chain bitwise.
SpectrumPoint evaluate_point(const SystemParams& params, double x, double omega_probe);

}  // namespace omit
