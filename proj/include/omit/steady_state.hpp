#pragma once

#include <complex>

#include "omit/params.hpp"
#include "omit/response.hpp"

namespace omit {

/// Zeroth- and first-order steady-state amplitudes of the driven cavity and
/// resonator, with the probe amplitude normalised to 1.  chi0 is the coupling
/// prefactor of the radiation-pressure force; it is taken as hbar * g_m.
struct SteadyState {
  double q0 = 0.0;       ///< mean mechanical displacement
  Complex c0;            ///< mean intracavity amplitude
  Complex c_plus;        ///< upper-sideband amplitude
  Complex c_minus;       ///< lower-sideband amplitude
  Complex q_plus;        ///< first-order displacement amplitude
  Complex q_minus;       ///< computed independently; equals conj(q_plus)
  Complex M;             ///< dimensionless sideband-coupling factor
  double beta = 0.0;     ///< drive strength derived from the microscopic inputs
  double chi0 = 0.0;     ///< hbar * g_m

  /// |q_plus - conj(q_minus)| / |q_plus|; zero up to roundoff by construction.
  double conjugate_pairing_residual() const;
};

/// Solves the steady state at pump detuning Delta and probe-pump detuning
/// delta.  The drive strength is derived from the microscopic inputs via
/// compute_beta, which keeps the record self-consistent whatever params.beta
/// says.  Throws domain_error when the sideband relation degenerates (M = 1)
/// or the cavity denominator kappa + i Delta vanishes.
SteadyState steady_state(const SystemParams& params, const MicroscopicParams& micro,
                         double Delta, double delta);

}  // namespace omit
