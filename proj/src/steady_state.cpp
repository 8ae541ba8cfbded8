#include "omit/steady_state.hpp"

#include <cmath>

#include "omit/constants.hpp"
#include "omit/errors.hpp"

namespace omit {

double SteadyState::conjugate_pairing_residual() const {
  const double scale = std::abs(q_plus);
  if (scale == 0.0) return std::abs(q_plus - std::conj(q_minus));
  return std::abs(q_plus - std::conj(q_minus)) / scale;
}

SteadyState steady_state(const SystemParams& params, const MicroscopicParams& micro,
                         double Delta, double delta) {
  params.validate();
  micro.validate();

  const double m = micro.mass;
  const double om = params.omega_m;
  const double gm = params.gamma_m;
  const double kappa = params.kappa;

  SteadyState st;
  st.chi0 = micro.hbar * micro.g_m;
  st.beta = compute_beta(micro, kappa, om);

  const Complex cavity(kappa, Delta);
  if (std::abs(cavity) < kPoleEps) throw domain_error("kappa + i Delta vanishes");
  st.c0 = micro.pump_amplitude / cavity;
  st.q0 = st.chi0 * std::norm(st.c0) / (m * om * om);

  // mechanical susceptibility denominators of the +/- sidebands
  const Complex mech_plus(om * om - delta * delta, -delta * gm);
  const Complex mech_minus(om * om - delta * delta, +delta * gm);

  st.M = (Complex(0.0, -1.0) * std::norm(st.c0) * st.chi0 * st.chi0) /
         (m * micro.hbar * mech_plus * Complex(kappa, -(Delta + delta)));
  const Complex one_minus_M = 1.0 - st.M;
  if (std::abs(one_minus_M) < kPoleEps)
    throw domain_error("degenerate sideband relation: M = 1");

  st.c_plus = c_plus_full(SystemParams{kappa, om, gm, st.beta, params.unit_scale},
                          Delta, delta);
  // c0 c-* = (M / (1 - M)) c0* c+; with no pump the relation degenerates to
  // 0 = 0 and nothing scatters into the lower sideband
  st.c_minus = st.c0 == Complex(0.0, 0.0)
                   ? Complex(0.0, 0.0)
                   : std::conj((st.M / one_minus_M) * std::conj(st.c0) * st.c_plus / st.c0);

  st.q_plus = st.chi0 * (st.c0 * std::conj(st.c_minus) + std::conj(st.c0) * st.c_plus) /
              (m * mech_plus);
  st.q_minus = st.chi0 * (st.c0 * std::conj(st.c_plus) + std::conj(st.c0) * st.c_minus) /
               (m * mech_minus);
  return st;
}

}  // namespace omit
