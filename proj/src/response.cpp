#include "omit/response.hpp"

#include <cmath>

#include "omit/constants.hpp"

namespace omit {

Complex compute_N(const SystemParams& p) {
  // -beta (kappa + 2 i omega_m) / (kappa^2 + 4 omega_m^2)
  const double d = p.kappa * p.kappa + 4.0 * p.omega_m * p.omega_m;
  return {-p.beta * p.kappa / d, -2.0 * p.beta * p.omega_m / d};
}

namespace {

Complex subfraction_denominator(const SystemParams& p, double x) {
  return Complex(0.5 * p.gamma_m, -x) + compute_N(p);
}

}  // namespace

Complex eps_T_resonant(const SystemParams& p, double x) {
  const Complex outer(p.kappa, -x);
  if (p.beta == 0.0) return 2.0 * p.kappa / outer;
  const Complex sub = subfraction_denominator(p, x);
  if (std::abs(sub) < kPoleEps) return {0.0, 0.0};
  return 2.0 * p.kappa / (outer + p.beta / sub);
}

Complex eps_T_linearized(const SystemParams& p, double x) {
  const Complex outer(p.kappa, -x);
  if (p.beta == 0.0) return 2.0 * p.kappa / outer;
  const Complex sub(0.5 * p.gamma_m, -x);
  if (std::abs(sub) < kPoleEps) return {0.0, 0.0};  // only reachable at gamma_m = 0, x = 0
  return 2.0 * p.kappa / (outer + p.beta / sub);
}

Complex c_plus_full(const SystemParams& p, double Delta, double delta) {
  const Complex outer(p.kappa, Delta - delta);
  if (p.beta == 0.0) return 1.0 / outer;
  const Complex inner(p.kappa, -(Delta + delta));
  const Complex mech(delta * delta - p.omega_m * p.omega_m, delta * p.gamma_m);
  const Complex sub = mech / Complex(0.0, 2.0 * p.omega_m) - p.beta / inner;
  if (std::abs(sub) < kPoleEps) return {0.0, 0.0};
  return 1.0 / (outer + p.beta / sub);
}

}  // namespace omit
