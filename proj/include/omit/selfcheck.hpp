#pragma once

#include <functional>
#include <string>
#include <vector>

#include "omit/params.hpp"
#include "omit/response.hpp"

namespace omit {

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;   ///< worst observed error
  double threshold = 0.0;
  std::string detail;
};

/// Worst-case relative disagreement between a resonant-response callable and
/// the full sideband amplitude over |x| <= 5 gamma_m (2001 points), measured
/// pointwise.  Parameterised on the response so a deliberately broken variant
/// can be shown to trip the check.
double appendix_equivalence_error(
    const SystemParams& params,
    const std::function<Complex(const SystemParams&, double)>& response = eps_T_resonant);

/// Same comparison normalised by the curve scale (sup norm); well defined
/// even when the response has an exact zero inside the window.
double appendix_equivalence_error_supnorm(
    const SystemParams& params,
    const std::function<Complex(const SystemParams&, double)>& response = eps_T_resonant);

/// The embedded invariant suite: derivative cross-check, appendix
/// equivalence, pole transparency, conjugate pairing.  Deterministic.
std::vector<CheckResult> run_selfcheck();

}  // namespace omit
