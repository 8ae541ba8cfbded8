#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "omit/errors.hpp"
#include "omit/response.hpp"
#include "reference_values.hpp"

using omit::Complex;
using omit::SystemParams;

namespace {

SystemParams fig2_base(double beta = refvals::kBeta0Fig2) {
  return SystemParams{1e4, 1e4, 1.0, beta, "gamma_m"};
}

bool close_rel(Complex a, Complex b, double tol) {
  return std::abs(a - b) <= tol * std::abs(b);
}

double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

TEST_CASE("compute_N closed form") {
  CHECK(omit::compute_N(SystemParams{1.0, 0.5, 0.0, 0.0}) == Complex(0.0, 0.0));

  // hand-checked complex division: -2/(1-i) = -1-i
  const Complex n = omit::compute_N(SystemParams{1.0, 0.5, 0.1, 2.0});
  CHECK(n.real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(n.imag() == doctest::Approx(-1.0).epsilon(1e-15));

  // fig2 base: exactly representable components
  CHECK(omit::compute_N(fig2_base()) == Complex(-0.5, -1.0));

  // |N| = beta / sqrt(kappa^2 + 4 omega_m^2)
  const SystemParams p{137.0, 41.5, 1.0, 7.25};
  CHECK(std::abs(omit::compute_N(p)) ==
        doctest::Approx(p.beta / std::hypot(p.kappa, 2.0 * p.omega_m)).epsilon(1e-14));
}

TEST_CASE("compute_N scales exactly with power-of-two beta") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    SystemParams p{1.0 + 1e3 * u01(rng), 1.0 + 1e3 * u01(rng), 1.0, 1e4 * u01(rng)};
    SystemParams p2 = p;
    p2.beta = 2.0 * p.beta;
    CHECK(omit::compute_N(p2) == 2.0 * omit::compute_N(p));
  }
}

TEST_CASE("eps_T_resonant reduces to the bare cavity at beta = 0") {
  SystemParams p = fig2_base(0.0);
  CHECK(omit::eps_T_resonant(p, 0.0) == Complex(2.0, 0.0));
  for (int i = 0; i <= 2000; ++i) {
    const double x = -6.0 + 12.0 * i / 2000.0;
    const Complex ref = 2.0 * p.kappa / Complex(p.kappa, -x);
    CHECK(omit::eps_T_resonant(p, x) == ref);  // identical operations, 0 ulp
  }
}

TEST_CASE("perfect transparency at the subfraction zero") {
  SystemParams p = fig2_base();
  const auto pc = omit::pole_conditions(p);
  p.beta = pc.beta0;
  CHECK(omit::eps_T_resonant(p, pc.x0) == Complex(0.0, 0.0));

  // |eps_T| stays small (continuous in beta) just off the ideal drive
  for (double f : {1.0 - 1e-9, 1.0 + 1e-9}) {
    SystemParams q = p;
    q.beta = f * pc.beta0;
    CHECK(std::abs(omit::eps_T_resonant(q, pc.x0)) < 1e-6);
  }
}

TEST_CASE("eps_T_resonant frozen spot value") {
  CHECK(close_rel(omit::eps_T_resonant(fig2_base(), 0.3), refvals::kEpsT_x03, 1e-13));
}

TEST_CASE("pole_conditions closed form") {
  SUBCASE("kappa = omega_m puts the zero at -gamma_m") {
    const auto pc = omit::pole_conditions(SystemParams{1e4, 1e4, 1.0, 0.0});
    CHECK(pc.x0 == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(pc.beta0 == doctest::Approx(25000.0).epsilon(1e-15));
  }
  SUBCASE("undamped resonator") {
    const auto pc = omit::pole_conditions(SystemParams{2.0, 3.0, 0.0, 0.0});
    CHECK(pc.x0 == 0.0);
    CHECK(pc.beta0 == 0.0);
  }
  SUBCASE("hand-evaluated values") {
    const auto pc = omit::pole_conditions(SystemParams{2.0, 3.0, 0.1, 0.0});
    CHECK(pc.x0 == doctest::Approx(-0.15).epsilon(1e-15));
    CHECK(pc.beta0 == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("the returned pair actually zeroes the subfraction") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      const double kappa = std::exp(std::log(1e2) + std::log(1e4) * u01(rng));
      const double om = std::exp(std::log(1e2) + std::log(1e4) * u01(rng));
      const double gm = 0.1 + 4.0 * u01(rng);
      SystemParams p{kappa, om, gm, 0.0};
      const auto pc = omit::pole_conditions(p);
      p.beta = pc.beta0;
      const Complex sub = Complex(0.5 * p.gamma_m, -pc.x0) + omit::compute_N(p);
      CHECK(std::abs(sub) < 1e-12 * (0.5 * gm));
    }
  }
}

TEST_CASE("eps_T_linearized") {
  SUBCASE("identical to the resonant response at beta = 0") {
    SystemParams p = fig2_base(0.0);
    for (double x : {-3.0, -1.0, 0.0, 0.5, 2.7}) {
      CHECK(omit::eps_T_linearized(p, x) == omit::eps_T_resonant(p, x));
    }
  }
  SUBCASE("difference to the resonant response shrinks monotonically with beta") {
    const double b0 = refvals::kBeta0Fig2;
    double prev = 1e300;
    for (double beta : {b0, b0 / 10.0, b0 / 100.0}) {
      SystemParams p = fig2_base(beta);
      const double d = std::abs(omit::eps_T_resonant(p, 0.0) - omit::eps_T_linearized(p, 0.0));
      CHECK(d < prev);
      prev = d;
    }
  }
  SUBCASE("stays finite at the transparency point of the resonant response") {
    SystemParams p = fig2_base();
    const auto pc = omit::pole_conditions(p);
    p.beta = pc.beta0;
    CHECK(omit::eps_T_resonant(p, pc.x0) == Complex(0.0, 0.0));
    CHECK(close_rel(omit::eps_T_linearized(p, pc.x0), refvals::kEpsTLin_pole, 1e-13));
  }
}

TEST_CASE("c_plus_full") {
  SUBCASE("empty cavity at Delta = delta is 1/kappa") {
    SystemParams p = fig2_base(0.0);
    CHECK(omit::c_plus_full(p, p.omega_m, p.omega_m) == Complex(1.0 / p.kappa, 0.0));
  }
  SUBCASE("matches the resonant response near resonance, off the ideal drive") {
    SystemParams p = fig2_base(0.5 * refvals::kBeta0Fig2);
    double worst = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double x = -5.0 + 10.0 * i / 2000.0;
      const Complex approx = omit::eps_T_resonant(p, x);
      const Complex full = 2.0 * p.kappa * omit::c_plus_full(p, p.omega_m, p.omega_m + x);
      worst = std::max(worst, std::abs(full - approx) / std::abs(approx));
    }
    CHECK(worst < 1e-3);
  }
  SUBCASE("frozen near-resonance and far-detuned values") {
    SystemParams p = fig2_base();
    const Complex nearres = 2.0 * p.kappa * omit::c_plus_full(p, p.omega_m, p.omega_m + 0.3);
    CHECK(close_rel(nearres, refvals::kApprox2kCp_x03, 1e-10));
    const Complex far = 2.0 * p.kappa * omit::c_plus_full(p, 0.5 * p.omega_m, p.omega_m + 0.3);
    CHECK(close_rel(far, refvals::kApprox2kCp_far, 1e-10));
    // the resonance form is an approximation: the far-detuned value is different
    CHECK(std::abs(far - omit::eps_T_resonant(p, 0.3)) > 0.3);
  }
}

TEST_CASE("parameter validation lists every violated field") {
  SystemParams p{-1.0, 2.0, -3.0, -4.0, ""};
  try {
    p.validate();
    FAIL("expected validation_error");
  } catch (const omit::validation_error& e) {
    CHECK(e.fields().size() == 4);
  }
  CHECK_NOTHROW(SystemParams::validated(1.0, 2.0, 0.0, 0.0));
}
