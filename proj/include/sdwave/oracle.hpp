#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdwave/symbols.hpp"

namespace sdwave {

/// One Fourier mode of the damped wave equation: u = u_hat(t, r), v = u_hat_t.
struct ModeState {
    double u = 0.0, v = 0.0, t = 0.0;
};

/// Largest admissible RK4 step at frequency r: min(0.1, 0.5/(1+mu r^2), 0.5/(1+r)).
double rk4_dt_guard(const SymbolSpec& sym, double r);

/// Classical RK4 trajectory of u'' + mu(r) r^2 u' + r^2 u = 0, sampled every
/// step (including t = 0). dt must satisfy the stiffness guard; the step count
/// is capped at 1e8 (OracleBudgetError beyond).
std::vector<ModeState> rk4_mode(double r, const SymbolSpec& sym, double u0, double v0,
                                double t_end, double dt);

/// The Lyapunov functionals of the per-mode energy estimate:
///   E0 = v^2 + r^2 u^2
///   E  = E0 + 2 beta rho u v + beta rho mu r^2 u^2
///   F  = mu r^2 v^2 + beta rho r^2 u^2
///   R  = beta rho v^2
/// with rho = key_rho(mu, r), and the admissible constants M1 = 1 + beta^2/4,
/// M2 = 4 + 2/beta.
struct EnergyFunctionals {
    double e0 = 0.0, e = 0.0, f = 0.0, rr = 0.0;
    double beta = 0.0, m1 = 0.0, m2 = 0.0;
};

EnergyFunctionals energy_functionals(const ModeState& state, double r, const SymbolSpec& sym,
                                     double beta);

/// Discrete verification of the dissipation chain along a trajectory:
///   dE/dt + 2(1-beta) F <= 0          (checked with trapezoidal F)
///   (1-beta) E0 <= E <= 3 E0          (functional equivalence)
///   E(t) <= e^{-c rho t} E(0),  c = 2(1-beta)/(M1+M2)
/// All within slack 1e-6 * E(0). Violations are reported, not thrown.
struct InequalityReport {
    double slack = 0.0;
    double max_dissipation_residual = 0.0;
    bool dissipation_ok = false;
    double max_gronwall_excess = 0.0;
    bool gronwall_ok = false;
    double max_equivalence_violation = 0.0;
    bool equivalence_ok = false;
    double rate_constant = 0.0;  // c = 2(1-beta)/(M1+M2)

    bool pass() const { return dissipation_ok && gronwall_ok && equivalence_ok; }
};

InequalityReport check_dissipation_inequality(double r, const SymbolSpec& sym, double beta,
                                              const std::vector<ModeState>& trajectory);

/// One kernel-vs-RK4 comparison point.
struct OracleCheckRow {
    double r = 0.0, t = 0.0;
    double k0_closed = 0.0, k0_rk4 = 0.0;
    double k1_closed = 0.0, k1_rk4 = 0.0;
    double err = 0.0;  // max relative-to-(1+|closed|) deviation
    bool confluent = false;
    bool pass = false;
};

struct OracleCheckReport {
    std::string symbol;
    std::vector<OracleCheckRow> rows;
    double max_err = 0.0;
    bool pass = false;
};

/// Radius where mu(r) r = 2 (double characteristic root), if one exists in
/// (r_lo, r_hi).
std::optional<double> confluent_radius(const SymbolSpec& sym, double r_lo = 1e-3,
                                       double r_hi = 8.0);

/// Seeded random (r, t) in [0,8] x [0,10]; RK4 at dt = guard/20 against the
/// closed-form kernels, plus one confluent-regime point where reachable.
OracleCheckReport kernel_oracle_check(const SymbolSpec& sym, int samples, std::uint64_t seed,
                                      double rel_tol = 1e-6);

} // namespace sdwave
