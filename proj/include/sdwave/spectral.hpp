#pragma once

#include <complex>

#include "sdwave/profiles.hpp"
#include "sdwave/symbols.hpp"

namespace sdwave {

/// Frequency-zone split: interior r <= eps, bounded eps < r < N, exterior r >= N.
struct ZonePartition {
    double eps = 0.5;
    double bigN = 2.0;
};

enum class Zone { Interior, Bounded, Exterior, All };

/// Sharp zone classification (boundary r = N goes to Exterior). Never returns All.
Zone zone_of(double r, const ZonePartition& zp = {});

const char* to_string(Zone z);

enum class RootRegime { Oscillatory, Confluent, Overdamped };

/// Regime tolerance on the scaled discriminant mu^2 r^2 - 4.
inline constexpr double kConfluentTol = 1e-6;

/// Roots of lambda^2 + mu r^2 lambda + r^2 = 0.
struct CharRoots {
    std::complex<double> lambda_plus;   // the slow root (closest to 0)
    std::complex<double> lambda_minus;  // the fast root
    RootRegime regime = RootRegime::Oscillatory;
    double discriminant = 0.0;          // mu^2 r^2 - 4
};

CharRoots char_roots(double mu_val, double r);

/// Key decay-rate function rho(r) = r^2 mu / (1 + r^2 mu^2).
double key_rho(double mu_val, double r);

/// Per-frequency solution kernels and the four profile multipliers.
/// g0/g1 are the exterior evolution factors e^{-t/mu} and e^{-t/mu}/(mu r^2);
/// they are NaN where undefined (r == 0, or mu r^2 == 0 for g1) because the
/// exterior profile is never used there.
struct KernelValue {
    double k0 = 0.0, k1 = 0.0;
    double g0 = 0.0, g1 = 0.0;
    double h0 = 0.0, h1 = 0.0;
};

KernelValue kernels(double t, double r, const SymbolSpec& sym);

/// Checked access to g1; throws ProfileSingularityError where it is undefined.
double g1_checked(const KernelValue& kv);

/// u_hat(t, r) = K0(t,r) u0_hat(r) + K1(t,r) u1_hat(r).
double fourier_solution(double t, double r, const SymbolSpec& sym, const RadialProfile& u0hat,
                        const RadialProfile& u1hat);

} // namespace sdwave
