#pragma once

#include <string>
#include <vector>

#include "sdwave/profiles.hpp"
#include "sdwave/quadrature.hpp"
#include "sdwave/spectral.hpp"
#include "sdwave/symbols.hpp"

namespace sdwave {

/// Query for the interior integrability exponent
///   alpha_sup = sup { alpha : int_0^eps r^{2s+n-1-2 alpha} mu(r)^{-alpha} dr < infinity }.
/// The canonical set restricts alpha >= 0 and is empty when 2s + n <= 0;
/// allow_negative opts into the signed continuation (needed by the
/// low-dimension solution-itself experiments at s = -1).
struct AlphaQuery {
    SymbolSpec sym;
    int n = 3;
    double s = 0.0;
    double eps = 0.5;
    double tol = 1e-2;
    bool allow_negative = false;
};

enum class AlphaKind { Value, Unbounded, Undecided };

struct AlphaResult {
    AlphaKind kind = AlphaKind::Value;
    double value = 0.0;
};

/// Bisection on alpha; an exponent is admissible iff the local log-log slope
/// of the integrand near r = 0 stays above -1 (with margin 1e-3). Symbols with
/// a non-settling slope report Undecided; a set unbounded from above reports
/// Unbounded (power-law beta = -2 boundary behaviour).
AlphaResult alpha_sup(const AlphaQuery& q);

enum class Quantity { SolutionItself, EnergyGrad, EnergyTime, ProfileResidual };
const char* to_string(Quantity q);

/// A full decay experiment: symbol, dimension, data profiles, zone split.
struct ProblemSetup {
    SymbolSpec sym;
    int n = 3;
    RadialProfile u0hat = RadialProfile::zero();
    RadialProfile u1hat = RadialProfile::zero();
    ZonePartition zp{};
    double s = 0.0, ell0 = 0.0, ell1 = 0.0;
    double r_cap = 1e6;
};

struct SeriesPoint {
    double t = 0.0, norm = 0.0;
};

/// Zone-restricted norm of the selected quantity at one time.
/// SolutionItself: |u_hat|^2; EnergyGrad: r^2 |u_hat|^2; EnergyTime: |u_hat_t|^2
/// (time derivatives via dK0/dt = -r^2 K1, dK1/dt = K0 - mu r^2 K1);
/// ProfileResidual: |u_hat - chi_int (H-profile) - chi_ext (G-profile)|^2.
double norm_at(const ProblemSetup& p, Quantity q, Zone zone, double t);

std::vector<SeriesPoint> norm_series(const ProblemSetup& p, Quantity q, Zone zone,
                                     const std::vector<double>& times);

std::vector<double> geometric_times(double t_min, double t_max, int count);

/// Fitted log-log slope over the last decade of the series window.
struct DecayFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;
    double t_min = 0.0, t_max = 0.0;  // fitted window
};

DecayFit fit_decay(const std::vector<SeriesPoint>& series);

enum class DecayClass { Polynomial, Exponential };
const char* to_string(DecayClass c);

/// Exponential when the fitted slope dives below -8, or when the series
/// collapses below the floating-point floor inside the window (decay faster
/// than any polynomial the window could show).
struct Classification {
    DecayClass cls = DecayClass::Polynomial;
    double slope = 0.0;
    bool underflow_truncated = false;
};

Classification classify_series(const std::vector<SeriesPoint>& series);

/// Exterior-zone decay-class probe with AlgebraicTail(a_data) u0 data.
/// For borderline data (a = (n + 2 ell beta)/2 for power laws) the fitted
/// polynomial slope approaches -ell.
struct LossReport {
    LossClass symbol_class = LossClass::Finite;
    DecayClass fitted = DecayClass::Polynomial;
    double slope = 0.0;
    std::vector<SeriesPoint> series;
};

LossReport regularity_loss_probe(const SymbolSpec& sym, int n, double ell, double a_data,
                                 double t_min = 1.0, double t_max = 100.0, int count = 12,
                                 double r_cap = 1e10);

/// Profile experiments in dimensions n <= 2 additionally need
/// mu(r) <~ r^{-1/2 + delta0} near the origin; true when the probe trend of
/// r^{1/2 - delta0} mu(r) stays bounded toward r = 0.
bool small_frequency_profile_ok(const SymbolSpec& sym, double delta0 = 0.05);

} // namespace sdwave
