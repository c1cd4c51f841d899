#pragma once

#include <functional>

#include "sdwave/spectral.hpp"
#include "sdwave/symbols.hpp"

namespace sdwave {

/// A zone-restricted radial L^2 norm request. The integrand is the squared
/// modulus before the r^{n-1} surface weight; the surface-measure constant is
/// omitted throughout (all downstream checks are rate fits or ratios).
struct NormRequest {
    std::function<double(double)> integrand;
    int n = 3;
    Zone zone = Zone::All;
    ZonePartition zp{};
    double t_hint = 0.0;   // oscillation wavelength hint ~ 2 pi / t_hint (interior/bounded)
    double r_cap = 1e6;    // truncation radius for the exterior zone
    double panel_width_scale = 1.0;  // < 1 refines panels; self-convergence knob
};

/// sqrt( int_zone integrand(r) r^{n-1} dr ) by composite 15-point
/// Gauss-Legendre panels. Panel width <= min(zone_width/16, pi/(8 t_hint));
/// the oscillation cap applies on the interior and bounded zones. The
/// exterior zone is integrated decade by decade up to r_cap with early stop
/// once a decade contributes <= 1e-8 of the running total; reaching r_cap
/// with a fatter tail throws TailNotConverged.
///
/// Panel evaluation is OpenMP-parallel; the reduction runs in fixed panel
/// order, so results are bit-identical for any thread count.
double radial_l2(const NormRequest& req);

/// Single-threaded reference implementation (same panel layout).
double radial_l2_serial(const NormRequest& req);

/// || chi_int r^s e^{-c r^2 mu(r) t} || -- the small-frequency multiplier norm.
double multiplier_small_norm(const SymbolSpec& sym, int n, double s, double c, double t,
                             const ZonePartition& zp = {});

/// sup over the exterior probe grid of mu(r)^{-ell} e^{-c t / mu(r)}; for
/// bounded symbols (no regularity loss) returns the envelope e^{-c t / sup mu}.
double multiplier_large_factor(const SymbolSpec& sym, double ell, double c, double t,
                               const ZonePartition& zp = {});

/// One 15-point Gauss-Legendre panel over [a, b]; exposed for tests.
double gauss15_panel(const std::function<double(double)>& f, double a, double b);

/// Composite panels of width <= max_width over [a, b], fixed-order reduction.
double integrate_interval(const std::function<double(double)>& f, double a, double b,
                          double max_width, bool parallel = true);

} // namespace sdwave
