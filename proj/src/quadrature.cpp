#include "sdwave/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "sdwave/errors.hpp"

namespace sdwave {

namespace {

// 15-point Gauss-Legendre rule on [-1, 1]; exact for degree <= 29.
constexpr int kGaussN = 15;
constexpr double kGauss[kGaussN][2] = {
    {-9.87992518020485377e-01, 3.07532419961186465e-02},
    {-9.37273392400705951e-01, 7.03660474881080689e-02},
    {-8.48206583410427206e-01, 1.07159220467171773e-01},
    {-7.24417731360170070e-01, 1.39570677926153908e-01},
    {-5.70972172608538830e-01, 1.66269205816993781e-01},
    {-3.94151347077563385e-01, 1.86161000015561878e-01},
    {-2.01194093997434514e-01, 1.98431485327111246e-01},
    {0.00000000000000000e+00, 2.02578241925560898e-01},
    {2.01194093997434514e-01, 1.98431485327111246e-01},
    {3.94151347077563385e-01, 1.86161000015561878e-01},
    {5.70972172608538830e-01, 1.66269205816993781e-01},
    {7.24417731360170070e-01, 1.39570677926153908e-01},
    {8.48206583410427206e-01, 1.07159220467171773e-01},
    {9.37273392400705951e-01, 7.03660474881080689e-02},
    {9.87992518020485377e-01, 3.07532419961186465e-02},
};

constexpr int kPanelsPerZone = 16;
constexpr double kTailRatio = 1e-8;
constexpr int kLeftGradeLevels = 12;  // geometric subdivision of the first interior panel

struct Panel {
    double a, b;
};

// Uniform panels of width <= max_width. With grade_left, the first panel is
// further split geometrically toward `a`, which keeps shrinking Gaussian
// peaks (mass at r ~ t^{-1/(2+beta)}) resolved at large t.
void build_panels(double a, double b, double max_width, bool grade_left,
                  std::vector<Panel>& out) {
    if (!(b > a)) return;
    const int m = std::max(1, static_cast<int>(std::ceil((b - a) / max_width)));
    const double h = (b - a) / m;
    if (grade_left) {
        double lo = a;
        for (int j = kLeftGradeLevels; j >= 1; --j) {
            const double hi = a + std::ldexp(h, -j);
            out.push_back({lo, hi});
            lo = hi;
        }
        out.push_back({lo, a + h});
    } else {
        out.push_back({a, a + h});
    }
    for (int i = 1; i < m; ++i) out.push_back({a + i * h, a + (i + 1) * h});
}

double eval_panel(const std::function<double(double)>& f, const Panel& p) {
    const double mid = 0.5 * (p.a + p.b);
    const double halfw = 0.5 * (p.b - p.a);
    double sum = 0.0;
    for (const auto& nw : kGauss) sum += nw[1] * f(mid + halfw * nw[0]);
    return sum * halfw;
}

double sum_panels(const std::function<double(double)>& f, const std::vector<Panel>& panels,
                  bool parallel) {
    const auto count = static_cast<long>(panels.size());
    if (!parallel) {
        double total = 0.0;
        for (long i = 0; i < count; ++i) {
            const double v = eval_panel(f, panels[i]);
            if (!std::isfinite(v)) throw NonFiniteIntegrand("non-finite panel integral");
            total += v;
        }
        return total;
    }
    std::vector<double> partial(panels.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) partial[i] = eval_panel(f, panels[i]);
    double total = 0.0;
    for (long i = 0; i < count; ++i) {
        if (!std::isfinite(partial[i])) throw NonFiniteIntegrand("non-finite panel integral");
        total += partial[i];
    }
    return total;
}

double panel_width_cap(double zone_width, double t_hint, double scale) {
    double w = zone_width / kPanelsPerZone;
    if (t_hint > 0.0) w = std::min(w, M_PI / (8.0 * std::max(t_hint, 1.0)));
    return w * scale;
}

// int_a^b f(r) r^{n-1} dr over one finite stretch.
double weighted_segment(const NormRequest& req, double a, double b, double t_hint,
                        bool grade_left, bool parallel) {
    std::vector<Panel> panels;
    build_panels(a, b, panel_width_cap(b - a, t_hint, req.panel_width_scale), grade_left, panels);
    const int n = req.n;
    auto f = [&req, n](double r) { return req.integrand(r) * std::pow(r, n - 1); };
    return sum_panels(f, panels, parallel);
}

double exterior_integral(const NormRequest& req, bool parallel) {
    const double cap = req.r_cap;
    if (!(cap > req.zp.bigN)) throw ConfigError("radial_l2: r_cap must exceed the zone bound N");
    double running = 0.0;
    double last = 0.0;
    double lo = req.zp.bigN;
    int decade = 0;
    while (lo < cap) {
        const double hi = std::min(lo * 10.0, cap);
        last = weighted_segment(req, lo, hi, 0.0, false, parallel);
        running += last;
        if (decade >= 1 && last <= kTailRatio * running) return running;
        lo = hi;
        ++decade;
    }
    if (last > kTailRatio * running)
        throw TailNotConverged("exterior tail still contributes " + std::to_string(last) +
                               " of " + std::to_string(running) + " at r_cap");
    return running;
}

double radial_l2_impl(const NormRequest& req, bool parallel) {
    if (!(req.zp.eps > 0.0 && req.zp.eps < req.zp.bigN))
        throw ConfigError("radial_l2: need 0 < eps < N");
    if (req.n < 1) throw ConfigError("radial_l2: need n >= 1");

    double total = 0.0;
    if (req.zone == Zone::Interior || req.zone == Zone::All)
        total += weighted_segment(req, 0.0, req.zp.eps, req.t_hint, true, parallel);
    if (req.zone == Zone::Bounded || req.zone == Zone::All)
        total += weighted_segment(req, req.zp.eps, req.zp.bigN, req.t_hint, false, parallel);
    if (req.zone == Zone::Exterior || req.zone == Zone::All)
        total += exterior_integral(req, parallel);
    if (!std::isfinite(total) || total < 0.0)
        throw NonFiniteIntegrand("radial_l2: non-finite total");
    return std::sqrt(total);
}

} // namespace

double gauss15_panel(const std::function<double(double)>& f, double a, double b) {
    return eval_panel(f, {a, b});
}

double integrate_interval(const std::function<double(double)>& f, double a, double b,
                          double max_width, bool parallel) {
    std::vector<Panel> panels;
    build_panels(a, b, max_width, false, panels);
    return sum_panels(f, panels, parallel);
}

double radial_l2(const NormRequest& req) { return radial_l2_impl(req, true); }

double radial_l2_serial(const NormRequest& req) { return radial_l2_impl(req, false); }

double multiplier_small_norm(const SymbolSpec& sym, int n, double s, double c, double t,
                             const ZonePartition& zp) {
    if (!(s > -0.5 * n))
        throw DivergentSmallFrequency("multiplier_small_norm: need s > -n/2");
    if (!(c > 0.0)) throw ConfigError("multiplier_small_norm: need c > 0");
    NormRequest req;
    req.n = n;
    req.zone = Zone::Interior;
    req.zp = zp;
    req.integrand = [&sym, s, c, t](double r) {
        const double mu = eval_mu(sym, r);
        return std::pow(r, 2.0 * s) * std::exp(-2.0 * c * r * r * mu * t);
    };
    return radial_l2(req);
}

double multiplier_large_factor(const SymbolSpec& sym, double ell, double c, double t,
                               const ZonePartition& zp) {
    if (ell < 0.0 || !(c > 0.0) || t < 0.0)
        throw ConfigError("multiplier_large_factor: need ell >= 0, c > 0, t >= 0");

    const LossClass cls = sym.declared_large_mu ? sym.loss_class()
                                                : check_hypotheses(sym).regularity_class;

    // eighth-octave probe grid on [N, 2^40]
    const double grid_factor = std::pow(2.0, 0.125);
    const double grid_max = std::ldexp(1.0, 40);

    if (cls == LossClass::Finite) {
        double sup_mu = 0.0;
        if (sym.declared_large_mu && !sym.declared_large_mu->infinite &&
            sym.declared_large_mu->value > 0.0)
            sup_mu = sym.declared_large_mu->value;
        for (double r = zp.bigN; r <= grid_max; r *= grid_factor)
            sup_mu = std::max(sup_mu, eval_mu(sym, r));
        return std::exp(-c * t / sup_mu);
    }

    double best_log = -std::numeric_limits<double>::infinity();
    for (double r = zp.bigN; r <= grid_max; r *= grid_factor) {
        const double mu = eval_mu(sym, r);
        if (mu <= 0.0) continue;
        best_log = std::max(best_log, -ell * std::log(mu) - c * t / mu);
    }
    return std::exp(best_log);
}

} // namespace sdwave
