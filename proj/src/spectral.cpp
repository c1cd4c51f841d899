#include "sdwave/spectral.hpp"

#include <cmath>
#include <limits>

#include "sdwave/errors.hpp"

namespace sdwave {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// cosh(sqrt(z)) and sinh(sqrt(z))/sqrt(z) as entire functions of z; valid for
// small |z| of either sign. Used inside the confluent band where direct
// evaluation of the root-difference quotients cancels catastrophically.
double cosh_sqrt(double z) { return 1.0 + z * (0.5 + z * (1.0 / 24.0 + z / 720.0)); }
double sinhc_sqrt(double z) { return 1.0 + z * (1.0 / 6.0 + z * (1.0 / 120.0 + z / 5040.0)); }
} // namespace

Zone zone_of(double r, const ZonePartition& zp) {
    if (r <= zp.eps) return Zone::Interior;
    if (r >= zp.bigN) return Zone::Exterior;
    return Zone::Bounded;
}

const char* to_string(Zone z) {
    switch (z) {
        case Zone::Interior: return "interior";
        case Zone::Bounded: return "bounded";
        case Zone::Exterior: return "exterior";
        default: return "all";
    }
}

CharRoots char_roots(double mu_val, double r) {
    CharRoots out;
    const double mr = mu_val * r;
    out.discriminant = mr * mr - 4.0;
    const double half = 0.5 * mu_val * r * r;

    if (out.discriminant < -kConfluentTol) {
        out.regime = RootRegime::Oscillatory;
        const double omega = 0.5 * r * std::sqrt(-out.discriminant);
        out.lambda_plus = {-half, omega};
        out.lambda_minus = {-half, -omega};
    } else if (out.discriminant > kConfluentTol) {
        out.regime = RootRegime::Overdamped;
        // The fast root has no cancellation; the slow one comes from Vieta
        // (lambda_plus * lambda_minus = r^2).
        const double fast = -half - 0.5 * r * std::sqrt(out.discriminant);
        out.lambda_minus = {fast, 0.0};
        out.lambda_plus = {r * r / fast, 0.0};
    } else {
        out.regime = RootRegime::Confluent;
        out.lambda_plus = {-half, 0.0};
        out.lambda_minus = {-half, 0.0};
    }
    return out;
}

double key_rho(double mu_val, double r) {
    const double r2mu = r * r * mu_val;
    return r2mu / (1.0 + r2mu * mu_val);
}

KernelValue kernels(double t, double r, const SymbolSpec& sym) {
    KernelValue kv;
    if (r == 0.0) {
        // zero-frequency ODE u_tt = 0
        kv.k0 = 1.0;
        kv.k1 = t;
        kv.h0 = 1.0;
        kv.h1 = t;
        kv.g0 = kNaN;
        kv.g1 = kNaN;
        return kv;
    }

    const double mu = eval_mu(sym, r);
    const double mr2 = mu * r * r;
    const double a = 0.5 * mr2;
    const double disc = mu * mu * r * r - 4.0;
    const double damp = std::exp(-a * t);

    if (disc < -kConfluentTol) {
        const double omega = 0.5 * r * std::sqrt(-disc);
        const double wt = omega * t;
        const double s = std::sin(wt), c = std::cos(wt);
        const double sinc = wt != 0.0 && std::fabs(wt) > 1e-8 ? s / omega
                                                              : t * (1.0 - wt * wt / 6.0);
        kv.k0 = damp * (c + a * sinc);
        kv.k1 = damp * sinc;
    } else if (disc > kConfluentTol) {
        const double fast = -a - 0.5 * r * std::sqrt(disc);
        const double slow = r * r / fast;
        const double gap = slow - fast;
        const double es = std::exp(slow * t), ef = std::exp(fast * t);
        kv.k0 = (slow * ef - fast * es) / gap;
        kv.k1 = (es - ef) / gap;
    } else {
        // confluent band: series in z = (r^2 disc / 4) t^2 around the double root
        const double z = 0.25 * r * r * disc * t * t;
        const double f = sinhc_sqrt(z);
        kv.k0 = damp * (cosh_sqrt(z) + a * t * f);
        kv.k1 = damp * t * f;
    }

    kv.h0 = std::cos(r * t) * damp;
    kv.h1 = (std::sin(r * t) / r) * damp;
    if (mr2 > 0.0) {
        kv.g0 = std::exp(-t / mu);
        kv.g1 = kv.g0 / mr2;
    } else {
        kv.g0 = t == 0.0 ? 1.0 : 0.0;  // limit of e^{-t/mu} as mu -> 0+
        kv.g1 = kNaN;
    }
    return kv;
}

double g1_checked(const KernelValue& kv) {
    if (std::isnan(kv.g1))
        throw ProfileSingularityError("exterior profile g1 undefined: mu * r^2 == 0");
    return kv.g1;
}

double fourier_solution(double t, double r, const SymbolSpec& sym, const RadialProfile& u0hat,
                        const RadialProfile& u1hat) {
    const KernelValue kv = kernels(t, r, sym);
    return kv.k0 * u0hat(r) + kv.k1 * u1hat(r);
}

} // namespace sdwave
