#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "sdwave/errors.hpp"
#include "sdwave/spectral.hpp"

using namespace sdwave;

namespace {

const SymbolSpec kMu1 = make_fractional();  // mu == 1

SymbolSpec const_symbol(double c) {
    SymbolSpec s;
    s.name = "const";
    s.fn = [c](double) { return c; };
    return s;
}

// grid used by the pointwise-bound and difference-property checks
std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> g(count);
    const double step = std::log(hi / lo) / (count - 1);
    for (int i = 0; i < count; ++i) g[i] = lo * std::exp(step * i);
    return g;
}

} // namespace

TEST_CASE("characteristic roots: examples and Vieta") {
    {
        const CharRoots cr = char_roots(1.0, 1.0);
        CHECK(cr.regime == RootRegime::Oscillatory);
        CHECK(cr.lambda_plus.real() == doctest::Approx(-0.5).epsilon(1e-12));
        CHECK(cr.lambda_plus.imag() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
    }
    {
        const CharRoots cr = char_roots(2.0, 1.0);
        CHECK(cr.regime == RootRegime::Confluent);
        CHECK(cr.lambda_plus.real() == doctest::Approx(-1.0));
        CHECK(cr.lambda_minus.real() == doctest::Approx(-1.0));
    }
    {
        const CharRoots cr = char_roots(1.0, 10.0);
        CHECK(cr.regime == RootRegime::Overdamped);
        const auto prod = cr.lambda_plus * cr.lambda_minus;
        const auto sum = cr.lambda_plus + cr.lambda_minus;
        CHECK(prod.real() == doctest::Approx(100.0).epsilon(1e-12));
        CHECK(sum.real() == doctest::Approx(-100.0).epsilon(1e-12));
    }
}

TEST_CASE("Vieta relations and root signs over a grid") {
    for (double mu : {0.0, 0.3, 1.0, 2.0, 5.0}) {
        for (double r : {1e-3, 0.1, 0.5, 1.0, 2.0, 7.3, 50.0}) {
            const CharRoots cr = char_roots(mu, r);
            const auto prod = cr.lambda_plus * cr.lambda_minus;
            const auto sum = cr.lambda_plus + cr.lambda_minus;
            CAPTURE(mu);
            CAPTURE(r);
            CHECK(std::abs(prod - std::complex<double>(r * r, 0.0)) <= 1e-12 * r * r);
            CHECK(std::abs(sum - std::complex<double>(-mu * r * r, 0.0)) <=
                  1e-12 * (1.0 + mu * r * r));
            if (mu > 0.0) {
                CHECK(cr.lambda_plus.real() <= 0.0);
                CHECK(cr.lambda_minus.real() <= 0.0);
            }
        }
    }
}

TEST_CASE("key function rho") {
    CHECK(key_rho(1.0, 1.0) == doctest::Approx(0.5));
    CHECK(key_rho(0.0, 5.0) == doctest::Approx(0.0));
    CHECK(key_rho(2.0, 2.0) == doctest::Approx(8.0 / 17.0).epsilon(1e-12));
}

TEST_CASE("zone classification is sharp") {
    const ZonePartition zp;
    CHECK(zone_of(0.1, zp) == Zone::Interior);
    CHECK(zone_of(0.5, zp) == Zone::Interior);
    CHECK(zone_of(1.0, zp) == Zone::Bounded);
    CHECK(zone_of(2.0, zp) == Zone::Exterior);
}

TEST_CASE("kernels at t = 0 are the ODE initial conditions") {
    for (double r : {0.0, 0.2, 1.0, 3.0, 8.0}) {
        const KernelValue kv = kernels(0.0, r, kMu1);
        CAPTURE(r);
        CHECK(kv.k0 == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(kv.k1 == doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_CASE("kernel examples: confluent and oscillatory points") {
    // confluent double root at mu r = 2: k1 = t e^{lambda t}
    const KernelValue confl = kernels(1.0, 1.0, const_symbol(2.0));
    CHECK(confl.k1 == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));

    // sin(omega t) = 0 at t = 2 pi / sqrt(3) for mu = r = 1
    const double t_zero = 2.0 * M_PI / std::sqrt(3.0);
    const KernelValue osc = kernels(t_zero, 1.0, kMu1);
    CHECK(osc.k1 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("zero frequency: k0 = 1, k1 = t") {
    const KernelValue kv = kernels(3.0, 0.0, kMu1);
    CHECK(kv.k0 == doctest::Approx(1.0));
    CHECK(kv.k1 == doctest::Approx(3.0));
    CHECK(kv.h1 == doctest::Approx(3.0));
    CHECK(std::isnan(kv.g1));
    CHECK_THROWS_AS(g1_checked(kv), ProfileSingularityError);
}

TEST_CASE("kernels satisfy the mode ODE (finite differences)") {
    const double dt = 1e-4;
    for (const auto& [mu, r] : std::vector<std::pair<double, double>>{
             {1.0, 0.3}, {1.0, 1.0}, {2.0, 1.0}, {1.0, 5.0}, {0.5, 8.0}}) {
        const SymbolSpec sym = const_symbol(mu);
        for (double t : {0.5, 1.0, 2.5}) {
            const KernelValue km = kernels(t - dt, r, sym);
            const KernelValue k0v = kernels(t, r, sym);
            const KernelValue kp = kernels(t + dt, r, sym);
            for (bool first : {true, false}) {
                const double ym = first ? km.k0 : km.k1;
                const double y = first ? k0v.k0 : k0v.k1;
                const double yp = first ? kp.k0 : kp.k1;
                const double ypp = (yp - 2.0 * y + ym) / (dt * dt);
                const double yd = (yp - ym) / (2.0 * dt);
                const double residual = ypp + mu * r * r * yd + r * r * y;
                CAPTURE(mu);
                CAPTURE(r);
                CAPTURE(t);
                CAPTURE(first);
                CHECK(std::fabs(residual) <= 1e-5 * (r * r * std::fabs(y) + 1.0));
            }
        }
    }
}

TEST_CASE("kernels are continuous across the regime boundaries") {
    // evaluate at discriminants +-1e-7 (inside the confluent band) and
    // +-(tol + 1e-7) (just outside); neighbours must agree to 1e-5 relative
    for (double r : {0.5, 1.0, 2.0, 8.0}) {
        for (double t : {0.5, 2.0, 10.0}) {
            auto k_at_disc = [&](double disc) {
                const double mu = std::sqrt(4.0 + disc) / r;
                return kernels(t, r, const_symbol(mu));
            };
            for (double base : {1e-7, kConfluentTol + 1e-7}) {
                for (double sign : {-1.0, 1.0}) {
                    const KernelValue a = k_at_disc(sign * base);
                    const KernelValue b = k_at_disc(-sign * 1e-7);
                    CAPTURE(r);
                    CAPTURE(t);
                    CAPTURE(base);
                    CAPTURE(sign);
                    CHECK(std::fabs(a.k0 - b.k0) <= 1e-5 * (1.0 + std::fabs(b.k0)));
                    CHECK(std::fabs(a.k1 - b.k1) <= 1e-5 * (1.0 + std::fabs(b.k1)));
                }
            }
        }
    }
}

TEST_CASE("pointwise kernel bound: |k0| <= C e^{-rho t / 4} off the bounded zone") {
    for (const SymbolSpec& sym : {kMu1, make_power_law(1.0)}) {
        double fitted_c = 0.0;
        for (double r : log_grid(1e-3, 0.5, 20)) {  // interior
            const double rho = key_rho(eval_mu(sym, r), r);
            for (double t : log_grid(0.1, 100.0, 25))
                fitted_c = std::max(
                    fitted_c, std::fabs(kernels(t, r, sym).k0) * std::exp(0.25 * rho * t));
        }
        for (double r : log_grid(2.0, 64.0, 20)) {  // exterior
            const double rho = key_rho(eval_mu(sym, r), r);
            for (double t : log_grid(0.1, 100.0, 25))
                fitted_c = std::max(
                    fitted_c, std::fabs(kernels(t, r, sym).k0) * std::exp(0.25 * rho * t));
        }
        CAPTURE(sym.name);
        CHECK(std::isfinite(fitted_c));
        CHECK(fitted_c < 10.0);
    }
}

TEST_CASE("profile decay identity: h0^2 + (r h1)^2 = e^{-mu r^2 t}") {
    for (double r : {0.1, 0.4, 1.0, 3.0}) {
        for (double t : {0.0, 1.0, 10.0}) {
            const KernelValue kv = kernels(t, r, kMu1);
            const double lhs = kv.h0 * kv.h0 + r * r * kv.h1 * kv.h1;
            const double rhs = std::exp(-r * r * t);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
            CHECK(lhs <= rhs * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("exterior profile differences (regularity-loss symbols)") {
    // |k0 - g0| <= C e^{-c t/mu}/(mu^2 r^2), |k1 - g1| <= C e^{-c t/mu}/(mu^3 r^4)
    // fitted with c = 1/2 on r in [N, 64], t in [1, 100]
    for (const SymbolSpec& sym : {make_power_law(1.0), make_power_law(2.0)}) {
        double c0 = 0.0, c1 = 0.0;
        for (double r : log_grid(2.0, 64.0, 24)) {
            const double mu = eval_mu(sym, r);
            for (double t : log_grid(1.0, 100.0, 24)) {
                const KernelValue kv = kernels(t, r, sym);
                const double envelope = std::exp(-0.5 * t / mu);
                c0 = std::max(c0, std::fabs(kv.k0 - kv.g0) * mu * mu * r * r / envelope);
                c1 = std::max(c1, std::fabs(kv.k1 - g1_checked(kv)) * mu * mu * mu * r * r * r *
                                      r / envelope);
            }
        }
        CAPTURE(sym.name);
        CHECK(std::isfinite(c0));
        CHECK(c0 < 10.0);
        CHECK(std::isfinite(c1));
        CHECK(c1 < 10.0);
    }
}

TEST_CASE("interior profile differences") {
    // |k0 - h0| <= C mu r e^{-mu r^2 t / 4}, |k1 - h1| <= C mu e^{-mu r^2 t / 4}
    for (const SymbolSpec& sym : {kMu1, make_power_law(1.0), make_logarithmic(1.0)}) {
        double c0 = 0.0, c1 = 0.0;
        for (double r : log_grid(1e-3, 0.5, 24)) {
            const double mu = eval_mu(sym, r);
            if (mu == 0.0) continue;
            for (double t : log_grid(0.1, 1000.0, 24)) {
                const KernelValue kv = kernels(t, r, sym);
                const double envelope = std::exp(-0.25 * mu * r * r * t);
                c0 = std::max(c0, std::fabs(kv.k0 - kv.h0) / (mu * r * envelope));
                c1 = std::max(c1, std::fabs(kv.k1 - kv.h1) / (mu * envelope));
            }
        }
        CAPTURE(sym.name);
        CHECK(std::isfinite(c0));
        CHECK(c0 < 10.0);
        CHECK(std::isfinite(c1));
        CHECK(c1 < 10.0);
    }
}

TEST_CASE("fourier_solution combines kernels and data") {
    const RadialProfile ones = RadialProfile::constant(1.0);
    const RadialProfile twos = RadialProfile::constant(2.0);
    const RadialProfile gauss = RadialProfile::gaussian(1.0);

    // t = 0 returns u0_hat
    CHECK(fourier_solution(0.0, 0.7, kMu1, gauss, ones) ==
          doctest::Approx(gauss(0.7)).epsilon(1e-14));
    // confluent point: u0 == 0, u1 == 1 gives k1 = e^{-1}
    CHECK(fourier_solution(1.0, 1.0, const_symbol(2.0), RadialProfile::zero(), ones) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    // zero frequency: u0 + t u1
    CHECK(fourier_solution(3.0, 0.0, kMu1, ones, twos) == doctest::Approx(7.0));
}
