#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sdwave/errors.hpp"
#include "sdwave/oracle.hpp"
#include "sdwave/spectral.hpp"

using namespace sdwave;

namespace {
const SymbolSpec kMu1 = make_fractional();

SymbolSpec const_symbol(double c) {
    SymbolSpec s;
    s.name = "const";
    s.fn = [c](double) { return c; };
    return s;
}
} // namespace

TEST_CASE("zero frequency integrates exactly: u = u0 + t u1") {
    const auto traj = rk4_mode(0.0, kMu1, 1.0, 2.0, 3.0, 0.1);
    CHECK(traj.back().u == doctest::Approx(7.0).epsilon(1e-13));
    CHECK(traj.back().v == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("RK4 matches the closed-form kernels at hand-picked points") {
    {
        const auto traj = rk4_mode(1.0, kMu1, 1.0, 0.0, 1.0, 1e-3);
        const double k0 = kernels(1.0, 1.0, kMu1).k0;
        CHECK(std::fabs(traj.back().u - k0) < 1e-8);
    }
    {
        const SymbolSpec sym = const_symbol(2.0);  // confluent at r = 1
        const auto traj = rk4_mode(1.0, sym, 0.0, 1.0, 1.0, 1e-3);
        CHECK(std::fabs(traj.back().u - std::exp(-1.0)) < 1e-8);
    }
}

TEST_CASE("step guard and budget") {
    CHECK(rk4_dt_guard(kMu1, 1.0) == doctest::Approx(0.1));
    CHECK(rk4_dt_guard(kMu1, 8.0) == doctest::Approx(0.5 / 65.0));
    CHECK_THROWS_AS(rk4_mode(1.0, kMu1, 1.0, 0.0, 1.0, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(rk4_mode(1.0, kMu1, 1.0, 0.0, 1e7, 1e-2), OracleBudgetError);
}

TEST_CASE("energy functional hand values") {
    {
        const EnergyFunctionals ef = energy_functionals({0.0, 0.0, 0.0}, 1.0, kMu1, 0.5);
        CHECK(ef.e0 == doctest::Approx(0.0));
        CHECK(ef.e == doctest::Approx(0.0));
        CHECK(ef.f == doctest::Approx(0.0));
        CHECK(ef.rr == doctest::Approx(0.0));
    }
    {
        // r = 1, mu = 1, beta = 1/2, u = 1, v = 0: rho = 1/2,
        // E = E0 + beta rho mu r^2 u^2 = 1 + 1/4 * ... = 1.25
        const EnergyFunctionals ef = energy_functionals({1.0, 0.0, 0.0}, 1.0, kMu1, 0.5);
        CHECK(ef.e0 == doctest::Approx(1.0));
        CHECK(ef.e == doctest::Approx(1.25));
        CHECK(ef.m1 == doctest::Approx(1.0625));
        CHECK(ef.m2 == doctest::Approx(8.0));
    }
}

TEST_CASE("functional equivalence (1-beta) E0 <= E <= 3 E0") {
    for (double beta : {0.25, 0.5, 0.75}) {
        for (double r : {0.05, 0.5, 1.0, 4.0}) {
            for (double u : {-2.0, 0.0, 1.0, 3.0}) {
                for (double v : {-1.0, 0.5, 2.0}) {
                    const EnergyFunctionals ef = energy_functionals({u, v, 0.0}, r, kMu1, beta);
                    CAPTURE(beta);
                    CAPTURE(r);
                    CAPTURE(u);
                    CAPTURE(v);
                    CHECK((1.0 - beta) * ef.e0 <= ef.e * (1.0 + 1e-12) + 1e-300);
                    CHECK(ef.e <= 3.0 * ef.e0 * (1.0 + 1e-12) + 1e-300);
                }
            }
        }
    }
}

TEST_CASE("dissipation inequality along RK4 trajectories") {
    for (double r : {0.1, 1.0, 4.0}) {
        const double dt = std::min(rk4_dt_guard(kMu1, r), 1e-3) / 2.0;
        const double u0 = std::exp(-r * r), v0 = r * std::exp(-r * r);
        const auto traj = rk4_mode(r, kMu1, u0, v0, 10.0, dt);
        const InequalityReport rep = check_dissipation_inequality(r, kMu1, 0.5, traj);
        CAPTURE(r);
        CAPTURE(rep.max_dissipation_residual);
        CAPTURE(rep.max_gronwall_excess);
        CHECK(rep.dissipation_ok);
        CHECK(rep.gronwall_ok);
        CHECK(rep.equivalence_ok);
    }
}

TEST_CASE("dissipation at r = 0 is trivial: E constant") {
    const auto traj = rk4_mode(0.0, kMu1, 1.0, 2.0, 3.0, 0.05);
    const InequalityReport rep = check_dissipation_inequality(0.0, kMu1, 0.5, traj);
    CHECK(rep.pass());
    const EnergyFunctionals first = energy_functionals(traj.front(), 0.0, kMu1, 0.5);
    const EnergyFunctionals last = energy_functionals(traj.back(), 0.0, kMu1, 0.5);
    CHECK(last.e == doctest::Approx(first.e).epsilon(1e-12));
}

TEST_CASE("energy identity dE0/dt = -2 mu r^2 v^2") {
    const double r = 0.7;
    const double dt = 1e-4;
    const auto traj = rk4_mode(r, kMu1, 1.0, 0.3, 2.0, dt);
    for (size_t i = 1; i + 1 < traj.size(); i += 50) {
        auto e0_at = [&](size_t j) {
            return traj[j].v * traj[j].v + r * r * traj[j].u * traj[j].u;
        };
        const double lhs = (e0_at(i + 1) - e0_at(i - 1)) / (2.0 * dt);
        const double rhs = -2.0 * r * r * traj[i].v * traj[i].v;
        CHECK(std::fabs(lhs - rhs) < 1e-5);
    }
}

TEST_CASE("monotone mode energy when damping is active") {
    const double r = 1.3;
    const auto traj = rk4_mode(r, kMu1, 1.0, -0.5, 8.0, 1e-3);
    double prev = 1e300;
    for (const auto& st : traj) {
        const double e0 = st.v * st.v + r * r * st.u * st.u;
        CHECK(e0 <= prev * (1.0 + 1e-10));
        prev = e0;
    }
}

TEST_CASE("fitted decay rate of E is at least c rho") {
    // Gronwall gives E(t) <= e^{-c rho t} E(0); the realized exponential rate
    // must therefore be at least c rho for beta = 1/2
    const double beta = 0.5;
    for (double r : {0.3, 1.0, 2.5}) {
        const double mu = eval_mu(kMu1, r);
        const double rho = key_rho(mu, r);
        const auto traj = rk4_mode(r, kMu1, 1.0, 0.0, 10.0, 1e-3);
        const EnergyFunctionals e_first = energy_functionals(traj.front(), r, kMu1, beta);
        const EnergyFunctionals e_last = energy_functionals(traj.back(), r, kMu1, beta);
        const double fitted_rate = -std::log(e_last.e / e_first.e) / traj.back().t;
        const double c = 2.0 * (1.0 - beta) / (e_first.m1 + e_first.m2);
        CAPTURE(r);
        CAPTURE(fitted_rate);
        CAPTURE(c * rho);
        CHECK(fitted_rate >= c * rho);
    }
}

TEST_CASE("kernel-oracle equivalence over seeded samples") {
    for (const auto& sym : builtin_catalog()) {
        const OracleCheckReport rep = kernel_oracle_check(sym, 50, 20240901u);
        CAPTURE(sym.name);
        CAPTURE(rep.max_err);
        CHECK(rep.pass);
    }
}

TEST_CASE("confluent radius search") {
    const auto rc = confluent_radius(kMu1);
    REQUIRE(rc.has_value());
    CHECK(*rc == doctest::Approx(2.0).epsilon(1e-9));
    // hypC-log sigma = 1 never reaches mu r = 2
    CHECK(!confluent_radius(make_hypc_log(1.0)).has_value());
}
