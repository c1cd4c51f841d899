#include "sdwave/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>

#include "sdwave/errors.hpp"
#include "sdwave/spectral.hpp"

namespace sdwave {

double rk4_dt_guard(const SymbolSpec& sym, double r) {
    const double mu = r > 0.0 ? eval_mu(sym, r) : 0.0;
    return std::min({0.1, 0.5 / (1.0 + mu * r * r), 0.5 / (1.0 + r)});
}

std::vector<ModeState> rk4_mode(double r, const SymbolSpec& sym, double u0, double v0,
                                double t_end, double dt) {
    if (!(t_end > 0.0) || !(dt > 0.0)) throw std::invalid_argument("rk4_mode: t_end, dt > 0");
    const double guard = rk4_dt_guard(sym, r);
    if (dt > guard * (1.0 + 1e-12))
        throw std::invalid_argument("rk4_mode: dt exceeds the stiffness guard");
    const double steps_needed = std::ceil(t_end / dt - 1e-12);
    if (steps_needed > 1e8) throw OracleBudgetError("rk4_mode: more than 1e8 steps");

    const long n = static_cast<long>(steps_needed);
    const double h = t_end / n;
    const double mu = r > 0.0 ? eval_mu(sym, r) : 0.0;
    const double damping = mu * r * r;
    const double stiffness = r * r;

    // u' = v, v' = -damping v - stiffness u
    auto acc = [damping, stiffness](double u, double v) { return -damping * v - stiffness * u; };

    std::vector<ModeState> traj;
    traj.reserve(n + 1);
    double u = u0, v = v0;
    traj.push_back({u, v, 0.0});
    for (long i = 0; i < n; ++i) {
        const double k1u = v, k1v = acc(u, v);
        const double k2u = v + 0.5 * h * k1v, k2v = acc(u + 0.5 * h * k1u, v + 0.5 * h * k1v);
        const double k3u = v + 0.5 * h * k2v, k3v = acc(u + 0.5 * h * k2u, v + 0.5 * h * k2v);
        const double k4u = v + h * k3v, k4v = acc(u + h * k3u, v + h * k3v);
        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        traj.push_back({u, v, (i + 1) * h});
    }
    return traj;
}

EnergyFunctionals energy_functionals(const ModeState& state, double r, const SymbolSpec& sym,
                                     double beta) {
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("energy_functionals: beta in (0,1)");
    const double mu = r > 0.0 ? eval_mu(sym, r) : 0.0;
    const double rho = key_rho(mu, r);
    const double u = state.u, v = state.v;
    EnergyFunctionals ef;
    ef.beta = beta;
    ef.m1 = 1.0 + beta * beta / 4.0;
    ef.m2 = 4.0 + 2.0 / beta;
    ef.e0 = v * v + r * r * u * u;
    ef.e = ef.e0 + 2.0 * beta * rho * u * v + beta * rho * mu * r * r * u * u;
    ef.f = mu * r * r * v * v + beta * rho * r * r * u * u;
    ef.rr = beta * rho * v * v;
    return ef;
}

InequalityReport check_dissipation_inequality(double r, const SymbolSpec& sym, double beta,
                                              const std::vector<ModeState>& trajectory) {
    if (trajectory.size() < 2)
        throw std::invalid_argument("check_dissipation_inequality: trajectory too short");

    const double mu = r > 0.0 ? eval_mu(sym, r) : 0.0;
    const double rho = key_rho(mu, r);

    InequalityReport rep;
    const EnergyFunctionals first = energy_functionals(trajectory.front(), r, sym, beta);
    rep.rate_constant = 2.0 * (1.0 - beta) / (first.m1 + first.m2);
    rep.slack = 1e-6 * first.e;

    double max_res = -std::numeric_limits<double>::infinity();
    double max_gr = -std::numeric_limits<double>::infinity();
    double max_eq = -std::numeric_limits<double>::infinity();

    EnergyFunctionals prev = first;
    for (size_t i = 0; i + 1 < trajectory.size(); ++i) {
        const EnergyFunctionals next =
            energy_functionals(trajectory[i + 1], r, sym, beta);
        const double h = trajectory[i + 1].t - trajectory[i].t;
        const double residual = (next.e - prev.e) / h + (1.0 - beta) * (prev.f + next.f);
        max_res = std::max(max_res, residual);
        prev = next;
    }
    for (const auto& st : trajectory) {
        const EnergyFunctionals ef = energy_functionals(st, r, sym, beta);
        max_gr = std::max(max_gr,
                          ef.e - std::exp(-rep.rate_constant * rho * st.t) * first.e);
        const double lower = (1.0 - beta) * ef.e0 - ef.e;
        const double upper = ef.e - 3.0 * ef.e0;
        max_eq = std::max({max_eq, lower, upper});
    }

    rep.max_dissipation_residual = max_res;
    rep.max_gronwall_excess = max_gr;
    rep.max_equivalence_violation = max_eq;
    rep.dissipation_ok = max_res <= rep.slack;
    rep.gronwall_ok = max_gr <= rep.slack;
    rep.equivalence_ok = max_eq <= rep.slack + 1e-12 * first.e0;
    return rep;
}

std::optional<double> confluent_radius(const SymbolSpec& sym, double r_lo, double r_hi) {
    auto gap = [&sym](double r) { return eval_mu(sym, r) * r - 2.0; };
    // scan for a sign change, then bisect
    const int scan = 512;
    double prev_r = r_lo, prev_g = gap(r_lo);
    for (int i = 1; i <= scan; ++i) {
        const double r = r_lo + (r_hi - r_lo) * i / scan;
        const double g = gap(r);
        if (prev_g == 0.0) return prev_r;
        if (prev_g * g < 0.0) {
            double a = prev_r, b = r;
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (a + b);
                if (gap(a) * gap(mid) <= 0.0)
                    b = mid;
                else
                    a = mid;
            }
            return 0.5 * (a + b);
        }
        prev_r = r;
        prev_g = g;
    }
    return std::nullopt;
}

namespace {

// deterministic uniform double in [0, 1) from the top 53 bits
double uniform01(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

OracleCheckRow check_point(const SymbolSpec& sym, double r, double t, double rel_tol,
                           bool confluent) {
    OracleCheckRow row;
    row.r = r;
    row.t = t;
    row.confluent = confluent;
    const KernelValue kv = kernels(t, r, sym);
    row.k0_closed = kv.k0;
    row.k1_closed = kv.k1;
    const double dt = std::min(rk4_dt_guard(sym, r) / 20.0, t);
    row.k0_rk4 = rk4_mode(r, sym, 1.0, 0.0, t, dt).back().u;
    row.k1_rk4 = rk4_mode(r, sym, 0.0, 1.0, t, dt).back().u;
    const double e0 = std::fabs(row.k0_rk4 - row.k0_closed) / (1.0 + std::fabs(row.k0_closed));
    const double e1 = std::fabs(row.k1_rk4 - row.k1_closed) / (1.0 + std::fabs(row.k1_closed));
    row.err = std::max(e0, e1);
    row.pass = row.err <= rel_tol;
    return row;
}

} // namespace

OracleCheckReport kernel_oracle_check(const SymbolSpec& sym, int samples, std::uint64_t seed,
                                      double rel_tol) {
    OracleCheckReport rep;
    rep.symbol = sym.name;

    std::mt19937_64 rng(seed);
    std::vector<std::pair<double, double>> points;
    points.reserve(samples + 1);
    for (int i = 0; i < samples; ++i) {
        const double r = 8.0 * uniform01(rng());
        const double t = 0.01 + 9.99 * uniform01(rng());
        points.emplace_back(r, t);
    }
    if (const auto rc = confluent_radius(sym)) points.emplace_back(*rc, 1.0);

    rep.rows.resize(points.size());
    const auto count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        const bool confluent = i >= samples;
        rep.rows[i] =
            check_point(sym, points[i].first, points[i].second, rel_tol, confluent);
    }

    rep.pass = true;
    for (const auto& row : rep.rows) {
        rep.max_err = std::max(rep.max_err, row.err);
        rep.pass = rep.pass && row.pass;
    }
    return rep;
}

} // namespace sdwave
