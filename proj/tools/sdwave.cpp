// Command-line front end: hypothesis checks, alpha exponents, norm series,
// decay fits, profile comparisons, the RK4 oracle table, and the canned
// theorem scenario suite. Exit codes: 0 = all checks passed, 1 = a check
// failed (outputs still written), 2 = configuration error (nothing written).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sdwave/decay.hpp"
#include "sdwave/errors.hpp"
#include "sdwave/oracle.hpp"
#include "sdwave/runner.hpp"

namespace {

using namespace sdwave;

Quantity parse_quantity(const std::string& q) {
    if (q == "solution") return Quantity::SolutionItself;
    if (q == "energy-grad") return Quantity::EnergyGrad;
    if (q == "energy-time") return Quantity::EnergyTime;
    if (q == "profile-residual") return Quantity::ProfileResidual;
    throw ConfigError("unknown quantity '" + q +
                      "' (solution, energy-grad, energy-time, profile-residual)");
}

Zone parse_zone(const std::string& z) {
    if (z == "interior") return Zone::Interior;
    if (z == "bounded") return Zone::Bounded;
    if (z == "exterior") return Zone::Exterior;
    if (z == "all") return Zone::All;
    throw ConfigError("unknown zone '" + z + "' (interior, bounded, exterior, all)");
}

std::vector<double> parse_times(const std::string& text) {
    double t_min = 0, t_max = 0;
    int count = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d", &t_min, &t_max, &count) != 3)
        throw ConfigError("bad --times '" + text + "' (expected tmin:tmax:count)");
    return geometric_times(t_min, t_max, count);
}

void emit(const std::string& output, const std::vector<SeriesRow>& rows) {
    if (output.empty()) {
        std::ostringstream os;
        os << "t,norm,quantity,zone,symbol,n\n";
        for (const auto& r : rows)
            os << format_double(r.t) << ',' << format_double(r.norm) << ',' << r.quantity
               << ',' << r.zone << ',' << r.symbol << ',' << r.n << '\n';
        std::cout << os.str();
    } else {
        write_series_csv(output, rows);
    }
}

struct CommonArgs {
    std::string symbol = "fractional";
    int n = 3;
    double s = 0.0, ell0 = 0.0, ell1 = 0.0;
    std::string u0 = "zero", u1 = "zero";
    std::string quantity = "solution";
    std::string zone = "interior";
    std::string times = "1:10000:12";
    double eps = 0.5, bigN = 2.0, r_cap = 1e6;
    std::string output;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--symbol", a.symbol, "symbol name[:key=val,...]");
    cmd->add_option("--n", a.n, "space dimension");
    cmd->add_option("--s", a.s, "Sobolev order of the requested norm");
    cmd->add_option("--ell0", a.ell0, "mu-weight order on the u0 datum");
    cmd->add_option("--ell1", a.ell1, "mu-weight order on the u1 datum");
    cmd->add_option("--u0", a.u0, "u0 data profile (gaussian:<s>, algtail:<a>, const:<v>, zero)");
    cmd->add_option("--u1", a.u1, "u1 data profile");
    cmd->add_option("--quantity", a.quantity, "solution|energy-grad|energy-time|profile-residual");
    cmd->add_option("--zone", a.zone, "interior|bounded|exterior|all");
    cmd->add_option("--times", a.times, "geometric grid tmin:tmax:count");
    cmd->add_option("--eps", a.eps, "interior zone bound");
    cmd->add_option("--bigN", a.bigN, "exterior zone bound");
    cmd->add_option("--r-cap", a.r_cap, "exterior truncation radius");
    cmd->add_option("--output", a.output, "CSV output path (default: stdout)");
}

ProblemSetup to_setup(const CommonArgs& a) {
    ProblemSetup p;
    p.sym = parse_symbol(a.symbol);
    p.n = a.n;
    p.s = a.s;
    p.ell0 = a.ell0;
    p.ell1 = a.ell1;
    p.u0hat = parse_profile(a.u0);
    p.u1hat = parse_profile(a.u1);
    p.zp = {a.eps, a.bigN};
    p.r_cap = a.r_cap;
    return p;
}

std::vector<SeriesRow> series_rows(const CommonArgs& a, const std::vector<SeriesPoint>& series) {
    std::vector<SeriesRow> rows;
    for (const auto& pt : series) rows.push_back({pt.t, pt.norm, a.quantity, a.zone, a.symbol, a.n});
    return rows;
}

int cmd_hypothesis_check(const std::string& symbol) {
    const SymbolSpec sym = parse_symbol(symbol);
    const HypothesisReport rep = check_hypotheses(sym);
    std::cout << "symbol: " << sym.name << "\n"
              << "small_limit_ok: " << (rep.small_limit_ok ? "yes" : "no") << "\n"
              << "large_limit_kind: " << to_string(rep.large_limit_kind) << "\n"
              << "regularity_class: " << to_string(rep.regularity_class) << "\n";
    for (const auto& m : rep.mismatches) std::cout << "mismatch: " << m << "\n";
    for (const auto& a : rep.ambiguities) std::cout << "ambiguous: " << a << "\n";
    return rep.mismatches.empty() ? 0 : 1;
}

int cmd_alpha(const std::string& symbol, int n, double s, double eps, double tol,
              bool allow_negative) {
    AlphaQuery q;
    q.sym = parse_symbol(symbol);
    q.n = n;
    q.s = s;
    q.eps = eps;
    q.tol = tol;
    q.allow_negative = allow_negative;
    const AlphaResult res = alpha_sup(q);
    switch (res.kind) {
        case AlphaKind::Value: std::printf("%.4f\n", res.value); return 0;
        case AlphaKind::Unbounded: std::printf("unbounded\n"); return 0;
        default: std::printf("undecided\n"); return 1;
    }
}

int cmd_solve(const CommonArgs& a, bool fit) {
    const ProblemSetup p = to_setup(a);
    const auto series =
        norm_series(p, parse_quantity(a.quantity), parse_zone(a.zone), parse_times(a.times));
    emit(a.output, series_rows(a, series));
    if (fit) {
        const DecayFit f = fit_decay(series);
        std::printf("slope %.6f intercept %.6f max_residual %.3e window [%g, %g]\n", f.slope,
                    f.intercept, f.max_residual, f.t_min, f.t_max);
    }
    return 0;
}

int cmd_profiles(const CommonArgs& a) {
    const ProblemSetup p = to_setup(a);
    const Zone zone = parse_zone(a.zone);
    const auto times = parse_times(a.times);
    const auto sol = norm_series(p, Quantity::SolutionItself, zone, times);
    const auto res = norm_series(p, Quantity::ProfileResidual, zone, times);
    std::vector<SeriesRow> rows;
    for (const auto& pt : sol) rows.push_back({pt.t, pt.norm, "solution", a.zone, a.symbol, a.n});
    for (const auto& pt : res)
        rows.push_back({pt.t, pt.norm, "profile-residual", a.zone, a.symbol, a.n});
    emit(a.output, rows);
    const double s_sol = fit_decay(sol).slope;
    const double s_res = fit_decay(res).slope;
    std::printf("solution slope %.4f, profile-residual slope %.4f, enhancement %.4f\n", s_sol,
                s_res, s_sol - s_res);
    return 0;
}

int cmd_oracle_check(const std::string& symbol, int samples, std::uint64_t seed) {
    std::vector<SymbolSpec> syms;
    if (symbol == "all")
        syms = builtin_catalog();
    else
        syms.push_back(parse_symbol(symbol));
    bool all_pass = true;
    std::printf("%-12s %8s %8s %12s %6s\n", "symbol", "points", "confl", "max_err", "pass");
    for (const auto& sym : syms) {
        const OracleCheckReport rep = kernel_oracle_check(sym, samples, seed);
        int confl = 0;
        for (const auto& row : rep.rows) confl += row.confluent ? 1 : 0;
        std::printf("%-12s %8zu %8d %12.3e %6s\n", rep.symbol.c_str(), rep.rows.size(), confl,
                    rep.max_err, rep.pass ? "ok" : "FAIL");
        all_pass = all_pass && rep.pass;
    }
    return all_pass ? 0 : 1;
}

int cmd_scenarios(bool list, const std::string& run_name, const std::string& out_dir) {
    auto specs = theorem_scenarios();
    if (list) {
        for (const auto& s : specs) std::cout << s.name << "\n";
        return 0;
    }
    if (!run_name.empty() && run_name != "all") {
        std::vector<ScenarioSpec> filtered;
        for (const auto& s : specs)
            if (s.name == run_name) filtered.push_back(s);
        if (filtered.empty()) throw ConfigError("unknown scenario '" + run_name + "'");
        specs = filtered;
    }
    std::vector<ScenarioOutcome> outcomes;
    const int fails = run_suite(specs, out_dir, &outcomes);
    for (const auto& oc : outcomes)
        for (const auto& c : oc.checks)
            std::printf("%-48s %10.4f  expected %-14s %s\n", c.scenario.c_str(), c.slope,
                        c.expected.c_str(), c.pass ? "pass" : "FAIL");
    std::printf("%d check(s) failed; outputs in %s\n", fails, out_dir.c_str());
    return fails == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decay-rate laboratory for the strongly damped wave equation "
                 "u_tt - Lap u - mu(|D|) Lap u_t = 0"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --config appear after the subcommand name
    app.set_config("--config", "", "key = value config file ([subcommand] sections)");

    std::string hc_symbol = "fractional";
    auto* hc = app.add_subcommand("hypothesis-check", "probe the dissipation hypotheses");
    hc->add_option("--symbol", hc_symbol, "symbol name[:key=val,...]");

    std::string al_symbol = "power-law:beta=1";
    int al_n = 3;
    double al_s = 0.0, al_eps = 0.5, al_tol = 1e-2;
    bool al_neg = false;
    auto* al = app.add_subcommand("alpha", "interior integrability exponent alpha_sup");
    al->add_option("--symbol", al_symbol);
    al->add_option("--n", al_n);
    al->add_option("--s", al_s);
    al->add_option("--eps", al_eps);
    al->add_option("--tol", al_tol);
    al->add_flag("--allow-negative", al_neg, "signed continuation for 2s+n <= 0");

    CommonArgs so_args;
    auto* so = app.add_subcommand("solve", "norm series of a solution quantity");
    add_common(so, so_args);

    CommonArgs df_args;
    df_args.times = "100:10000:12";
    auto* df = app.add_subcommand("decay-fit", "norm series plus log-log slope fit");
    add_common(df, df_args);

    CommonArgs pr_args;
    pr_args.zone = "all";
    pr_args.times = "100:10000:12";
    auto* pr = app.add_subcommand("profiles", "solution vs profile-residual slopes");
    add_common(pr, pr_args);

    std::string oc_symbol = "all";
    int oc_samples = 50;
    std::uint64_t oc_seed = 12345;
    auto* oc = app.add_subcommand("oracle-check", "RK4 vs closed-form kernel table");
    oc->add_option("--symbol", oc_symbol, "catalog symbol or 'all'");
    oc->add_option("--samples", oc_samples);
    oc->add_option("--seed", oc_seed);

    bool sc_list = false;
    std::string sc_run, sc_dir = "scenario-out";
    auto* sc = app.add_subcommand("scenarios", "canned theorem scenario suite");
    sc->add_flag("--list", sc_list, "list scenario names");
    sc->add_option("--run", sc_run, "scenario name or 'all'");
    sc->add_option("--output-dir", sc_dir, "directory for per-scenario CSVs + summary.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (hc->parsed()) return cmd_hypothesis_check(hc_symbol);
        if (al->parsed()) return cmd_alpha(al_symbol, al_n, al_s, al_eps, al_tol, al_neg);
        if (so->parsed()) return cmd_solve(so_args, false);
        if (df->parsed()) return cmd_solve(df_args, true);
        if (pr->parsed()) return cmd_profiles(pr_args);
        if (oc->parsed()) return cmd_oracle_check(oc_symbol, oc_samples, oc_seed);
        if (sc->parsed()) return cmd_scenarios(sc_list, sc_run, sc_dir);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
