#include "sdwave/runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sdwave/errors.hpp"

namespace sdwave {

namespace {

std::string symbol_text(double beta) {
    std::ostringstream os;
    os << "power-law:beta=" << beta;
    return os.str();
}

void append_series(std::vector<SeriesRow>& rows, const std::vector<SeriesPoint>& series,
                   const std::string& quantity, Zone zone, const std::string& symbol, int n) {
    for (const auto& p : series) rows.push_back({p.t, p.norm, quantity, to_string(zone), symbol, n});
}

ProblemSetup make_setup(const ScenarioSpec& spec) {
    ProblemSetup p;
    p.sym = parse_symbol(spec.symbol);
    p.n = spec.n;
    p.s = spec.s;
    p.u0hat = parse_profile(spec.u0);
    p.u1hat = parse_profile(spec.u1);
    p.r_cap = spec.r_cap;
    return p;
}

} // namespace

RadialProfile parse_profile(const std::string& text) {
    if (text == "zero") return RadialProfile::zero();
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    double param = 1.0;
    if (colon != std::string::npos) {
        try {
            param = std::stod(text.substr(colon + 1));
        } catch (const std::exception&) {
            throw ConfigError("bad profile parameter in '" + text + "'");
        }
    }
    if (kind == "gaussian") return RadialProfile::gaussian(param);
    if (kind == "algtail") return RadialProfile::algebraic_tail(param);
    if (kind == "const") return RadialProfile::constant(param);
    throw ConfigError("unknown profile '" + text + "' (use gaussian:<scale>, algtail:<a>, "
                      "const:<v>, zero)");
}

std::vector<ScenarioSpec> theorem_scenarios() {
    std::vector<ScenarioSpec> out;

    {
        ScenarioSpec s;
        s.name = "example-2.1-fractional-interior";
        s.kind = ScenarioSpec::Kind::MultiplierSlopeTable;
        s.t_min = 1e2;
        s.t_max = 1e4;
        s.tolerance = 0.05;
        s.table = {{0.0, -0.75, 3, 0.0}, {1.0, -0.5, 3, 0.0}, {-0.5, -1.0, 2, 0.5}};
        out.push_back(s);
    }
    {
        ScenarioSpec s;
        s.name = "cor-2.1-mu1-n3-u0-solution";
        s.kind = ScenarioSpec::Kind::SeriesSlope;
        s.symbol = "fractional";
        s.n = 3;
        s.u0 = "gaussian:1";
        s.quantity = Quantity::SolutionItself;
        s.zone = Zone::Interior;
        s.expected = -0.75;
        s.tolerance = 0.05;
        out.push_back(s);
    }
    {
        ScenarioSpec s;
        s.name = "cor-2.1-mu1-n3-u1-solution";
        s.kind = ScenarioSpec::Kind::SeriesSlope;
        s.symbol = "fractional";
        s.n = 3;
        s.u1 = "gaussian:1";
        s.quantity = Quantity::SolutionItself;
        s.zone = Zone::Interior;
        s.expected = -0.25;
        s.tolerance = 0.05;
        out.push_back(s);
    }
    {
        ScenarioSpec s;
        s.name = "regloss-mu1-exterior";
        s.kind = ScenarioSpec::Kind::RegLossClass;
        s.symbol = "fractional";
        s.n = 3;
        s.ell = 1.0;
        s.u0 = "algtail:2.5";
        s.t_min = 1.0;
        s.t_max = 1e2;
        s.r_cap = 1e10;
        s.expected_class = DecayClass::Exponential;
        out.push_back(s);
    }
    {
        ScenarioSpec s;
        s.name = "regloss-beta-neg05-exterior";
        s.kind = ScenarioSpec::Kind::RegLossClass;
        s.symbol = "power-law:beta=-0.5";
        s.n = 3;
        s.ell = 1.0;
        s.u0 = "algtail:2.5";
        s.t_min = 1.0;
        s.t_max = 1e2;
        s.r_cap = 1e10;
        s.expected_class = DecayClass::Exponential;
        out.push_back(s);
    }
    {
        ScenarioSpec s;
        s.name = "regloss-beta1-ell1-exterior";
        s.kind = ScenarioSpec::Kind::RegLossClass;
        s.symbol = "power-law:beta=1";
        s.n = 3;
        s.ell = 1.0;
        s.u0 = "algtail:2.5";  // borderline: a = (n + 2 ell beta)/2
        s.t_min = 1e2;
        s.t_max = 1e4;
        s.r_cap = 1e10;
        s.expected_class = DecayClass::Polynomial;
        s.class_slope = -1.0;
        s.class_slope_tol = 0.1;
        out.push_back(s);
    }
    {
        ScenarioSpec s;
        s.name = "regloss-log-gamma1-exterior";
        s.kind = ScenarioSpec::Kind::RegLossClass;
        s.symbol = "logarithmic:gamma=1";
        s.n = 3;
        s.ell = 1.0;
        s.u0 = "algtail:2.5";
        // the polynomial regime for log-type damping needs frequencies
        // r ~ e^t; past t ~ 50 it leaves any floating-point truncation radius
        s.t_min = 1.0;
        s.t_max = 50.0;
        s.r_cap = 1e10;
        s.expected_class = DecayClass::Polynomial;
        out.push_back(s);
    }
    {
        ScenarioSpec s;
        s.name = "thm-3.1-n1-u1-interior";
        s.kind = ScenarioSpec::Kind::SeriesSlopeBound;
        s.symbol = "power-law:beta=-1";
        s.n = 1;
        s.u1 = "gaussian:1";
        s.quantity = Quantity::SolutionItself;
        s.zone = Zone::Interior;
        s.t_min = 1.0;
        s.t_max = 1e4;
        s.t_count = 16;
        out.push_back(s);
    }
    {
        ScenarioSpec s;
        s.name = "thm-3.1-n2-u1-interior";
        s.kind = ScenarioSpec::Kind::SeriesSlopeBound;
        s.symbol = "power-law:beta=-1";
        s.n = 2;
        s.u1 = "gaussian:1";
        s.quantity = Quantity::SolutionItself;
        s.zone = Zone::Interior;
        s.t_min = 1.0;
        s.t_max = 1e4;
        s.t_count = 16;
        out.push_back(s);
    }
    {
        ScenarioSpec s;
        s.name = "thm-3.2-profile-residual-mu1-n3";
        s.kind = ScenarioSpec::Kind::ProfileEnhancement;
        s.symbol = "fractional";
        s.n = 3;
        s.u0 = "gaussian:1";
        s.u1 = "gaussian:1";
        s.zone = Zone::All;
        s.expected = 0.8;
        out.push_back(s);
    }
    {
        ScenarioSpec s;
        s.name = "thm-3.2-profile-residual-beta1-n3";
        s.kind = ScenarioSpec::Kind::ProfileEnhancement;
        s.symbol = "power-law:beta=1";
        s.n = 3;
        s.u0 = "gaussian:1";
        s.u1 = "gaussian:1";
        s.zone = Zone::All;
        s.expected = 0.8;
        out.push_back(s);
    }
    {
        ScenarioSpec s;
        s.name = "hypC-sigma-1-energy";
        s.kind = ScenarioSpec::Kind::HypCEnergy;
        s.symbol = "hypC-log:sigma=1";
        s.n = 2;
        s.s = 0.0;
        s.u0 = "gaussian:1";
        s.quantity = Quantity::EnergyGrad;
        s.expected = -1.0;  // -(2s + n + 2)/(4 sigma)
        s.tolerance = 0.1;
        out.push_back(s);
    }
    return out;
}

ScenarioOutcome run_scenario(const ScenarioSpec& spec) {
    ScenarioOutcome out;
    out.name = spec.name;

    switch (spec.kind) {
        case ScenarioSpec::Kind::MultiplierSlopeTable: {
            const auto times = geometric_times(spec.t_min, spec.t_max, spec.t_count);
            for (const auto& row : spec.table) {
                const SymbolSpec sym = make_power_law(row.beta);
                std::vector<SeriesPoint> series;
                for (const double t : times)
                    series.push_back({t, multiplier_small_norm(sym, row.n, row.s, 0.25, t)});
                append_series(out.rows, series, "multiplier", Zone::Interior,
                              symbol_text(row.beta), row.n);
                const DecayFit fit = fit_decay(series);
                std::ostringstream label;
                label << spec.name << "/beta=" << row.beta << " n=" << row.n << " s=" << row.s;
                out.checks.push_back({label.str(), fit.slope, format_double(row.expected),
                                      spec.tolerance,
                                      std::fabs(fit.slope - row.expected) <= spec.tolerance});
            }
            break;
        }
        case ScenarioSpec::Kind::SeriesSlope: {
            const ProblemSetup p = make_setup(spec);
            const auto series = norm_series(p, spec.quantity, spec.zone,
                                            geometric_times(spec.t_min, spec.t_max, spec.t_count));
            append_series(out.rows, series, to_string(spec.quantity), spec.zone, spec.symbol,
                          spec.n);
            const DecayFit fit = fit_decay(series);
            out.checks.push_back({spec.name, fit.slope, format_double(spec.expected),
                                  spec.tolerance,
                                  std::fabs(fit.slope - spec.expected) <= spec.tolerance});
            break;
        }
        case ScenarioSpec::Kind::SeriesSlopeBound: {
            const ProblemSetup p = make_setup(spec);
            AlphaQuery q;
            q.sym = p.sym;
            q.n = spec.n;
            q.s = -1.0;
            q.allow_negative = true;
            const AlphaResult alpha = alpha_sup(q);
            const double bound = -0.5 * alpha.value + 0.05;

            const auto series = norm_series(p, spec.quantity, spec.zone,
                                            geometric_times(spec.t_min, spec.t_max, spec.t_count));
            append_series(out.rows, series, to_string(spec.quantity), spec.zone, spec.symbol,
                          spec.n);
            bool finite = alpha.kind == AlphaKind::Value;
            for (const auto& pt : series) finite = finite && std::isfinite(pt.norm);
            out.checks.push_back(
                {spec.name + "/finite", finite ? 1.0 : 0.0, "1", 0.0, finite});
            const DecayFit fit = fit_decay(series);
            out.checks.push_back({spec.name + "/slope", fit.slope,
                                  "<=" + format_double(bound), 0.0, fit.slope <= bound});
            break;
        }
        case ScenarioSpec::Kind::RegLossClass: {
            const SymbolSpec sym = parse_symbol(spec.symbol);
            const double a_data = parse_profile(spec.u0).param;
            const LossReport rep = regularity_loss_probe(sym, spec.n, spec.ell, a_data,
                                                         spec.t_min, spec.t_max, spec.t_count,
                                                         spec.r_cap);
            append_series(out.rows, rep.series, "solution", Zone::Exterior, spec.symbol, spec.n);
            const bool class_ok = rep.fitted == *spec.expected_class;
            out.checks.push_back({spec.name + "/class", rep.slope,
                                  to_string(*spec.expected_class), 0.0, class_ok});
            if (spec.class_slope) {
                const bool slope_ok =
                    std::fabs(rep.slope - *spec.class_slope) <= *spec.class_slope_tol;
                out.checks.push_back({spec.name + "/slope", rep.slope,
                                      format_double(*spec.class_slope), *spec.class_slope_tol,
                                      slope_ok});
            }
            break;
        }
        case ScenarioSpec::Kind::ProfileEnhancement: {
            const ProblemSetup p = make_setup(spec);
            if (spec.n <= 2 && !small_frequency_profile_ok(p.sym))
                throw ConfigError("profile scenario in dimension " + std::to_string(spec.n) +
                                  " needs mu(r) bounded by r^{-1/2} near the origin");
            const auto times = geometric_times(spec.t_min, spec.t_max, spec.t_count);
            const auto sol = norm_series(p, Quantity::SolutionItself, spec.zone, times);
            const auto res = norm_series(p, Quantity::ProfileResidual, spec.zone, times);
            append_series(out.rows, sol, "solution", spec.zone, spec.symbol, spec.n);
            append_series(out.rows, res, "profile-residual", spec.zone, spec.symbol, spec.n);
            const double enhancement = fit_decay(sol).slope - fit_decay(res).slope;
            out.checks.push_back({spec.name, enhancement,
                                  ">=" + format_double(spec.expected), 0.0,
                                  enhancement >= spec.expected});
            break;
        }
        case ScenarioSpec::Kind::HypCEnergy: {
            const ProblemSetup p = make_setup(spec);
            const auto series =
                norm_series(p, Quantity::EnergyGrad, Zone::Interior,
                            geometric_times(1e2, 1e4, spec.t_count));
            append_series(out.rows, series, "energy-grad", Zone::Interior, spec.symbol, spec.n);
            const DecayFit fit = fit_decay(series);
            out.checks.push_back({spec.name + "/interior-slope", fit.slope,
                                  format_double(spec.expected), spec.tolerance,
                                  std::fabs(fit.slope - spec.expected) <= spec.tolerance});

            const auto ext = norm_series(p, Quantity::SolutionItself, Zone::Exterior,
                                         geometric_times(1.0, 1e2, spec.t_count));
            append_series(out.rows, ext, "solution", Zone::Exterior, spec.symbol, spec.n);
            const Classification cls = classify_series(ext);
            out.checks.push_back({spec.name + "/exterior-class", cls.slope, "exponential", 0.0,
                                  cls.cls == DecayClass::Exponential});
            break;
        }
    }
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw ConfigError("cannot open output file " + tmp);
        os << content;
    }
    std::filesystem::rename(tmp, path);
}

} // namespace

void write_series_csv(const std::string& path, const std::vector<SeriesRow>& rows) {
    std::ostringstream os;
    os << "t,norm,quantity,zone,symbol,n\n";
    for (const auto& r : rows)
        os << format_double(r.t) << ',' << format_double(r.norm) << ',' << r.quantity << ','
           << r.zone << ',' << r.symbol << ',' << r.n << '\n';
    atomic_write(path, os.str());
}

void write_summary_csv(const std::string& path, const std::vector<CheckRow>& checks) {
    std::ostringstream os;
    os << "scenario,slope,expected,tolerance,pass\n";
    for (const auto& c : checks)
        os << c.scenario << ',' << format_double(c.slope) << ',' << c.expected << ','
           << format_double(c.tolerance) << ',' << (c.pass ? 1 : 0) << '\n';
    atomic_write(path, os.str());
}

int run_suite(const std::vector<ScenarioSpec>& specs, const std::string& out_dir,
              std::vector<ScenarioOutcome>* outcomes) {
    std::filesystem::create_directories(out_dir);
    std::vector<CheckRow> all_checks;
    int fails = 0;
    for (const auto& spec : specs) {
        ScenarioOutcome oc = run_scenario(spec);
        write_series_csv(out_dir + "/" + spec.name + ".csv", oc.rows);
        for (const auto& c : oc.checks) {
            if (!c.pass) ++fails;
            all_checks.push_back(c);
        }
        if (outcomes) outcomes->push_back(std::move(oc));
    }
    write_summary_csv(out_dir + "/summary.csv", all_checks);
    return fails;
}

} // namespace sdwave
