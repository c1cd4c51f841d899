#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdwave/decay.hpp"

namespace sdwave {

/// One canned theorem experiment, runnable by the CLI and the acceptance
/// suite. The kinds map onto the estimate being exercised:
///   MultiplierSlopeTable  small-frequency multiplier norm slopes per (beta, n, s)
///   SeriesSlope           norm-series slope equals an expected exponent
///   SeriesSlopeBound      norm-series slope bounded by -alpha_sup/2 (signed)
///   RegLossClass          exterior decay classified exponential/polynomial
///   ProfileEnhancement    profile-residual slope steeper than solution slope
///   HypCEnergy            interior energy slope + exterior exponential class
struct ScenarioSpec {
    enum class Kind {
        MultiplierSlopeTable,
        SeriesSlope,
        SeriesSlopeBound,
        RegLossClass,
        ProfileEnhancement,
        HypCEnergy
    };

    std::string name;
    Kind kind = Kind::SeriesSlope;

    std::string symbol;  // parse_symbol text, e.g. "power-law:beta=1"
    int n = 3;
    double s = 0.0;
    double ell = 0.0;
    std::string u0 = "zero";  // "gaussian:<scale>" | "algtail:<a>" | "zero"
    std::string u1 = "zero";
    Quantity quantity = Quantity::SolutionItself;
    Zone zone = Zone::Interior;
    double t_min = 1e2, t_max = 1e4;
    int t_count = 12;
    double r_cap = 1e6;

    double expected = 0.0;   // slope target / enhancement threshold
    double tolerance = 0.0;
    std::optional<DecayClass> expected_class;
    std::optional<double> class_slope;          // slope target attached to a class check
    std::optional<double> class_slope_tol;

    struct TableRow {
        double beta, expected;
        int n;
        double s;
    };
    std::vector<TableRow> table;  // MultiplierSlopeTable rows
};

/// Flat CSV row of a computed series point.
struct SeriesRow {
    double t, norm;
    std::string quantity, zone, symbol;
    int n;
};

struct CheckRow {
    std::string scenario;
    double slope = 0.0;
    std::string expected;
    double tolerance = 0.0;
    bool pass = false;
};

struct ScenarioOutcome {
    std::string name;
    std::vector<SeriesRow> rows;
    std::vector<CheckRow> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

std::vector<ScenarioSpec> theorem_scenarios();

RadialProfile parse_profile(const std::string& text);

ScenarioOutcome run_scenario(const ScenarioSpec& spec);

/// Run scenarios, write one CSV per scenario plus summary.csv (written last)
/// into out_dir. Returns the number of failed checks. Files are written
/// atomically and are byte-stable for a fixed configuration.
int run_suite(const std::vector<ScenarioSpec>& specs, const std::string& out_dir,
              std::vector<ScenarioOutcome>* outcomes = nullptr);

void write_series_csv(const std::string& path, const std::vector<SeriesRow>& rows);
void write_summary_csv(const std::string& path, const std::vector<CheckRow>& checks);

/// Deterministic float formatting used in every CSV ("%.12g").
std::string format_double(double v);

} // namespace sdwave
