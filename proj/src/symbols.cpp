#include "sdwave/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sdwave/errors.hpp"

namespace sdwave {

double eval_mu(const SymbolSpec& sym, double r) {
    if (!(r >= 0.0) || !std::isfinite(r))
        throw SymbolEvaluationError(sym.name + ": mu evaluated at invalid r");
    const double v = sym.fn(r);
    if (std::isnan(v) || v < 0.0 || std::isinf(v))
        throw SymbolEvaluationError(sym.name + ": mu(" + std::to_string(r) +
                                    ") = " + std::to_string(v));
    return v;
}

SymbolSpec make_fractional(double p, double eps) {
    if (!(p > 0.0) || !(eps > -1.0 && eps < 1.0))
        throw ConfigError("fractional: need p > 0 and eps in (-1, 1)");
    SymbolSpec s;
    s.name = "fractional";
    s.fn = [p, eps](double r) {
        if (eps == 0.0) return p;
        return p * std::pow(r, eps);
    };
    s.declared_small_rmu = LimitDecl::fin(0.0);
    s.declared_large_rmu = LimitDecl::inf();  // r^{1+eps}, 1+eps > 0
    if (eps > 0.0)
        s.declared_large_mu = LimitDecl::inf();
    else if (eps == 0.0)
        s.declared_large_mu = LimitDecl::fin(p);
    else
        s.declared_large_mu = LimitDecl::fin(0.0);
    return s;
}

SymbolSpec make_oscillating(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0)) throw ConfigError("oscillating: need p, q > 0");
    SymbolSpec s;
    s.name = "oscillating";
    s.fn = [p, q](double r) { return p * (1.0 + std::sin(r)) + q * (1.0 + std::cos(r)); };
    s.declared_small_rmu = LimitDecl::fin(0.0);
    // mu has no limit at infinity but stays within [p+q-sqrt(p^2+q^2), p+q+sqrt(p^2+q^2)];
    // record the sup: it is what the exterior envelope estimates use.
    s.declared_large_mu = LimitDecl::fin(p + q + std::sqrt(p * p + q * q));
    s.declared_large_rmu = LimitDecl::inf();  // mu bounded below by p+q-sqrt(p^2+q^2) > 0
    return s;
}

SymbolSpec make_logarithmic(double gamma) {
    if (!(gamma > -1.0)) throw ConfigError("logarithmic: need gamma > -1");
    SymbolSpec s;
    s.name = "logarithmic";
    s.fn = [gamma](double r) {
        if (gamma == 0.0) return 1.0;
        const double l = std::log1p(r);
        return std::pow(l, gamma);
    };
    s.declared_small_rmu = LimitDecl::fin(0.0);  // r * (log(1+r))^gamma ~ r^{1+gamma}
    if (gamma > 0.0)
        s.declared_large_mu = LimitDecl::inf();
    else if (gamma == 0.0)
        s.declared_large_mu = LimitDecl::fin(1.0);
    else
        s.declared_large_mu = LimitDecl::fin(0.0);
    s.declared_large_rmu = LimitDecl::inf();
    return s;
}

SymbolSpec make_klog(int k) {
    if (k < 1) throw ConfigError("k-log: need k >= 1");
    SymbolSpec s;
    s.name = "k-log";
    s.fn = [k](double r) {
        double v = std::log1p(r);
        for (int i = 1; i < k; ++i) v = std::log1p(v);
        return v;
    };
    s.declared_small_rmu = LimitDecl::fin(0.0);
    s.declared_large_mu = LimitDecl::inf();  // unbounded, however slowly
    s.declared_large_rmu = LimitDecl::inf();
    return s;
}

SymbolSpec make_non_c1() {
    SymbolSpec s;
    s.name = "non-c1";
    // |sin| keeps the function continuous-but-not-C^1 at r = 1 while staying
    // non-negative on all of [0, inf).
    s.fn = [](double r) {
        if (r == 1.0) return 0.0;
        const double d = r - 1.0;
        return d * d * std::fabs(std::sin(1.0 / d));
    };
    s.declared_small_rmu = LimitDecl::fin(0.0);
    s.declared_large_mu = LimitDecl::inf();  // ~ (r-1) for large r
    s.declared_large_rmu = LimitDecl::inf();
    return s;
}

SymbolSpec make_power_law(double beta) {
    if (!(beta > -2.0)) throw ConfigError("power-law: need beta > -2");
    SymbolSpec s;
    s.name = "power-law";
    s.fn = [beta](double r) {
        if (beta == 0.0) return 1.0;
        return std::pow(r, beta);
    };
    if (beta > -1.0)
        s.declared_small_rmu = LimitDecl::fin(0.0);
    else if (beta == -1.0)
        s.declared_small_rmu = LimitDecl::fin(1.0);
    else
        s.declared_small_rmu = LimitDecl::inf();
    if (beta > 0.0)
        s.declared_large_mu = LimitDecl::inf();
    else if (beta == 0.0)
        s.declared_large_mu = LimitDecl::fin(1.0);
    else
        s.declared_large_mu = LimitDecl::fin(0.0);
    if (beta > -1.0)
        s.declared_large_rmu = LimitDecl::inf();
    else if (beta == -1.0)
        s.declared_large_rmu = LimitDecl::fin(1.0);
    else
        s.declared_large_rmu = LimitDecl::fin(0.0);
    return s;
}

SymbolSpec make_hypc_log(double sigma) {
    if (!(sigma > 0.5)) throw ConfigError("hypC-log: need sigma > 1/2");
    SymbolSpec s;
    s.name = "hypC-log";
    s.fn = [sigma](double r) {
        if (r == 0.0) {
            // limit of log(1+r^{2s})/r^2 = r^{2s-2}(1+o(1)) at the origin
            if (sigma > 1.0) return 0.0;
            if (sigma == 1.0) return 1.0;
            return std::numeric_limits<double>::infinity();  // rejected by eval_mu
        }
        const double p = std::pow(r, 2.0 * sigma);
        double lg;
        if (std::isinf(p))
            lg = 2.0 * sigma * std::log(r);
        else if (p == 0.0)
            lg = std::exp(2.0 * sigma * std::log(r));  // log1p underflow guard
        else
            lg = std::log1p(p);
        return lg / (r * r);
    };
    s.declared_small_rmu = LimitDecl::fin(0.0);       // ~ r^{2 sigma - 1}
    s.declared_large_mu = LimitDecl::fin(0.0);        // ~ 2 sigma log(r)/r^2
    s.declared_large_rmu = LimitDecl::fin(0.0);       // HypC with c = 0
    return s;
}

std::vector<SymbolSpec> builtin_catalog() {
    return {make_fractional(), make_oscillating(), make_logarithmic(),
            make_klog(),       make_non_c1(),      make_power_law(),
            make_hypc_log()};
}

std::vector<std::string> supported_symbols() {
    return {"fractional", "oscillating", "logarithmic", "k-log",
            "non-c1",     "power-law",   "hypC-log"};
}

namespace {

double get_param(const std::map<std::string, double>& params, const std::string& key,
                 double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

} // namespace

SymbolSpec make_symbol(const std::string& name, const std::map<std::string, double>& params) {
    if (name == "fractional")
        return make_fractional(get_param(params, "p", 1.0), get_param(params, "eps", 0.0));
    if (name == "oscillating")
        return make_oscillating(get_param(params, "p", 1.0), get_param(params, "q", 1.0));
    if (name == "logarithmic") return make_logarithmic(get_param(params, "gamma", 1.0));
    if (name == "k-log") return make_klog(static_cast<int>(get_param(params, "k", 2.0)));
    if (name == "non-c1") return make_non_c1();
    if (name == "power-law") return make_power_law(get_param(params, "beta", 1.0));
    if (name == "hypC-log") return make_hypc_log(get_param(params, "sigma", 1.0));

    std::ostringstream os;
    os << "unknown symbol '" << name << "'; supported:";
    for (const auto& s : supported_symbols()) os << " " << s;
    throw ConfigError(os.str());
}

SymbolSpec parse_symbol(const std::string& text) {
    std::string name = text;
    std::map<std::string, double> params;
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        name = text.substr(0, colon);
        std::stringstream rest(text.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw ConfigError("bad symbol parameter '" + item + "' (expected key=value)");
            try {
                params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
            } catch (const std::exception&) {
                throw ConfigError("bad symbol parameter value in '" + item + "'");
            }
        }
    }
    return make_symbol(name, params);
}

namespace {

constexpr double kTrendFactor = 1.2;
constexpr double kValueTol = 1e-3;

struct Trend {
    bool monotone_inc = false;  // >= 9 of the last 10 steps increase
    bool monotone_dec = false;
    double ratio = 1.0;         // last / (10 points earlier)
};

Trend trend_of(const std::vector<double>& seq) {
    Trend t;
    const size_t n = seq.size();
    if (n < 11) return t;
    int inc = 0, dec = 0;
    for (size_t i = n - 10; i < n; ++i) {
        if (seq[i] >= seq[i - 1]) ++inc;
        if (seq[i] <= seq[i - 1]) ++dec;
    }
    t.monotone_inc = inc >= 9;
    t.monotone_dec = dec >= 9;
    const double base = seq[n - 11];
    t.ratio = base > 0.0 ? seq[n - 1] / base
                         : (seq[n - 1] > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
    return t;
}

} // namespace

HypothesisReport check_hypotheses(const SymbolSpec& sym, const ProbeConfig& probe) {
    HypothesisReport rep;

    // probe sequences run toward their limits: r = 2^{-k} downward, r = 2^{k} upward
    std::vector<double> small_rmu;
    for (int k = probe.small_k_min; k <= probe.small_k_max; ++k) {
        const double r = std::ldexp(1.0, -k);
        const double mu = eval_mu(sym, r);
        small_rmu.push_back(r * mu);
        rep.evidence.push_back({r, r * mu, mu});
    }

    std::vector<double> large_mu, large_rmu;
    for (int k = probe.large_k_min; k <= probe.large_k_max; ++k) {
        const double r = std::ldexp(1.0, k);
        const double mu = eval_mu(sym, r);
        large_mu.push_back(mu);
        large_rmu.push_back(r * mu);
        rep.evidence.push_back({r, r * mu, mu});
    }

    // --- small-frequency limit: r*mu(r) -> 0 ---
    {
        const Trend t = trend_of(small_rmu);
        const double last = small_rmu.back();
        const bool zero_definitive =
            (t.monotone_dec && t.ratio > 0.0 && 1.0 / t.ratio >= kTrendFactor) || last <= kValueTol;
        const bool nonzero_definitive = !zero_definitive && !t.monotone_dec && last > kValueTol;

        bool declared_zero = false;
        if (sym.declared_small_rmu)
            declared_zero = !sym.declared_small_rmu->infinite &&
                            sym.declared_small_rmu->value == 0.0;
        if (sym.declared_small_rmu) {
            rep.small_limit_ok = declared_zero;
            if (declared_zero && nonzero_definitive)
                rep.mismatches.push_back("small limit declared 0 but r*mu settles at " +
                                         std::to_string(last));
            if (!declared_zero && zero_definitive)
                rep.mismatches.push_back("small limit declared nonzero but r*mu trends to 0");
        } else {
            rep.small_limit_ok = zero_definitive;
            if (!zero_definitive && !nonzero_definitive)
                rep.ambiguities.push_back("small-frequency trend undecided");
        }
    }

    // --- large-frequency limit of r*mu: HypA (to infinity) vs HypC (bounded) ---
    {
        const Trend t = trend_of(large_rmu);
        const double last = large_rmu.back();
        const bool hypa_definitive =
            (t.monotone_inc && t.ratio >= kTrendFactor) || (last > 0.0 && 1.0 / last <= kValueTol);
        const bool hypc_definitive = !t.monotone_inc && t.ratio < kTrendFactor;

        std::optional<LargeLimitKind> declared;
        if (sym.declared_large_rmu)
            declared = sym.declared_large_rmu->infinite ? LargeLimitKind::HypA
                                                        : LargeLimitKind::HypC;
        if (declared) {
            rep.large_limit_kind = *declared;
            if (*declared == LargeLimitKind::HypA && hypc_definitive)
                rep.mismatches.push_back("declared HypA but r*mu is not growing");
            if (*declared == LargeLimitKind::HypC && hypa_definitive)
                rep.mismatches.push_back("declared HypC but r*mu grows without bound");
        } else if (hypa_definitive) {
            rep.large_limit_kind = LargeLimitKind::HypA;
        } else if (hypc_definitive) {
            rep.large_limit_kind = LargeLimitKind::HypC;
        } else {
            rep.large_limit_kind = LargeLimitKind::Fails;
            rep.ambiguities.push_back("large-frequency r*mu trend undecided");
        }
    }

    // --- regularity-loss threshold: lim mu(r) = infinity? ---
    {
        const Trend t = trend_of(large_mu);
        const bool infinite_definitive = t.monotone_inc && t.ratio >= kTrendFactor;
        const bool finite_definitive = !t.monotone_inc && t.ratio < kTrendFactor;

        if (sym.declared_large_mu) {
            rep.regularity_class =
                sym.declared_large_mu->infinite ? LossClass::Infinite : LossClass::Finite;
            if (sym.declared_large_mu->infinite && finite_definitive)
                rep.mismatches.push_back("declared regularity-loss (mu -> inf) but mu settles");
            if (!sym.declared_large_mu->infinite && infinite_definitive)
                rep.mismatches.push_back("declared bounded mu but mu grows without bound");
        } else if (infinite_definitive) {
            rep.regularity_class = LossClass::Infinite;
        } else {
            rep.regularity_class = LossClass::Finite;
            if (!finite_definitive) rep.ambiguities.push_back("large-mu trend undecided");
        }
    }

    return rep;
}

const char* to_string(LargeLimitKind k) {
    switch (k) {
        case LargeLimitKind::HypA: return "HypA";
        case LargeLimitKind::HypC: return "HypC";
        default: return "Fails";
    }
}

const char* to_string(LossClass c) {
    return c == LossClass::Infinite ? "Infinite" : "Finite";
}

} // namespace sdwave
