#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sdwave {

/// Declared value of a limit: either a finite number or +infinity.
struct LimitDecl {
    bool infinite = false;
    double value = 0.0;

    static LimitDecl fin(double v) { return {false, v}; }
    static LimitDecl inf() { return {true, 0.0}; }
};

enum class LargeLimitKind { HypA, HypC, Fails };
enum class LossClass { Finite, Infinite };

/// A damping symbol mu(r) >= 0 together with its declared limit metadata.
/// The declared limits are authoritative for downstream branching; measured
/// probes (check_hypotheses) are diagnostics.
struct SymbolSpec {
    std::string name;
    std::function<double(double)> fn;

    std::optional<LimitDecl> declared_small_rmu;  // lim_{r->0+} r*mu(r)
    std::optional<LimitDecl> declared_large_mu;   // lim_{r->inf} mu(r); Finite value doubles
                                                  // as a sup bound for bounded symbols
    std::optional<LimitDecl> declared_large_rmu;  // lim_{r->inf} r*mu(r)

    /// Regularity-loss classification from the declared large-mu limit.
    LossClass loss_class() const {
        return (declared_large_mu && declared_large_mu->infinite) ? LossClass::Infinite
                                                                  : LossClass::Finite;
    }
};

/// Evaluate mu(r) with domain checks. Throws SymbolEvaluationError on
/// NaN/negative/non-finite results and on r < 0 or non-finite r.
double eval_mu(const SymbolSpec& sym, double r);

// Catalog factories. Parameter ranges follow the symbol definitions:
//   fractional   p*r^eps,  p > 0, eps in (-1, 1)
//   oscillating  p*(1+sin r) + q*(1+cos r),  p, q > 0
//   logarithmic  (log(1+r))^gamma,  gamma > -1
//   k-log        k-fold iterated log(1 + .) applied to r,  k >= 1
//   non-c1       (r-1)^2 |sin(1/(r-1))| extended by 0 at r = 1
//   power-law    r^beta,  beta > -2
//   hypC-log     log(1+r^{2 sigma})/r^2,  sigma > 1/2
SymbolSpec make_fractional(double p = 1.0, double eps = 0.0);
SymbolSpec make_oscillating(double p = 1.0, double q = 1.0);
SymbolSpec make_logarithmic(double gamma = 1.0);
SymbolSpec make_klog(int k = 2);
SymbolSpec make_non_c1();
SymbolSpec make_power_law(double beta = 1.0);
SymbolSpec make_hypc_log(double sigma = 1.0);

std::vector<SymbolSpec> builtin_catalog();
std::vector<std::string> supported_symbols();

/// Build a symbol from a catalog name and parameter map; throws ConfigError
/// for unknown names or out-of-range parameters.
SymbolSpec make_symbol(const std::string& name, const std::map<std::string, double>& params);

/// Parse "name" or "name:key=val,key=val" into a symbol.
SymbolSpec parse_symbol(const std::string& text);

/// Geometric probe sequences r = 2^{-k} (small) and r = 2^{k} (large).
struct ProbeConfig {
    int small_k_min = 1, small_k_max = 40;
    int large_k_min = 1, large_k_max = 40;
};

struct ProbeSample {
    double r, rmu, mu;
};

struct HypothesisReport {
    bool small_limit_ok = false;
    LargeLimitKind large_limit_kind = LargeLimitKind::Fails;
    LossClass regularity_class = LossClass::Finite;
    std::vector<ProbeSample> evidence;
    std::vector<std::string> mismatches;   // declared vs measured contradictions (not fatal)
    std::vector<std::string> ambiguities;  // trends the probe could not decide
};

/// Probe the limits in the dissipation hypotheses by finite sampling.
/// Trend heuristics: a quantity is classified as tending to 0 (resp. infinity)
/// when it moves monotonically and by a factor >= 1.2 over the last 10 probe
/// points, or when the last sample is below 1e-3 (resp. its reciprocal is).
/// Declared metadata wins whenever the measured trend is not definitive.
HypothesisReport check_hypotheses(const SymbolSpec& sym, const ProbeConfig& probe = {});

const char* to_string(LargeLimitKind k);
const char* to_string(LossClass c);

} // namespace sdwave
