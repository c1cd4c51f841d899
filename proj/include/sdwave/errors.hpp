#pragma once

#include <stdexcept>
#include <string>

namespace sdwave {

/// A symbol evaluator returned NaN, a negative value, or infinity.
struct SymbolEvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The exterior profile g1 = e^{-t/mu}/(mu r^2) was requested where mu*r^2 == 0.
struct ProfileSingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mode integration would exceed the step budget (t_end/dt > 1e8).
struct OracleBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exterior integral still carries mass at the truncation radius.
struct TailNotConverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonFiniteIntegrand : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// multiplier_small_norm with s <= -n/2 (non-integrable at the origin).
struct DivergentSmallFrequency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// alpha query with 2s + n <= 0: no admissible exponent alpha >= 0.
struct EmptyAlphaSet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FitDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad CLI/config input; maps to process exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sdwave
