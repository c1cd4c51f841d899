#pragma once

#include <functional>
#include <optional>

namespace sdwave {

/// A radial Fourier-space function of r: transformed initial datum or
/// multiplier. The canned families cover the data classes the decay
/// experiments need: Gaussian (L^1-like, u_hat(0) = 1) and AlgebraicTail
/// (tunable Sobolev regularity).
struct RadialProfile {
    enum class Family { Gaussian, AlgebraicTail, Constant, Custom };

    Family family = Family::Constant;
    double param = 0.0;  // Gaussian scale / tail exponent a / constant value
    std::function<double(double)> custom;

    std::optional<double> l1_bound;  // sup |u_hat| proxy for ||u||_{L^1}
    struct Sobolev {
        double s, a;
    };
    std::optional<Sobolev> sobolev_tag;

    double operator()(double r) const;

    static RadialProfile gaussian(double scale = 1.0);       // e^{-(r/scale)^2}
    static RadialProfile algebraic_tail(double a);           // (1+r^2)^{-a/2}
    static RadialProfile constant(double v);
    static RadialProfile zero() { return constant(0.0); }
    static RadialProfile custom_fn(std::function<double(double)> f);
};

} // namespace sdwave
