#include "sdwave/profiles.hpp"

#include <cmath>
#include <utility>

namespace sdwave {

double RadialProfile::operator()(double r) const {
    switch (family) {
        case Family::Gaussian: {
            const double x = r / param;
            return std::exp(-x * x);
        }
        case Family::AlgebraicTail:
            return std::pow(1.0 + r * r, -0.5 * param);
        case Family::Constant:
            return param;
        case Family::Custom:
            return custom(r);
    }
    return 0.0;
}

RadialProfile RadialProfile::gaussian(double scale) {
    RadialProfile p;
    p.family = Family::Gaussian;
    p.param = scale;
    p.l1_bound = 1.0;
    return p;
}

RadialProfile RadialProfile::algebraic_tail(double a) {
    RadialProfile p;
    p.family = Family::AlgebraicTail;
    p.param = a;
    p.l1_bound = 1.0;
    return p;
}

RadialProfile RadialProfile::constant(double v) {
    RadialProfile p;
    p.family = Family::Constant;
    p.param = v;
    return p;
}

RadialProfile RadialProfile::custom_fn(std::function<double(double)> f) {
    RadialProfile p;
    p.family = Family::Custom;
    p.custom = std::move(f);
    return p;
}

} // namespace sdwave
