#include "fermibolt/mollifier.hpp"

#include <cmath>
#include <stdexcept>

namespace fermibolt {

double delta1(double E) {
    double a = std::abs(E);
    if (a < kDelta1TaylorSwitch) {
        double e2 = E * E;
        return (1.0 / kTwoPi) * (1.0 - e2 / 12.0 + e2 * e2 / 360.0);
    }
    double s = std::sin(0.5 * E);
    return (2.0 / kPi) * (s * s) / (E * E);
}

double delta_t(double t, double E) {
    if (!(t > 0.0)) throw std::invalid_argument("delta_t: t must be > 0");
    return t * delta1(t * E);
}

double double_time_integral(double omega, double t) {
    double x = omega * t;
    if (std::abs(x) < kDelta1TaylorSwitch) {
        double x2 = x * x;
        return t * t * (1.0 - x2 / 12.0 + x2 * x2 / 360.0);
    }
    double s = std::sin(0.5 * x);
    return 4.0 * (s * s) / (omega * omega);
}

SharpLimitError sharp_limit_error(std::int64_t x, double y, double lambda, double t,
                                  const Normalization& norm) {
    if (!(t > 0.0)) throw std::invalid_argument("sharp_limit_error: t must be > 0");
    if (std::abs(lambda * y) > 0.5)
        throw std::invalid_argument("sharp_limit_error: requires lambda*|y| <= 1/2");
    double value = delta_t(t, static_cast<double>(x) + lambda * y);
    double target = x == 0 ? norm.kappa() * t : 0.0;
    SharpLimitError out;
    out.deviation = std::abs(value - target);
    if (x != 0)
        out.bound_x_nonzero = 1.0 / (static_cast<double>(x) * static_cast<double>(x) * t);
    else
        out.bound_x_zero = lambda * lambda * t * t * t * y * y;
    return out;
}

}  // namespace fermibolt
