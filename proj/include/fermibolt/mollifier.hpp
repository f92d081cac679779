#pragma once

#include <cstdint>

#include "fermibolt/core.hpp"

namespace fermibolt {

// The Fejer-type energy mollifier
//   delta1(E) = (2/pi) sin^2(E/2) / E^2,   delta_t(E) = t * delta1(t E),
// expressing time-energy uncertainty: unit mass, peak delta1(0) = 1/(2pi),
// tail delta1(E) <= (2/pi)/E^2.

// Below this threshold |E| the Taylor form
// (1/(2pi)) (1 - E^2/12 + E^4/360) replaces the quotient, avoiding the
// cancellation in sin^2(E/2)/E^2. Continuity across the switch is ~1e-18.
inline constexpr double kDelta1TaylorSwitch = 1e-4;

double delta1(double E);

// delta_t(E) = t * delta1(t E); requires t > 0.
double delta_t(double t, double E);

// Closed form of 2 Re int_0^t int_0^{t1} e^{i omega t2} dt2 dt1, namely
// 4 sin^2(omega t / 2) / omega^2 with removable value t^2 at omega = 0.
// Identically equal to 2pi * t * delta_t(omega); the two are computed through
// different expressions, and their agreement ties the per-mode propagator
// picture to the mollifier.
double double_time_integral(double omega, double t);

// Sharp-limit deviation |delta_t(x + lambda y) - kappa t delta_{x,0}| together
// with the structural bound terms (1/(x^2 t) for x != 0, lambda^2 t^3 y^2 for
// x = 0). Hypothesis lambda |y| <= 1/2 is enforced. The caller divides
// deviation by the matching bound term to estimate the constant.
struct SharpLimitError {
    double deviation = 0.0;
    double bound_x_nonzero = 0.0;  // 1/(x^2 t), zero when x == 0
    double bound_x_zero = 0.0;     // lambda^2 t^3 y^2, zero when x != 0
};

SharpLimitError sharp_limit_error(std::int64_t x, double y, double lambda, double t,
                                  const Normalization& norm);

}  // namespace fermibolt
