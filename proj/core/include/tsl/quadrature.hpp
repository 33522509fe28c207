#pragma once

#include <functional>

namespace tsl {

// Panel Gauss-Legendre for oscillatory integrands on [a, b]: panel widths are
// capped so the phase advances at most pi/4 per panel at the supplied top
// frequency, and each panel is accepted only when GL-8 and GL-16 agree.
double integrate_oscillatory(const std::function<double(double)>& f, double a, double b,
                             double max_frequency, double abs_tol = 1e-9);

}  // namespace tsl
