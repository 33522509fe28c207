#include "tsl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "tsl/dd.hpp"

namespace tsl {

namespace {

// Gauss-Legendre nodes/weights on [-1, 1].
const double kX8[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                       0.9602898564975363};
const double kW8[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
                       0.1012285362903763};

const double kX16[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                        0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                        0.9445750230732326, 0.9894009349916499};
const double kW16[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                        0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                        0.0622535239386479, 0.0271524594117541};

double gl8(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a), s = 0.0;
  for (int i = 0; i < 4; ++i) s += kW8[i] * (f(c + h * kX8[i]) + f(c - h * kX8[i]));
  return s * h;
}

double gl16(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a), s = 0.0;
  for (int i = 0; i < 8; ++i) s += kW16[i] * (f(c + h * kX16[i]) + f(c - h * kX16[i]));
  return s * h;
}

double panel(const std::function<double(double)>& f, double a, double b, double tol, int depth) {
  double c8 = gl8(f, a, b);
  double c16 = gl16(f, a, b);
  if (std::abs(c16 - c8) <= tol || depth >= 24) return c16;
  double m = 0.5 * (a + b);
  return panel(f, a, m, 0.5 * tol, depth + 1) + panel(f, m, b, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate_oscillatory(const std::function<double(double)>& f, double a, double b,
                             double max_frequency, double abs_tol) {
  if (b <= a) return 0.0;
  double width = (std::numbers::pi / 4.0) / std::max(max_frequency, 1e-12);
  uint64_t n = uint64_t(std::ceil((b - a) / width));
  n = std::max<uint64_t>(n, 1);
  n = std::min<uint64_t>(n, 50'000'000ull);
  double h = (b - a) / double(n);
  double per_panel_tol = abs_tol / double(n);
  kahan acc;
  for (uint64_t i = 0; i < n; ++i) {
    double lo = a + double(i) * h;
    double hi = i + 1 == n ? b : lo + h;
    acc.add(panel(f, lo, hi, per_panel_tol, 0));
  }
  return acc.value();
}

}  // namespace tsl
