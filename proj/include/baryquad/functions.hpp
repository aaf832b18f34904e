#pragma once

#include <functional>
#include <string_view>

namespace baryquad {

/// Ai(t) * exp(2/3 t^{3/2}) for t >= 0. Maclaurin series for t <= 1,
/// the Macdonald-function integral (trapezoidal rule) on (1, 8], and the
/// asymptotic series beyond 8.
double airy_ai_scaled(double t);

/// Ai(t) for t >= 0.
double airy_ai(double t);

/// Test functions used by the convergence experiments.
double runge(double x);   // 1 / (1 + 25 x^2)
double expinv(double x);  // exp(-1/x^2), 0 at x = 0
double bessel_f(double x);  // J_{1/2}(x) / sqrt(x) = sqrt(2/pi) sin(x)/x
double airy_f(double x);    // Ai((1.5 (x+1))^{2/3}) e^x

/// Looks up a builtin by name; throws ArgumentError for unknown names.
std::function<double(double)> builtin_function(std::string_view name);

}  // namespace baryquad
