#pragma once

namespace fracstab {

// Natural log of |Gamma(x)| for real non-integer x (and positive x).
// Lanczos approximation, >= 13 significant digits on (0, 50];
// reflection formula for x < 0.5.
double log_abs_gamma(double x);

// Sign of Gamma(x); +1 for x > 0, alternates between negative integers.
double gamma_sign(double x);

// Gamma(x) for x where the result fits in a double.
double gamma_fn(double x);

} // namespace fracstab
