#include "fracstab/gamma.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fracstab {

namespace {

// Lanczos g=7, n=9 coefficients (Godfrey/Pugh).
constexpr double kLanczosG = 7.0;
constexpr double kLanczosC[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;
constexpr double kLogPi = 1.1447298858494001741434273513531;

// log Gamma(x) for x >= 0.5.
double lanczos_log_gamma(double x)
{
    const double z = x - 1.0;
    double sum = kLanczosC[0];
    for (int i = 1; i < 9; ++i)
        sum += kLanczosC[i] / (z + i);
    const double t = z + kLanczosG + 0.5;
    return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// log|sin(pi x)| computed on the reduced argument to keep accuracy for large |x|.
double log_abs_sin_pi(double x)
{
    double r = x - std::floor(x); // in [0,1)
    if (r > 0.5)
        r = 1.0 - r;
    return std::log(std::sin(M_PI * r));
}

} // namespace

double log_abs_gamma(double x)
{
    if (std::isnan(x))
        return std::numeric_limits<double>::quiet_NaN();
    if (x >= 0.5)
        return lanczos_log_gamma(x);
    if (x == std::floor(x)) // pole at non-positive integers
        return std::numeric_limits<double>::infinity();
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return kLogPi - log_abs_sin_pi(x) - lanczos_log_gamma(1.0 - x);
}

double gamma_sign(double x)
{
    if (x > 0.0)
        return 1.0;
    if (x == std::floor(x))
        throw std::domain_error("gamma_sign: pole at non-positive integer");
    // sign alternates: positive on (-2,-1)+2k? Gamma < 0 on (-1,0), (-3,-2), ...
    const int k = static_cast<int>(std::floor(-x));
    return (k % 2 == 0) ? -1.0 : 1.0;
}

double gamma_fn(double x)
{
    if (x > 0.0)
        return std::exp(log_abs_gamma(x));
    return gamma_sign(x) * std::exp(log_abs_gamma(x));
}

} // namespace fracstab
