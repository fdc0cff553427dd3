#include "fracstab/params.hpp"

#include "fracstab/gamma.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fracstab {

namespace {
constexpr double kLog2 = 0.69314718055994530941723212145818;
constexpr double kLogPi = 1.1447298858494001741434273513531;

// log |Gamma(-s)| for s in (0,1) via reflection.
double log_abs_gamma_neg(double s)
{
    return kLogPi - std::log(std::sin(M_PI * s)) - log_abs_gamma(1.0 + s);
}
} // namespace

Params validate_params(int n, double s, double a)
{
    if (n < 1)
        throw std::domain_error("n >= 1 violated (n = " + std::to_string(n) + ")");
    if (!(s > 0.0 && s < 1.0))
        throw std::domain_error("s in (0,1) violated (s = " + std::to_string(s) + ")");
    if (!(a >= 0.0))
        throw std::domain_error("a >= 0 violated (a = " + std::to_string(a) + ")");
    if (!(n > 2.0 * s))
        throw std::domain_error("n > 2s violated (n = " + std::to_string(n) +
                                ", s = " + std::to_string(s) + ")");
    return Params{n, s, a};
}

double constant_cns(const Params& p)
{
    return detail::cns_raw(p.n, p.s);
}

double constant_kappa(double s)
{
    if (!(s > 0.0 && s < 1.0))
        throw std::domain_error("s in (0,1) violated");
    return std::exp(log_abs_gamma(1.0 - s) - (2.0 * s - 1.0) * kLog2 - log_abs_gamma(s));
}

double constant_A(const Params& p)
{
    const double n = p.n, s = p.s;
    return std::exp(2.0 * s * kLog2 + log_abs_gamma(n / 2.0) + log_abs_gamma(1.0 + s) -
                    log_abs_gamma((n - 2.0 * s) / 2.0));
}

double constant_lambda_sing(const Params& p)
{
    const double n = p.n, s = p.s;
    return std::exp(2.0 * s * kLog2 + log_abs_gamma(n / 2.0) + log_abs_gamma(s) -
                    log_abs_gamma((n - 2.0 * s) / 2.0)) *
           (s + p.a / 2.0);
}

double constant_Lambda_hardy(const Params& p)
{
    return std::exp(2.0 * p.s * kLog2) * detail::stability_rhs_raw(p.n, p.s);
}

double constant_dns(const Params& p)
{
    return detail::dns_raw(p.n, p.s);
}

StabilityVerdict stability_inequality(const Params& p)
{
    StabilityVerdict v;
    v.lhs = detail::stability_lhs_raw(p.n, p.s, p.a);
    v.rhs = detail::stability_rhs_raw(p.n, p.s);
    v.singular_solution_stable = v.lhs <= v.rhs;
    v.theorem_applies = v.lhs > v.rhs;
    return v;
}

double sobolev_critical_exponent(int n, double s, double a)
{
    if (n <= 2.0 * s)
        return std::numeric_limits<double>::infinity();
    return (n + 2.0 * s + 2.0 * a) / (n - 2.0 * s);
}

JlVerdict jl_condition_lane_emden(const Params& p, double q)
{
    if (!(q > 1.0))
        throw std::domain_error("q > 1 violated");
    const double n = p.n, s = p.s;
    const double theta = (s + p.a / 2.0) / (q - 1.0);
    if (!(theta > 0.0 && theta < (n - 2.0 * s) / 2.0))
        throw std::domain_error("Gamma argument non-positive: need 0 < (s+a/2)/(q-1) < (n-2s)/2");
    JlVerdict v;
    v.lhs = q * std::exp(log_abs_gamma(n / 2.0 - theta) + log_abs_gamma(s + theta) -
                         log_abs_gamma(theta) - log_abs_gamma((n - 2.0 * s) / 2.0 - theta));
    v.rhs = detail::stability_rhs_raw(n, s);
    v.holds = v.lhs > v.rhs;
    return v;
}

double sphere_surface(int k)
{
    // |S^k| = 2 pi^{(k+1)/2} / Gamma((k+1)/2)
    return 2.0 * std::exp(((k + 1) / 2.0) * kLogPi - log_abs_gamma((k + 1) / 2.0));
}

namespace detail {

double stability_lhs_raw(double n, double s, double a)
{
    return std::exp(log_abs_gamma(n / 2.0) + log_abs_gamma(s) -
                    log_abs_gamma((n - 2.0 * s) / 2.0)) *
           (s + a / 2.0);
}

double stability_rhs_raw(double n, double s)
{
    return std::exp(2.0 * (log_abs_gamma((n + 2.0 * s) / 4.0) -
                           log_abs_gamma((n - 2.0 * s) / 4.0)));
}

double lambda_hardy_raw(double n, double s)
{
    return std::exp(2.0 * s * kLog2) * stability_rhs_raw(n, s);
}

double cns_raw(double n, double s)
{
    return std::exp(2.0 * s * kLog2 + log_abs_gamma((n + 2.0 * s) / 2.0) -
                    (n / 2.0) * kLogPi - log_abs_gamma_neg(s));
}

double dns_raw(double n, double s)
{
    return std::exp(log_abs_gamma((n + 2.0 * s) / 2.0) - (n / 2.0) * kLogPi -
                    log_abs_gamma(s));
}

} // namespace detail

} // namespace fracstab
