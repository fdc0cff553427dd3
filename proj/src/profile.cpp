#include "fracstab/profile.hpp"

#include <cmath>
#include <stdexcept>

namespace fracstab {

double RadialProfile::operator()(double r) const
{
    if (!(r > 0.0))
        throw std::domain_error("RadialProfile: r must be > 0");
    return -kappa * std::log(r) + offset + pert(r);
}

double RadialProfile::pert(double r) const
{
    if (!perturbation || r <= perturbation->support_lo || r >= perturbation->support_hi)
        return 0.0;
    return perturbation->value(r);
}

double RadialProfile::pert_deriv(double r) const
{
    if (!perturbation || r <= perturbation->support_lo || r >= perturbation->support_hi)
        return 0.0;
    return perturbation->derivative(r);
}

RadialProfile singular_profile(const Params& p)
{
    RadialProfile u;
    u.kappa = 2.0 * p.s + p.a;
    u.offset = std::log(constant_lambda_sing(p));
    return u;
}

RadialProfile rescale_profile(const RadialProfile& u, double lambda, const Params& p)
{
    if (!(lambda > 0.0))
        throw std::domain_error("rescale_profile: lambda must be > 0");
    RadialProfile v;
    v.kappa = u.kappa;
    v.offset = u.offset + (2.0 * p.s + p.a - u.kappa) * std::log(lambda);
    if (u.perturbation) {
        const Perturbation& w = *u.perturbation;
        Perturbation sw;
        sw.value = [w, lambda](double r) { return w.value(lambda * r); };
        sw.derivative = [w, lambda](double r) { return lambda * w.derivative(lambda * r); };
        sw.support_lo = w.support_lo / lambda;
        sw.support_hi = w.support_hi / lambda;
        v.perturbation = sw;
    }
    return v;
}

Perturbation bump_perturbation(double amplitude, double center, double halfwidth)
{
    if (!(halfwidth > 0.0) || !(center - halfwidth > 0.0))
        throw std::domain_error("bump_perturbation: support must lie in (0, infinity)");
    Perturbation w;
    w.support_lo = center - halfwidth;
    w.support_hi = center + halfwidth;
    w.value = [=](double r) {
        const double x = (r - center) / halfwidth;
        if (std::fabs(x) >= 1.0)
            return 0.0;
        const double y = 1.0 - x * x;
        return amplitude * y * y * y;
    };
    w.derivative = [=](double r) {
        const double x = (r - center) / halfwidth;
        if (std::fabs(x) >= 1.0)
            return 0.0;
        const double y = 1.0 - x * x;
        return amplitude * (-6.0) * x * y * y / halfwidth;
    };
    return w;
}

} // namespace fracstab
