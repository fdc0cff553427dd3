#pragma once

#include "fracstab/params.hpp"

#include <functional>
#include <optional>

namespace fracstab {

// Smooth compactly supported radial perturbation, supplied with its first
// derivative; support must satisfy 0 < support_lo < support_hi < infinity.
struct Perturbation {
    std::function<double(double)> value;
    std::function<double(double)> derivative;
    double support_lo;
    double support_hi;
};

// u(r) = -kappa log(r) + offset + perturbation(r)
struct RadialProfile {
    double kappa = 0.0;
    double offset = 0.0;
    std::optional<Perturbation> perturbation;

    double operator()(double r) const;
    double pert(double r) const;       // perturbation value (0 when absent)
    double pert_deriv(double r) const; // perturbation derivative (0 when absent)
};

// The explicit singular solution: kappa = 2s+a, offset = log(lambda_{n,s}).
RadialProfile singular_profile(const Params& p);

// u^lambda(x) = u(lambda x) + (2s+a) log(lambda); same kappa, shifted offset,
// support scaled by 1/lambda.
RadialProfile rescale_profile(const RadialProfile& u, double lambda, const Params& p);

// C^2 bump A*(1-((r-center)/halfwidth)^2)^3 on [center-halfwidth, center+halfwidth].
Perturbation bump_perturbation(double amplitude, double center, double halfwidth);

} // namespace fracstab
