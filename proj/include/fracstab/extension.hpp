#pragma once

#include "fracstab/angular_kernel.hpp"
#include "fracstab/params.hpp"
#include "fracstab/profile.hpp"
#include "fracstab/quadrature.hpp"

namespace fracstab {

// Point X = (x, t) in the closed upper half-space, radial in x.
struct HalfSpacePoint {
    double rho; // |x|
    double t;   // extension variable
};

// Optional precomputed kernel tables for the hot paths (orders q = n+2s and
// q+2); evaluation falls back to direct quadrature when absent.
struct ExtensionKernels {
    const AngularKernelTable* kq = nullptr;
    const AngularKernelTable* kq2 = nullptr;
};

// d_{n,s}, the Poisson kernel normalizer.
double poisson_constant(const Params& p);

// integral of P(X, .) over R^n by radial quadrature; equals 1.
double poisson_normalization_check(const Params& p, HalfSpacePoint X,
                                   const QuadratureSpec& spec);

// Caffarelli-Silvestre extension of a radial profile at X, reduced to a
// single radial integral through the shifted angular kernel. At t = 0 the
// boundary trace u(rho) is returned analytically.
double extend_radial(const RadialProfile& u, HalfSpacePoint X, const Params& p,
                     const QuadratureSpec& spec, const ExtensionKernels& k = {});

// integral P(X,y) log|y| dy - log(rho); nonnegative up to quadrature error.
double poisson_log_gap(HalfSpacePoint X, const Params& p, const QuadratureSpec& spec);

struct GradExtension {
    double d_rho;
    double d_t;
};

// Partial derivatives of extend_radial, by differentiating the Poisson kernel
// under the integral (orders q and q+2 of the angular kernel).
GradExtension grad_extension(const RadialProfile& u, HalfSpacePoint X, const Params& p,
                             const QuadratureSpec& spec, const ExtensionKernels& k = {});

} // namespace fracstab
