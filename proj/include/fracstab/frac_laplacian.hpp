#pragma once

#include "fracstab/params.hpp"
#include "fracstab/profile.hpp"
#include "fracstab/quadrature.hpp"

#include <vector>

namespace fracstab {

// (-Lap)^s of a radial log-singular profile at radius r > 0, by the
// symmetrized principal-value fold t <-> 1/t onto (0,1]. For the pure log
// profile the result equals (kappa / 2s) A_{n,s} r^{-2s}.
double frac_laplacian_radial(const RadialProfile& u, double r, const Params& p,
                             const QuadratureSpec& spec);

struct SingularResidualReport {
    std::vector<double> radii;
    std::vector<double> residuals; // relative, per radius
    double max_rel_residual = 0.0;
};

// Checks (-Lap)^s u_{n,s} = lambda_{n,s} |x|^{-2s} on the given radii.
// With parallel = true the radii are evaluated with OpenMP; results are
// bit-identical to the serial path (independent cells, index-ordered output).
SingularResidualReport verify_singular_solution(const Params& p,
                                                const std::vector<double>& radii,
                                                const QuadratureSpec& spec,
                                                bool parallel = false);

// {2^k : k = -2..2}
std::vector<double> default_verification_radii();

// integral over B_r of |x|^a e^{u_{n,s}}: lambda |S^{n-1}| r^{n-2s} / (n-2s).
double ball_energy_singular(const Params& p, double r);

// the same quantity by radial quadrature (check mode)
double ball_energy_singular_quadrature(const Params& p, double r,
                                       const QuadratureSpec& spec);

} // namespace fracstab
