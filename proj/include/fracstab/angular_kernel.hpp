#pragma once

#include "fracstab/quadrature.hpp"

#include <vector>

namespace fracstab {

// Sphere average of the ratio kernel:
//   K(t; q, n) = int_{S^{n-1}} (1 + t^2 - 2 t <theta,omega>)^{-q/2} d(omega)
//              = |S^{n-2}| int_0^pi sin^{n-2}(psi) ((1-t)^2 + 4 t sin^2(psi/2))^{-q/2} d(psi)
// for n >= 2, and |1-t|^{-q} + (1+t)^{-q} for n = 1. Satisfies the
// homogeneity relation K(1/t) = t^q K(t).
double angular_kernel(double t, double q, int n, const QuadratureSpec& spec);

// Same kernel at t = 1 - delta, parametrized by the exact distance delta in
// (0, 1]; this is the form every diagonal fold must use near t = 1.
double angular_kernel_delta(double delta, double q, int n, const QuadratureSpec& spec);

// Leading diagonal coefficient: K(1-delta) ~ delta^{n-1-q} * Phi0 as delta -> 0
// (valid for q > n-1): Phi0 = |S^{n-2}| B((n-1)/2, (q-n+1)/2) / 2.
double angular_kernel_diag_coeff(double q, int n);

// Sphere average of the shifted kernel used by the Poisson extension:
//   int_{S^{n-1}} (rho^2 + m^2 + t^2 - 2 rho m <theta,omega>)^{-q/2} d(omega),
// reduced to the ratio kernel through tau = 1/(1+e+sqrt(e(2+e))),
// e = ((rho-m)^2+t^2)/(2 rho m).
double angular_kernel_shifted(double m, double rho, double t, double q, int n,
                              const QuadratureSpec& spec);

// Cubic-spline table of the ratio kernel for fixed (q, n), indexed by
// log(delta): K(1-delta) = delta^{-gamma} W(log delta), gamma = max(q-n+1, 0).
// Construction is deterministic; accuracy is measured at off-grid points and
// exposed as max_rel_error().
class AngularKernelTable {
public:
    AngularKernelTable(double q, int n, const QuadratureSpec& spec);

    double q() const { return q_; }
    int n() const { return n_; }
    double max_rel_error() const { return max_rel_error_; }

    // kernel at t = 1 - delta, delta in (0, 1]
    double eval_delta(double delta) const;
    // shifted kernel, same reduction as angular_kernel_shifted
    double eval_shifted(double m, double rho, double t) const;

private:
    double q_;
    int n_;
    double gamma_;
    double xi_lo_, dxi_;
    std::vector<double> w_, w2_; // values and second derivatives (natural spline)
    double diag_coeff_;
    double max_rel_error_;
};

} // namespace fracstab
