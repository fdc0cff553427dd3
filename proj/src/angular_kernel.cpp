#include "fracstab/angular_kernel.hpp"

#include "fracstab/gamma.hpp"
#include "fracstab/params.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fracstab {

namespace {

constexpr double kDeltaAsym = 1e-9; // below this use the diagonal asymptote (q-n+1 >= 1)

double psi_integral(double delta, double tau, double q, int n, const QuadratureSpec& spec)
{
    const double d2 = delta * delta;
    auto f = [&](double psi) {
        const double sh = std::sin(0.5 * psi);
        const double base = d2 + 4.0 * tau * sh * sh;
        const double sn = (n == 2) ? 1.0 : std::pow(std::sin(psi), n - 2);
        return sn * std::pow(base, -0.5 * q);
    };
    QuadratureSpec ks = spec;
    ks.singularity_hints.clear();
    // seed split points at the peak scales so refinement starts well-placed
    for (double p = std::max(delta, 1e-300); p < 1.5; p *= 8.0)
        ks.singularity_hints.push_back({p, 0.0});
    return integrate_adaptive(f, 0.0, M_PI, ks).value;
}

} // namespace

namespace {
// kernel at t = 1 - delta for delta in (0, ~1.5); tau < 0 (delta > 1) is the
// analytic continuation used only for table construction padding
double raw_kernel_delta(double delta, double q, int n, const QuadratureSpec& spec)
{
    if (n == 1)
        return std::pow(delta, -q) + std::pow(2.0 - delta, -q);
    if (delta < 1e-9 && q - n + 1 >= 1.0)
        return std::pow(delta, n - 1 - q) * angular_kernel_diag_coeff(q, n);
    return sphere_surface(n - 2) * psi_integral(delta, 1.0 - delta, q, n, spec);
}
} // namespace

double angular_kernel_diag_coeff(double q, int n)
{
    // |S^{n-2}| * B((n-1)/2, (q-n+1)/2) / 2
    const double lb = log_abs_gamma((n - 1) / 2.0) + log_abs_gamma((q - n + 1) / 2.0) -
                      log_abs_gamma(q / 2.0);
    return 0.5 * sphere_surface(n - 2) * std::exp(lb);
}

double angular_kernel_delta(double delta, double q, int n, const QuadratureSpec& spec)
{
    if (!(delta > 0.0) || delta > 1.0)
        throw std::domain_error("angular_kernel_delta: delta must lie in (0,1]");
    if (n == 1) {
        const double tau = 1.0 - delta;
        return std::pow(delta, -q) + std::pow(1.0 + tau, -q);
    }
    if (delta < kDeltaAsym && q - n + 1 >= 1.0)
        return std::pow(delta, n - 1 - q) * angular_kernel_diag_coeff(q, n);
    const double dd = std::max(delta, 1e-250);
    return sphere_surface(n - 2) * psi_integral(dd, 1.0 - delta, q, n, spec);
}

double angular_kernel(double t, double q, int n, const QuadratureSpec& spec)
{
    if (t < 0.0)
        throw std::domain_error("angular_kernel: t must be >= 0");
    if (n < 1)
        throw std::domain_error("angular_kernel: n must be >= 1");
    if (t == 1.0) {
        if (q >= n - 1)
            throw std::domain_error("angular_kernel: diagonal singularity at t = 1");
        return sphere_surface(n - 2) * psi_integral(0.0, 1.0, q, n, spec);
    }
    if (t == 0.0)
        return sphere_surface(n - 1);
    if (t < 1.0)
        return angular_kernel_delta(1.0 - t, q, n, spec);
    // homogeneity fold: K(t) = t^{-q} K(1/t)
    const double inv = 1.0 / t;
    return std::pow(t, -q) * angular_kernel_delta((t - 1.0) * inv, q, n, spec);
}

double angular_kernel_shifted(double m, double rho, double t, double q, int n,
                              const QuadratureSpec& spec)
{
    if (m < 0.0 || rho < 0.0)
        throw std::domain_error("angular_kernel_shifted: radii must be >= 0");
    if (m * rho == 0.0)
        return sphere_surface(n - 1) * std::pow(rho * rho + m * m + t * t, -0.5 * q);
    const double dr = rho - m;
    const double e = (dr * dr + t * t) / (2.0 * rho * m);
    if (e == 0.0)
        throw std::domain_error("angular_kernel_shifted: singular point m = rho, t = 0");
    const double se = std::sqrt(e * (2.0 + e));
    const double A = rho * m * (1.0 + e + se);
    const double delta = (e + se) / (1.0 + e + se);
    return std::pow(A, -0.5 * q) * angular_kernel_delta(delta, q, n, spec);
}

AngularKernelTable::AngularKernelTable(double q, int n, const QuadratureSpec& spec)
    : q_(q), n_(n), gamma_(std::max(q - n + 1.0, 0.0))
{
    diag_coeff_ = (n >= 2 && q > n - 1) ? angular_kernel_diag_coeff(q, n) : 0.0;

    const double xi_min = std::log(1e-12);
    // extend slightly past delta = 1 (tau < 0 is still analytic) so the
    // natural-spline end condition sits outside the evaluation range
    const double xi_max = 0.09;
    QuadratureSpec ks = spec.with_tols(1e-11, 0.0);
    ks.max_subdivisions = 2000;

    int npts = 3072;
    for (int attempt = 0; attempt < 3; ++attempt) {
        xi_lo_ = xi_min;
        dxi_ = (xi_max - xi_min) / (npts - 1);
        w_.assign(npts, 0.0);
        for (int i = 0; i < npts; ++i) {
            const double delta = std::exp(xi_lo_ + i * dxi_);
            w_[i] = raw_kernel_delta(delta, q, n, ks) * std::pow(delta, gamma_);
        }
        // natural cubic spline second derivatives
        const int N = npts;
        w2_.assign(N, 0.0);
        std::vector<double> u(N, 0.0);
        for (int i = 1; i < N - 1; ++i) {
            const double sig = 0.5;
            const double pp = sig * w2_[i - 1] + 2.0;
            w2_[i] = (sig - 1.0) / pp;
            u[i] = (w_[i + 1] - 2.0 * w_[i] + w_[i - 1]) * 3.0 / (dxi_ * dxi_);
            u[i] = (u[i] - sig * u[i - 1]) / pp;
        }
        for (int k = N - 2; k >= 1; --k)
            w2_[k] = w2_[k] * w2_[k + 1] + u[k];

        // measure accuracy at off-grid points, including a dense sweep of the
        // near-diagonal decade where the spline is most stressed
        max_rel_error_ = 0.0;
        auto probe = [&](double delta) {
            const double exact = angular_kernel_delta(delta, q, n, ks);
            const double got = eval_delta(delta);
            max_rel_error_ = std::max(max_rel_error_,
                                      std::fabs(got - exact) / std::fabs(exact));
        };
        for (int i = 0; i < 160; ++i) {
            const double xi = xi_lo_ + (i + 0.5) * (std::log(1.0) - xi_lo_) / 160.0;
            probe(std::exp(xi));
        }
        for (int i = 1; i <= 40; ++i)
            probe(1.0 - 0.2 * i / 41.0);
        if (max_rel_error_ <= 1e-8)
            break;
        npts *= 2;
    }
}

double AngularKernelTable::eval_delta(double delta) const
{
    if (!(delta > 0.0) || delta > 1.0)
        throw std::domain_error("AngularKernelTable: delta must lie in (0,1]");
    if (n_ == 1) {
        const double tau = 1.0 - delta;
        return std::pow(delta, -q_) + std::pow(1.0 + tau, -q_);
    }
    const double xi = std::log(delta);
    if (xi <= xi_lo_) {
        if (gamma_ >= 1.0)
            return std::pow(delta, n_ - 1 - q_) * diag_coeff_;
        return w_.front() * std::pow(delta, -gamma_); // flat continuation, gamma < 1
    }
    const int N = static_cast<int>(w_.size());
    int i = static_cast<int>((xi - xi_lo_) / dxi_);
    if (i > N - 2)
        i = N - 2;
    const double x0 = xi_lo_ + i * dxi_;
    const double bfrac = (xi - x0) / dxi_;
    const double afrac = 1.0 - bfrac;
    const double w = afrac * w_[i] + bfrac * w_[i + 1] +
                     ((afrac * afrac * afrac - afrac) * w2_[i] +
                      (bfrac * bfrac * bfrac - bfrac) * w2_[i + 1]) *
                         dxi_ * dxi_ / 6.0;
    return w * std::pow(delta, -gamma_);
}

double AngularKernelTable::eval_shifted(double m, double rho, double t) const
{
    if (m * rho == 0.0)
        return sphere_surface(n_ - 1) * std::pow(rho * rho + m * m + t * t, -0.5 * q_);
    const double dr = rho - m;
    const double e = (dr * dr + t * t) / (2.0 * rho * m);
    const double se = std::sqrt(e * (2.0 + e));
    const double A = rho * m * (1.0 + e + se);
    const double delta = (e + se) / (1.0 + e + se);
    return std::pow(A, -0.5 * q_) * eval_delta(delta);
}

} // namespace fracstab
