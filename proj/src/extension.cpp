#include "fracstab/extension.hpp"

#include <cmath>
#include <stdexcept>

namespace fracstab {

namespace {

double shifted_kernel(double m, double rho, double t, double q, int n,
                      const QuadratureSpec& kspec, const AngularKernelTable* table)
{
    if (table)
        return table->eval_shifted(m, rho, t);
    return angular_kernel_shifted(m, rho, t, q, n, kspec);
}

// integral_0^inf g(m) dm with the peak/log/tail structure of extension
// integrands: split hints at the kernel peak and profile scales, tail decay
// m^{-(1+2s)} (up to logs).
IntegralResult radial_integral(const std::function<double(double)>& g,
                               const RadialProfile& u, double rho, double t, double s,
                               const QuadratureSpec& spec)
{
    QuadratureSpec rs = spec;
    rs.singularity_hints.clear();
    auto add = [&](double x) {
        if (x > 0.0 && std::isfinite(x))
            rs.singularity_hints.push_back({x, 0.0});
    };
    if (rho > 0.0) {
        add(std::max(rho - 4.0 * t, 0.25 * rho));
        add(rho);
        add(rho + 4.0 * t);
        add(4.0 * (rho + t));
    }
    add(t);
    if (u.perturbation) {
        add(u.perturbation->support_lo);
        add(u.perturbation->support_hi);
    }
    rs.singularity_hints.push_back(
        {std::numeric_limits<double>::infinity(), 1.0 + 2.0 * s});
    return integrate_adaptive(g, 0.0, std::numeric_limits<double>::infinity(), rs);
}

} // namespace

double poisson_constant(const Params& p)
{
    return constant_dns(p);
}

double poisson_normalization_check(const Params& p, HalfSpacePoint X,
                                   const QuadratureSpec& spec)
{
    RadialProfile one;
    one.offset = 1.0;
    return extend_radial(one, X, p, spec);
}

double extend_radial(const RadialProfile& u, HalfSpacePoint X, const Params& p,
                     const QuadratureSpec& spec, const ExtensionKernels& k)
{
    const double rho = X.rho, t = X.t;
    if (rho < 0.0 || t < 0.0)
        throw std::domain_error("extend_radial: X must lie in the closed half-space");
    if (t == 0.0) {
        if (rho == 0.0 && u.kappa != 0.0)
            throw std::domain_error("extend_radial: singular profile at the origin");
        return u(rho); // boundary trace
    }
    const double n = p.n, s = p.s;
    const double q = n + 2.0 * s;
    QuadratureSpec kspec = spec.with_tols(std::min(1e-10, spec.rel_tol * 1e-2), 0.0);

    // the constant part extends to itself exactly; integrating u - u(|X|)
    // keeps the integrand small where the kernel mass sits
    const double c0 = u(std::hypot(rho, t));
    auto g = [&](double m) {
        return (u(m) - c0) * std::pow(m, n - 1.0) *
               shifted_kernel(m, rho, t, q, p.n, kspec, k.kq);
    };
    IntegralResult res = radial_integral(g, u, rho, t, s, spec);
    if (!res.converged)
        throw QuadratureError("extend_radial: radial integral did not converge");
    return c0 + constant_dns(p) * std::pow(t, 2.0 * s) * res.value;
}

double poisson_log_gap(HalfSpacePoint X, const Params& p, const QuadratureSpec& spec)
{
    if (!(X.rho > 0.0) || !(X.t > 0.0))
        throw std::domain_error("poisson_log_gap: need rho > 0 and t > 0");
    RadialProfile logp;
    logp.kappa = -1.0; // u(m) = log m
    return extend_radial(logp, X, p, spec) - std::log(X.rho);
}

GradExtension grad_extension(const RadialProfile& u, HalfSpacePoint X, const Params& p,
                             const QuadratureSpec& spec, const ExtensionKernels& k)
{
    const double rho = X.rho, t = X.t;
    if (!(t > 0.0))
        throw std::domain_error("grad_extension: need t > 0");
    const double n = p.n, s = p.s;
    const double q = n + 2.0 * s;
    const double d = constant_dns(p);
    QuadratureSpec kspec = spec.with_tols(std::min(1e-10, spec.rel_tol * 1e-2), 0.0);

    // constants have vanishing gradient: differentiate the extension of
    // u - u(|X|) only (the kernel-derivative identities cancel exactly)
    const double c0 = u(std::hypot(rho, t));
    auto gt = [&](double m) {
        const double kq = shifted_kernel(m, rho, t, q, p.n, kspec, k.kq);
        const double kq2 = shifted_kernel(m, rho, t, q + 2.0, p.n, kspec, k.kq2);
        return (u(m) - c0) * std::pow(m, n - 1.0) * (2.0 * s * kq - q * t * t * kq2);
    };
    IntegralResult rt = radial_integral(gt, u, rho, t, s, spec);
    if (!rt.converged)
        throw QuadratureError("grad_extension: d/dt integral did not converge");

    GradExtension out;
    out.d_t = d * std::pow(t, 2.0 * s - 1.0) * rt.value;

    if (rho == 0.0) {
        out.d_rho = 0.0; // radial symmetry on the axis
        return out;
    }
    auto gr = [&](double m) {
        const double kq = shifted_kernel(m, rho, t, q, p.n, kspec, k.kq);
        const double kq2 = shifted_kernel(m, rho, t, q + 2.0, p.n, kspec, k.kq2);
        return (u(m) - c0) * std::pow(m, n - 1.0) *
               ((rho * rho - m * m - t * t) * kq2 + kq) / (2.0 * rho);
    };
    IntegralResult rr = radial_integral(gr, u, rho, t, s, spec);
    if (!rr.converged)
        throw QuadratureError("grad_extension: d/drho integral did not converge");
    out.d_rho = -q * d * std::pow(t, 2.0 * s) * rr.value;
    return out;
}

} // namespace fracstab
