#pragma once

#include <optional>

namespace fracstab {

// Validated (n, s, a) triple: n >= 1, 0 < s < 1, a >= 0, n > 2s.
struct Params {
    int n;
    double s;
    double a;
};

Params validate_params(int n, double s, double a);

// Outcome of the stability inequality for the explicit singular solution:
//   lhs = Gamma(n/2) Gamma(s) / Gamma((n-2s)/2) * (s + a/2)
//   rhs = Gamma^2((n+2s)/4) / Gamma^2((n-2s)/4)
// Stable iff lhs <= rhs; the nonexistence theorem applies iff lhs > rhs.
struct StabilityVerdict {
    double lhs;
    double rhs;
    bool singular_solution_stable;
    bool theorem_applies;
};

// Normalizing constant of the fractional Laplacian:
// c_{n,s} = 2^{2s} Gamma((n+2s)/2) / (pi^{n/2} |Gamma(-s)|).
double constant_cns(const Params& p);

// kappa_s = Gamma(1-s) / (2^{2s-1} Gamma(s)), the extension flux constant.
double constant_kappa(double s);

// A_{n,s} = 2^{2s} Gamma(n/2) Gamma(1+s) / Gamma((n-2s)/2),
// the constant in (-Lap)^s log(1/|x|^{2s}) = A_{n,s} |x|^{-2s}.
double constant_A(const Params& p);

// lambda_{n,s} = 2^{2s} Gamma(n/2) Gamma(s) / Gamma((n-2s)/2) * (s + a/2),
// the multiplicative constant of the singular solution.
double constant_lambda_sing(const Params& p);

// Hardy constant Lambda_{n,s} = 2^{2s} Gamma^2((n+2s)/4) / Gamma^2((n-2s)/4).
double constant_Lambda_hardy(const Params& p);

// Poisson kernel normalizer d_{n,s} = Gamma((n+2s)/2) / (pi^{n/2} Gamma(s)).
double constant_dns(const Params& p);

StabilityVerdict stability_inequality(const Params& p);

// (n+2s+2a)/(n-2s) for n > 2s, +infinity otherwise. Accepts raw inputs so
// the n <= 2s branch is representable.
double sobolev_critical_exponent(int n, double s, double a);

struct JlVerdict {
    double lhs;
    double rhs;
    bool holds;
};

// Joseph-Lundgren-type condition for the Henon-Lane-Emden companion problem
// at exponent q > 1; theta = (s+a/2)/(q-1) must lie in (0, (n-2s)/2).
JlVerdict jl_condition_lane_emden(const Params& p, double q);

// Surface measure of the unit k-sphere S^k in R^{k+1}.
double sphere_surface(int k);

namespace detail {
// Raw versions used for formal cross-checks outside the validated domain
// (e.g. the classical s = 1 thresholds and the n = 2s boundary).
double stability_lhs_raw(double n, double s, double a);
double stability_rhs_raw(double n, double s);
double lambda_hardy_raw(double n, double s);
double cns_raw(double n, double s);
double dns_raw(double n, double s);
} // namespace detail

} // namespace fracstab
