#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracstab {

// Known algebraic singularity of the integrand: f ~ |x - location|^exponent
// near `location` (exponent in (-1,0) triggers a grading substitution,
// exponent >= 0 only forces a split). A hint at location = +infinity declares
// polynomial tail decay f ~ x^{-exponent}.
struct SingularityHint {
    double location;
    double exponent;
};

struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 0.0;
    int max_subdivisions = 4000;
    std::vector<SingularityHint> singularity_hints;

    QuadratureSpec with_tols(double rel, double abs) const
    {
        QuadratureSpec s = *this;
        s.rel_tol = rel;
        s.abs_tol = abs;
        s.singularity_hints.clear();
        return s;
    }
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    int subdivisions_used = 0;
};

// Thrown by module-level operations when a required integral did not converge.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive Gauss-Kronrod (G7,K15) integration of f over [lo, hi]; hi may be
// +infinity (folded onto (0, 1/M] by x -> 1/x). Deterministic: fixed
// subdivision order, index-ordered summation.
IntegralResult integrate_adaptive(const std::function<double(double)>& f, double lo,
                                  double hi, const QuadratureSpec& spec);

// integral_0^{delta_max} F(delta) d(delta) where F ~ delta^beta, beta in (-1,0].
// The substitution delta = u^{1/(1+beta)} is applied in offset space, so F
// receives the exact distance to the singular point (never a rounded x).
IntegralResult integrate_endpoint_graded(const std::function<double(double)>& F,
                                         double delta_max, double beta,
                                         const QuadratureSpec& spec);

struct Rect2D {
    double x_lo, x_hi, y_lo, y_hi;
    bool diagonal_singularity = false; // integrand ~ |x-y|^diagonal_exponent
    double diagonal_exponent = 0.0;    // used only when the flag is set (square domain)
};

// Iterated adaptive 2D integration. With the diagonal flag set the domain must
// be a square; the integral is evaluated in rotated coordinates u = x-y,
// v = x+y so the singular set lies on the u = 0 axis.
IntegralResult integrate_2d_adaptive(const std::function<double(double, double)>& f,
                                     const Rect2D& rect, const QuadratureSpec& spec);

} // namespace fracstab
