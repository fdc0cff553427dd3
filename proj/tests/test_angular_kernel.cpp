#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fracstab/angular_kernel.hpp"
#include "fracstab/params.hpp"

#include <cmath>

using namespace fracstab;

namespace {
QuadratureSpec kspec()
{
    QuadratureSpec s;
    s.rel_tol = 1e-11;
    return s;
}
} // namespace

TEST_CASE("t = 0 gives the full sphere measure")
{
    CHECK(angular_kernel(0.0, 3.0, 2, kspec()) ==
          doctest::Approx(2.0 * M_PI).epsilon(1e-12));
    CHECK(angular_kernel(0.0, 1.5, 3, kspec()) ==
          doctest::Approx(4.0 * M_PI).epsilon(1e-12));
}

TEST_CASE("n = 1 two-point sphere")
{
    CHECK(angular_kernel(2.0, 2.0, 1, kspec()) ==
          doctest::Approx(1.0 + 1.0 / 9.0).epsilon(1e-14));
    CHECK(angular_kernel(0.5, 1.5, 1, kspec()) ==
          doctest::Approx(std::pow(0.5, -1.5) + std::pow(1.5, -1.5)).epsilon(1e-14));
}

TEST_CASE("frozen oracle values (independent hypergeometric evaluation)")
{
    // K(t,q,n) computed externally via the exact 2F1 closed form
    CHECK(angular_kernel(0.5, 3.0, 2, kspec()) ==
          doctest::Approx(11.879905084938).epsilon(1e-9));
    CHECK(angular_kernel(0.5, 2.5, 3, kspec()) ==
          doctest::Approx(15.0222662226771).epsilon(1e-9));
    CHECK(angular_kernel(0.9, 4.5, 4, kspec()) ==
          doctest::Approx(215.076941261704).epsilon(1e-9));
    CHECK(angular_kernel(0.99, 5.8, 2, kspec()) ==
          doctest::Approx(4820778302.30477).epsilon(1e-9));
    CHECK(angular_kernel(0.3, 1.5, 5, kspec()) ==
          doctest::Approx(25.7829173598838).epsilon(1e-9));
    CHECK(angular_kernel(2.0, 3.0, 2, kspec()) ==
          doctest::Approx(1.48498813561725).epsilon(1e-9));
}

TEST_CASE("homogeneity K(1/t) = t^q K(t)")
{
    for (int n : {1, 2, 3, 5})
        for (double q : {1.4, 3.0, 4.6})
            for (double t : {0.2, 0.5, 0.8}) {
                CAPTURE(n);
                CAPTURE(q);
                CAPTURE(t);
                const double lhs = angular_kernel(1.0 / t, q, n, kspec());
                const double rhs = std::pow(t, q) * angular_kernel(t, q, n, kspec());
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
            }
    // the spec example at (t = 0.5, q = 3, n = 2): K(2) = 8 K(0.5) / 8... K(2)=2^{-3}K(0.5)
    const double k2 = angular_kernel(2.0, 3.0, 2, kspec());
    const double kh = angular_kernel(0.5, 3.0, 2, kspec());
    CHECK(kh == doctest::Approx(8.0 * k2).epsilon(1e-9));
}

TEST_CASE("domain error at the diagonal")
{
    CHECK_THROWS_AS((void)angular_kernel(1.0, 3.0, 2, kspec()), std::domain_error);
    CHECK_THROWS_AS((void)angular_kernel(1.0, 1.0, 1, kspec()), std::domain_error);
}

TEST_CASE("small-delta asymptote joins the quadrature branch continuously")
{
    for (int n : {2, 3, 4})
        for (double q : {n + 1.2, n + 2.8}) {
            const double above = angular_kernel_delta(1.1e-8, q, n, kspec());
            const double asym =
                std::pow(1.1e-8, n - 1 - q) * angular_kernel_diag_coeff(q, n);
            CHECK(above == doctest::Approx(asym).epsilon(1e-6));
        }
}

TEST_CASE("kernel table matches direct evaluation")
{
    for (double q : {3.0, 4.5}) {
        const AngularKernelTable tab(q, 2, kspec());
        CHECK(tab.max_rel_error() <= 2e-8);
        for (double delta : {1e-11, 3e-9, 2e-7, 1e-4, 0.03, 0.5, 0.93}) {
            const double direct = angular_kernel_delta(delta, q, 2, kspec());
            CHECK(tab.eval_delta(delta) == doctest::Approx(direct).epsilon(5e-8));
        }
    }
}

TEST_CASE("shifted kernel agrees with a direct sphere integral")
{
    // n = 1 exact: (rho-m)^2+t^2 and (rho+m)^2+t^2 branches
    const double m = 0.7, rho = 1.3, t = 0.4, q = 2.5;
    const double want = std::pow((rho - m) * (rho - m) + t * t, -q / 2) +
                        std::pow((rho + m) * (rho + m) + t * t, -q / 2);
    CHECK(angular_kernel_shifted(m, rho, t, q, 1, kspec()) ==
          doctest::Approx(want).epsilon(1e-12));
    // n = 2: compare against direct psi quadrature of the unreduced form
    QuadratureSpec s = kspec();
    auto f = [&](double psi) {
        const double base = rho * rho + m * m + t * t - 2.0 * rho * m * std::cos(psi);
        return std::pow(base, -q / 2);
    };
    const double direct = 2.0 * integrate_adaptive(f, 0.0, M_PI, s).value;
    CHECK(angular_kernel_shifted(m, rho, t, q, 2, kspec()) ==
          doctest::Approx(direct).epsilon(1e-9));
    // m = 0 degenerates to the full sphere measure
    CHECK(angular_kernel_shifted(0.0, rho, t, q, 2, kspec()) ==
          doctest::Approx(2.0 * M_PI * std::pow(rho * rho + t * t, -q / 2))
              .epsilon(1e-12));
}
