#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fracstab/gamma.hpp"

#include <cmath>

using namespace fracstab;

TEST_CASE("log_abs_gamma matches libm lgamma on (0, 50]")
{
    // libm lgamma is the independent high-precision oracle here
    double worst = 0.0;
    for (int i = 1; i <= 5000; ++i) {
        const double x = i * 0.01;
        const double got = log_abs_gamma(x);
        const double want = std::lgamma(x);
        const double err = std::fabs(got - want) / std::max(1.0, std::fabs(want));
        worst = std::max(worst, err);
    }
    CHECK(worst < 1e-13); // >= 13 significant digits
}

TEST_CASE("reflection formula for negative non-integer arguments")
{
    for (double x : {-0.5, -0.25, -0.75, -0.9, -0.1, -1.5, -2.3}) {
        CHECK(log_abs_gamma(x) ==
              doctest::Approx(std::lgamma(x)).epsilon(1e-13));
    }
}

TEST_CASE("gamma_fn exact values")
{
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    // Gamma(-1/2) = -2 sqrt(pi)
    CHECK(gamma_fn(-0.5) == doctest::Approx(-2.0 * std::sqrt(M_PI)).epsilon(1e-13));
}

TEST_CASE("gamma sign alternation on negative axis")
{
    CHECK(gamma_sign(-0.5) == -1.0);
    CHECK(gamma_sign(-1.5) == 1.0);
    CHECK(gamma_sign(-2.5) == -1.0);
    CHECK(gamma_sign(0.3) == 1.0);
}

TEST_CASE("poles at non-positive integers")
{
    CHECK(std::isinf(log_abs_gamma(0.0)));
    CHECK(std::isinf(log_abs_gamma(-3.0)));
    CHECK_THROWS_AS((void)gamma_sign(-2.0), std::domain_error);
}
