#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fracstab/quadrature.hpp"

#include <cmath>
#include <vector>

using namespace fracstab;

namespace {

struct ClosedFormCase {
    const char* name;
    std::function<IntegralResult(const QuadratureSpec&)> run;
    double exact;
};

// the closed-form library shared by the honesty test and the acceptance suite
std::vector<ClosedFormCase> closed_form_library()
{
    std::vector<ClosedFormCase> lib;
    lib.push_back({"x^2 on [0,1]",
                   [](const QuadratureSpec& s) {
                       return integrate_adaptive([](double x) { return x * x; }, 0, 1, s);
                   },
                   1.0 / 3.0});
    lib.push_back({"x^{-1/2} on [0,1]",
                   [](const QuadratureSpec& s) {
                       QuadratureSpec sp = s;
                       sp.singularity_hints = {{0.0, -0.5}};
                       return integrate_adaptive(
                           [](double x) { return 1.0 / std::sqrt(x); }, 0, 1, sp);
                   },
                   2.0});
    lib.push_back({"x^{-0.9} on [0,1]",
                   [](const QuadratureSpec& s) {
                       QuadratureSpec sp = s;
                       sp.singularity_hints = {{0.0, -0.9}};
                       return integrate_adaptive(
                           [](double x) { return std::pow(x, -0.9); }, 0, 1, sp);
                   },
                   10.0});
    lib.push_back({"log(x) on [0,1]",
                   [](const QuadratureSpec& s) {
                       return integrate_adaptive([](double x) { return std::log(x); },
                                                 0, 1, s);
                   },
                   -1.0});
    lib.push_back({"1/(1+x^2) on [0,inf)",
                   [](const QuadratureSpec& s) {
                       return integrate_adaptive(
                           [](double x) { return 1.0 / (1.0 + x * x); }, 0,
                           std::numeric_limits<double>::infinity(), s);
                   },
                   M_PI / 2.0});
    lib.push_back({"x^{-2} on [1,inf)",
                   [](const QuadratureSpec& s) {
                       QuadratureSpec sp = s;
                       sp.singularity_hints = {
                           {std::numeric_limits<double>::infinity(), 2.0}};
                       return integrate_adaptive(
                           [](double x) { return 1.0 / (x * x); }, 1,
                           std::numeric_limits<double>::infinity(), sp);
                   },
                   1.0});
    lib.push_back({"x^{-1.5} on [1,inf)",
                   [](const QuadratureSpec& s) {
                       QuadratureSpec sp = s;
                       sp.singularity_hints = {
                           {std::numeric_limits<double>::infinity(), 1.5}};
                       return integrate_adaptive(
                           [](double x) { return std::pow(x, -1.5); }, 1,
                           std::numeric_limits<double>::infinity(), sp);
                   },
                   2.0});
    lib.push_back({"|x|^{-1/2} on [-1,1] (interior hint at 0)",
                   [](const QuadratureSpec& s) {
                       QuadratureSpec sp = s;
                       sp.singularity_hints = {{0.0, -0.5}};
                       return integrate_adaptive(
                           [](double x) { return 1.0 / std::sqrt(std::fabs(x)); }, -1,
                           1, sp);
                   },
                   4.0});
    lib.push_back({"exp(x) on [0,1]",
                   [](const QuadratureSpec& s) {
                       return integrate_adaptive([](double x) { return std::exp(x); },
                                                 0, 1, s);
                   },
                   std::exp(1.0) - 1.0});
    lib.push_back({"sin(10x) on [0,1]",
                   [](const QuadratureSpec& s) {
                       return integrate_adaptive(
                           [](double x) { return std::sin(10.0 * x); }, 0, 1, s);
                   },
                   (1.0 - std::cos(10.0)) / 10.0});
    lib.push_back({"x*exp(-x) on [0,inf)",
                   [](const QuadratureSpec& s) {
                       QuadratureSpec sp = s;
                       sp.singularity_hints = {
                           {std::numeric_limits<double>::infinity(), 3.0}};
                       return integrate_adaptive(
                           [](double x) { return x * std::exp(-x); }, 0,
                           std::numeric_limits<double>::infinity(), sp);
                   },
                   1.0});
    lib.push_back({"1 on [0,1]^2",
                   [](const QuadratureSpec& s) {
                       Rect2D r{0, 1, 0, 1};
                       return integrate_2d_adaptive(
                           [](double, double) { return 1.0; }, r, s);
                   },
                   1.0});
    lib.push_back({"x*y on [0,1]^2",
                   [](const QuadratureSpec& s) {
                       Rect2D r{0, 1, 0, 1};
                       return integrate_2d_adaptive(
                           [](double x, double y) { return x * y; }, r, s);
                   },
                   0.25});
    lib.push_back({"|x-y|^{-1/2} on [0,1]^2 (diagonal flag, s=0.75)",
                   [](const QuadratureSpec& s) {
                       Rect2D r{0, 1, 0, 1, true, -0.5};
                       return integrate_2d_adaptive(
                           [](double x, double y) {
                               return std::pow(std::fabs(x - y), -0.5);
                           },
                           r, s);
                   },
                   8.0 / 3.0});
    return lib;
}

} // namespace

TEST_CASE("closed-form library converges to the exact values")
{
    QuadratureSpec spec;
    spec.rel_tol = 1e-10;
    for (const auto& c : closed_form_library()) {
        CAPTURE(c.name);
        const IntegralResult r = c.run(spec);
        CHECK(r.converged);
        CHECK(r.value == doctest::Approx(c.exact).epsilon(1e-8));
    }
}

TEST_CASE("error honesty: true error <= 10x reported estimate")
{
    for (double tol : {1e-6, 1e-9, 1e-11}) {
        QuadratureSpec spec;
        spec.rel_tol = tol;
        for (const auto& c : closed_form_library()) {
            CAPTURE(c.name);
            CAPTURE(tol);
            const IntegralResult r = c.run(spec);
            const double true_err = std::fabs(r.value - c.exact);
            CHECK(true_err <= 10.0 * r.error_estimate + 1e-15 * std::fabs(c.exact));
        }
    }
}

TEST_CASE("determinism: identical inputs give bit-identical results")
{
    QuadratureSpec spec;
    spec.rel_tol = 1e-9;
    auto f = [](double x) { return std::sin(3.0 * x) / (0.1 + x * x); };
    const IntegralResult a = integrate_adaptive(f, 0.0, 5.0, spec);
    const IntegralResult b = integrate_adaptive(f, 0.0, 5.0, spec);
    CHECK(a.value == b.value);
    CHECK(a.error_estimate == b.error_estimate);
    CHECK(a.subdivisions_used == b.subdivisions_used);
}

TEST_CASE("non-convergence is signaled, never silently wrong")
{
    QuadratureSpec spec;
    spec.rel_tol = 1e-12;
    spec.max_subdivisions = 3;
    auto nasty = [](double x) { return std::sin(200.0 * x) * std::pow(x, -0.3); };
    const IntegralResult r = integrate_adaptive(nasty, 0.0, 1.0, spec);
    CHECK_FALSE(r.converged);
}

TEST_CASE("graded endpoint integration in offset space")
{
    QuadratureSpec spec;
    spec.rel_tol = 1e-10;
    // integral_0^1 d^{-0.8} dd = 5; F receives exact offsets
    const IntegralResult r = integrate_endpoint_graded(
        [](double d) { return std::pow(d, -0.8); }, 1.0, -0.8, spec);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(5.0).epsilon(1e-9));
    // beta = 0 falls back to plain integration
    const IntegralResult r2 = integrate_endpoint_graded(
        [](double d) { return d * d; }, 2.0, 0.0, spec);
    CHECK(r2.value == doctest::Approx(8.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("tolerance knobs are honored")
{
    QuadratureSpec loose;
    loose.rel_tol = 1e-4;
    QuadratureSpec tight;
    tight.rel_tol = 1e-12;
    auto f = [](double x) { return std::exp(-x) * std::cos(8.0 * x); };
    const IntegralResult rl = integrate_adaptive(f, 0.0, 3.0, loose);
    const IntegralResult rt = integrate_adaptive(f, 0.0, 3.0, tight);
    CHECK(rt.subdivisions_used >= rl.subdivisions_used);
    const double exact = (1.0 - std::exp(-3.0) * (std::cos(24.0) - 8.0 * std::sin(24.0))) / 65.0;
    CHECK(rt.value == doctest::Approx(exact).epsilon(1e-11));
}
