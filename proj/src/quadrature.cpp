#include "fracstab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace fracstab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// Gauss 7 / Kronrod 15 nodes and weights on [-1,1] (abscissae >= 0).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    double value;
    double error;
    long seq;
};

struct PanelWorse {
    bool operator()(const Panel& x, const Panel& y) const
    {
        if (x.error != y.error)
            return x.error < y.error;
        return x.seq > y.seq; // earlier panels first on ties
    }
};

// One G7K15 panel; QUADPACK-style error estimate.
void gk15(const std::function<double(double)>& f, double a, double b, double& value,
          double& error)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv[15];
    const double fc = f(center);
    fv[7] = fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        fv[i] = f(center - dx);
        fv[14 - i] = f(center + dx);
    }

    double resk = kWgk[7] * fc;
    double resabs = std::fabs(resk);
    double resg = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double sum = fv[i] + fv[14 - i];
        resk += kWgk[i] * sum;
        resabs += kWgk[i] * (std::fabs(fv[i]) + std::fabs(fv[14 - i]));
        if (i % 2 == 1)
            resg += kWg[i / 2] * sum;
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fc - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::fabs(fv[i] - mean) + std::fabs(fv[14 - i] - mean));

    value = resk * half;
    resabs *= std::fabs(half);
    resasc *= std::fabs(half);
    double err = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > kTiny / (50.0 * kEps))
        err = std::max(err, 50.0 * kEps * resabs);
    error = err;
}

// Worst-first adaptive refinement on a finite interval. The integrand is
// expected to be finite on (a,b); endpoint singularities must have been
// removed by the transform layer.
IntegralResult adapt_finite(const std::function<double(double)>& f, double a, double b,
                            const QuadratureSpec& spec)
{
    IntegralResult res;
    if (!(b > a)) {
        res.converged = true;
        return res;
    }

    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
    long seq = 0;

    Panel root{a, b, 0.0, 0.0, seq++};
    gk15(f, a, b, root.value, root.error);
    heap.push(root);

    double total = root.value;
    double total_err = root.error;
    int splits = 0;
    const double min_len = 32.0 * kEps * std::max(std::fabs(a), std::fabs(b)) + kTiny;

    std::vector<Panel> done;
    while (true) {
        const double target = std::max(spec.abs_tol, spec.rel_tol * std::fabs(total));
        if (total_err <= target || heap.empty())
            break;
        if (splits >= spec.max_subdivisions)
            break;
        Panel worst = heap.top();
        if (worst.b - worst.a <= min_len) {
            // cannot refine further; freeze the worst panel
            heap.pop();
            done.push_back(worst);
            continue;
        }
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left{worst.a, mid, 0.0, 0.0, seq++};
        Panel right{mid, worst.b, 0.0, 0.0, seq++};
        gk15(f, left.a, left.b, left.value, left.error);
        gk15(f, right.a, right.b, right.value, right.error);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++splits;
    }

    while (!heap.empty()) {
        done.push_back(heap.top());
        heap.pop();
    }
    std::sort(done.begin(), done.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double value = 0.0, err = 0.0;
    for (const Panel& p : done) {
        value += p.value;
        err += p.error;
    }
    err = std::max(err, 8.0 * kEps * std::fabs(value));
    res.value = value;
    res.error_estimate = err;
    res.subdivisions_used = splits;
    res.converged = err <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(value)) ||
                    err <= 8.0 * kEps * std::fabs(value) * 1.0000001;
    return res;
}

void accumulate(IntegralResult& acc, const IntegralResult& piece)
{
    acc.value += piece.value;
    acc.error_estimate += piece.error_estimate;
    acc.subdivisions_used += piece.subdivisions_used;
    acc.converged = acc.converged && piece.converged;
}

// Lower-endpoint grading: integral_L^{L+len} f with f ~ (x-L)^beta.
IntegralResult graded_lower(const std::function<double(double)>& f, double L, double len,
                            double beta, const QuadratureSpec& spec)
{
    const double alpha = 1.0 / (1.0 + beta);
    const double U = std::pow(len, 1.0 + beta);
    auto g = [&](double u) {
        const double d = std::max(std::pow(u, alpha), kTiny);
        return f(L + d) * alpha * std::pow(u, alpha - 1.0);
    };
    return adapt_finite(g, 0.0, U, spec);
}

// Upper-endpoint grading: integral_{H-len}^{H} f with f ~ (H-x)^beta.
IntegralResult graded_upper(const std::function<double(double)>& f, double H, double len,
                            double beta, const QuadratureSpec& spec)
{
    const double alpha = 1.0 / (1.0 + beta);
    const double U = std::pow(len, 1.0 + beta);
    auto g = [&](double u) {
        const double d = std::max(std::pow(u, alpha), kTiny);
        return f(H - d) * alpha * std::pow(u, alpha - 1.0);
    };
    return adapt_finite(g, 0.0, U, spec);
}

// Finite-interval integration honoring hints inside [a,b].
IntegralResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                                const QuadratureSpec& spec)
{
    // collect relevant hints, sorted
    std::vector<SingularityHint> hints;
    for (const auto& h : spec.singularity_hints)
        if (std::isfinite(h.location) && h.location >= a && h.location <= b)
            hints.push_back(h);
    std::sort(hints.begin(), hints.end(),
              [](const SingularityHint& x, const SingularityHint& y) {
                  return x.location < y.location;
              });

    if (hints.empty())
        return adapt_finite(f, a, b, spec);

    IntegralResult acc;
    acc.converged = true;
    const int pieces = static_cast<int>(hints.size()) + 1;
    QuadratureSpec psp = spec;
    psp.abs_tol = spec.abs_tol / pieces;

    double lo = a;
    for (std::size_t i = 0; i <= hints.size(); ++i) {
        const double hi = (i < hints.size()) ? hints[i].location : b;
        if (hi > lo) {
            // left neighbor hint grades the lower endpoint, right one the upper
            const bool grade_lo = (i > 0) && hints[i - 1].exponent < 0.0 &&
                                  hints[i - 1].exponent > -1.0;
            const bool grade_hi = (i < hints.size()) && hints[i].exponent < 0.0 &&
                                  hints[i].exponent > -1.0;
            const double len = hi - lo;
            if (grade_lo && grade_hi) {
                const double mid = 0.5 * (lo + hi);
                accumulate(acc, graded_lower(f, lo, 0.5 * len, hints[i - 1].exponent, psp));
                accumulate(acc, graded_upper(f, hi, 0.5 * len, hints[i].exponent, psp));
                (void)mid;
            } else if (grade_lo) {
                accumulate(acc, graded_lower(f, lo, len, hints[i - 1].exponent, psp));
            } else if (grade_hi) {
                accumulate(acc, graded_upper(f, hi, len, hints[i].exponent, psp));
            } else {
                accumulate(acc, adapt_finite(f, lo, hi, psp));
            }
        }
        lo = hi;
    }
    acc.error_estimate = std::max(acc.error_estimate, 8.0 * kEps * std::fabs(acc.value));
    return acc;
}

} // namespace

IntegralResult integrate_adaptive(const std::function<double(double)>& f, double lo,
                                  double hi, const QuadratureSpec& spec)
{
    if (!std::isfinite(lo))
        throw std::invalid_argument("integrate_adaptive: lower limit must be finite");
    if (std::isfinite(hi))
        return integrate_finite(f, lo, hi, spec);

    // tail fold x -> 1/x onto (0, 1/M]; keep all finite hint structure in the
    // unfolded piece
    double M = std::max({1.0, lo, 2.0 * std::fabs(lo)});
    double tail_exponent = std::numeric_limits<double>::quiet_NaN();
    for (const auto& h : spec.singularity_hints) {
        if (std::isinf(h.location))
            tail_exponent = h.exponent;
        else if (h.location > 0.0)
            M = std::max(M, 4.0 * h.location);
    }

    IntegralResult acc;
    acc.converged = true;
    QuadratureSpec half = spec;
    half.abs_tol = spec.abs_tol / 2.0;
    if (M > lo)
        accumulate(acc, integrate_finite(f, lo, M, half));

    auto folded = [&](double t) {
        const double x = 1.0 / t;
        return f(x) * x * x;
    };
    QuadratureSpec fold_spec = half;
    fold_spec.singularity_hints.clear();
    if (!std::isnan(tail_exponent) && tail_exponent < 2.0 && tail_exponent > 1.0)
        fold_spec.singularity_hints.push_back({0.0, tail_exponent - 2.0});
    accumulate(acc, integrate_finite(folded, 0.0, 1.0 / M, fold_spec));
    acc.error_estimate = std::max(acc.error_estimate, 8.0 * kEps * std::fabs(acc.value));
    return acc;
}

IntegralResult integrate_endpoint_graded(const std::function<double(double)>& F,
                                         double delta_max, double beta,
                                         const QuadratureSpec& spec)
{
    if (!(beta > -1.0))
        throw std::invalid_argument("integrate_endpoint_graded: beta must exceed -1");
    if (beta >= 0.0)
        return adapt_finite(F, 0.0, delta_max, spec);
    const double alpha = 1.0 / (1.0 + beta);
    const double U = std::pow(delta_max, 1.0 + beta);
    auto g = [&](double u) {
        const double d = std::max(std::pow(u, alpha), kTiny);
        return F(d) * alpha * std::pow(u, alpha - 1.0);
    };
    return adapt_finite(g, 0.0, U, spec);
}

IntegralResult integrate_2d_adaptive(const std::function<double(double, double)>& f,
                                     const Rect2D& rect, const QuadratureSpec& spec)
{
    QuadratureSpec inner = spec.with_tols(spec.rel_tol * 0.1, spec.abs_tol * 0.05);

    if (!rect.diagonal_singularity) {
        bool inner_ok = true;
        double inner_err_max = 0.0;
        int inner_sub_max = 0;
        auto outer_f = [&](double x) {
            auto g = [&](double y) { return f(x, y); };
            IntegralResult r = adapt_finite(g, rect.y_lo, rect.y_hi, inner);
            if (!r.converged)
                inner_ok = false;
            inner_err_max = std::max(inner_err_max, r.error_estimate);
            inner_sub_max = std::max(inner_sub_max, r.subdivisions_used);
            return r.value;
        };
        IntegralResult res = integrate_finite(outer_f, rect.x_lo, rect.x_hi, spec);
        res.error_estimate += inner_err_max * (rect.x_hi - rect.x_lo);
        res.converged = res.converged && inner_ok &&
                        res.error_estimate <=
                            std::max(spec.abs_tol, spec.rel_tol * std::fabs(res.value)) *
                                10.0;
        res.subdivisions_used += inner_sub_max;
        return res;
    }

    // rotated coordinates u = x-y, v = x+y over a square domain
    if (rect.x_lo != rect.y_lo || rect.x_hi != rect.y_hi)
        throw std::invalid_argument("diagonal flag requires a square domain");
    const double a = rect.x_lo, b = rect.x_hi;
    bool inner_ok = true;
    double inner_err_max = 0.0;
    auto slice = [&](double u) {
        auto g = [&](double v) { return f(0.5 * (v + u), 0.5 * (v - u)); };
        IntegralResult r = adapt_finite(g, 2.0 * a + std::fabs(u), 2.0 * b - std::fabs(u),
                                        inner);
        if (!r.converged)
            inner_ok = false;
        inner_err_max = std::max(inner_err_max, r.error_estimate);
        return 0.5 * r.value;
    };
    const double beta = std::max(rect.diagonal_exponent, -0.999);
    QuadratureSpec half = spec;
    half.abs_tol = spec.abs_tol / 2.0;
    IntegralResult rp = integrate_endpoint_graded([&](double d) { return slice(d); },
                                                  b - a, std::min(beta, 0.0), half);
    IntegralResult rm = integrate_endpoint_graded([&](double d) { return slice(-d); },
                                                  b - a, std::min(beta, 0.0), half);
    IntegralResult res;
    res.value = rp.value + rm.value;
    res.error_estimate = rp.error_estimate + rm.error_estimate +
                         inner_err_max * 2.0 * (b - a);
    res.subdivisions_used = rp.subdivisions_used + rm.subdivisions_used;
    res.converged = rp.converged && rm.converged && inner_ok;
    return res;
}

} // namespace fracstab
