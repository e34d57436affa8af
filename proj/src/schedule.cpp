#include "silver/schedule.hpp"

#include <algorithm>
#include <cmath>

namespace silver {

namespace {

struct Cubic {
    double c3, c2, c1, c0;
    double operator()(double a) const { return ((c3 * a + c2) * a + c1) * a + c0; }
    double deriv(double a) const { return (3.0 * c3 * a + 2.0 * c2) * a + c1; }
    double scale() const {
        return std::max({std::fabs(c3), std::fabs(c2), std::fabs(c1), std::fabs(c0)});
    }
};

Cubic make_cubic(double M, int n, double v) {
    const double nn = n;
    return Cubic{(M - 1.0) * M * nn,
                 -(M + 1.0) * (M - 2.0) * nn,
                 -(4.0 * nn + (M - 1.0) * (nn - 1.0) * v),
                 2.0 * nn};
}

struct Quadratic {
    double c2, c1, c0;
    double operator()(double b) const { return (c2 * b + c1) * b + c0; }
    double deriv(double b) const { return 2.0 * c2 * b + c1; }
    double scale() const { return std::max({std::fabs(c2), std::fabs(c1), std::fabs(c0)}); }
};

Quadratic make_quad(double M, int n, double v, double a) {
    const double nn = n;
    const double w = -nn + (nn - 1.0) * v;  // recurring factor, <= 0 on the admissible box
    const double c2 = M * nn * ((M - 1.0) * (M - 1.0) * nn + (M + 1.0) * (M + 1.0) * (nn - 1.0) * v) *
                      ((M - 1.0) * a + (M + 1.0));
    const double c1 =
        2.0 * M *
        (2.0 * (M - 1.0) * M * nn * w * a * a +
         (1.0 + M) * w * ((3.0 - M) * nn + (M - 1.0) * (nn - 1.0) * v) * a +
         nn * (nn - (M - 4.0) * M * nn - (1.0 + M) * (3.0 + M) * (nn - 1.0) * v));
    const double c0 =
        -2.0 * M * (M * M - 1.0) * nn * w * a * a +
        (2.0 * (2.0 + M + 2.0 * M * M - M * M * M) * nn * nn +
         (M - 3.0) * (1.0 + M) * (1.0 + M) * (nn - 1.0) * nn * v +
         (1.0 - M) * (1.0 + M) * (1.0 + M) * (nn - 1.0) * (nn - 1.0) * v * v) *
            a +
        2.0 * (1.0 + M) * (1.0 + M) * nn * w;
    return Quadratic{c2, c1, c0};
}

// Deterministic-limit closed forms, exact whenever (n-1)v = 0.
double silver_alpha(double M) { return 2.0 / (1.0 + std::sqrt(2.0 * M * M - 2.0 * M + 1.0)); }
double silver_beta(double M) { return 2.0 / (1.0 + 2.0 * M - std::sqrt(2.0 * M * M - 2.0 * M + 1.0)); }

// Bisection keeping f(lo) >= 0 >= f(hi), then two Newton polish steps.
template <class F>
double bisect_newton(const F& f, double lo, double hi, double width) {
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) >= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int k = 0; k < 2; ++k) {
        const double d = f.deriv(x);
        if (d == 0.0) break;
        const double step = f(x) / d;
        const double y = x - step;
        if (y < lo - 1e-12 || y > hi + 1e-12) break;
        x = y;
    }
    return x;
}

constexpr double kBisectWidth = 1e-13;
constexpr double kEdge = 1e-14;  // widen brackets to absorb roots at the interval boundary

void validate_inputs(double M, int n, double v) {
    if (!(M > 1.0))
        throw invalid_params(ParamError::MNotLessThanL, "schedule requires M > 1 (normalized m = 1)");
    (void)make_v(M, n, v);
}

}  // namespace

double cubic_h(double alpha, double M, int n, double v) { return make_cubic(M, n, v)(alpha); }

double cubic_scale(double M, int n, double v) { return make_cubic(M, n, v).scale(); }

double quad_q(double beta, double M, int n, double v, double alpha_star) {
    return make_quad(M, n, v, alpha_star)(beta);
}

double quad_scale(double M, int n, double v, double alpha_star) {
    return make_quad(M, n, v, alpha_star).scale();
}

double r_diagnostic(double beta, double M, int n, double v, double alpha_star) {
    const double nn = n;
    const double a = alpha_star;
    const double c0 = 2.0 * M * nn * a + M * v * a - (nn - 1.0) * v * a - M * nn * v * a;
    const double c1 = 2.0 * M * (nn + nn * (v - 1.0) * a - v * a);
    const double c2 = M * nn * (a - 1.0 - M * (1.0 + a));
    return (c2 * beta + c1) * beta + c0;
}

double solve_alpha(double M, int n, double v) {
    validate_inputs(M, n, v);
    if (n == 1 || v == 0.0) return silver_alpha(M);

    const Cubic h = make_cubic(M, n, v);
    const double lo = 1.0 / M - kEdge;
    const double hi = 1.0 + kEdge;
    const double tol = 1e-9 * h.scale();
    if (!(h(lo) >= -tol) || !(h(hi) <= tol))
        throw numerical_error("first-stepsize cubic does not bracket a root on [1/M, 1]");
    return bisect_newton(h, lo, hi, kBisectWidth);
}

double solve_beta(double M, int n, double v, double alpha_star) {
    validate_inputs(M, n, v);
    if (n == 1 || v == 0.0) return silver_beta(M);

    const Quadratic q = make_quad(M, n, v, alpha_star);
    const double lo = alpha_star / M - kEdge;
    const double hi = (M + 1.0) / (2.0 * M) + kEdge;
    const double tol = 1e-9 * q.scale();
    if (!(q(lo) <= tol) || !(q(hi) >= -tol))
        throw numerical_error("second-stepsize quadratic does not bracket a root");

    const double disc = q.c1 * q.c1 - 4.0 * q.c2 * q.c0;
    const double disc_scale = std::max(q.c1 * q.c1, std::fabs(4.0 * q.c2 * q.c0));
    if (disc > 1e-12 * disc_scale && q.c2 != 0.0) {
        // sign-matched root to avoid cancellation, companion root via Vieta
        const double s = std::sqrt(disc);
        const double t = -0.5 * (q.c1 + (q.c1 >= 0.0 ? s : -s));
        const double r1 = t / q.c2;
        const double r2 = (t != 0.0) ? q.c0 / t : r1;
        for (double r : {r1, r2}) {
            if (r > lo && r < hi) {
                for (int k = 0; k < 2; ++k) {
                    const double d = q.deriv(r);
                    if (d == 0.0) break;
                    r -= q(r) / d;
                }
                return r;
            }
        }
        // fall through to bisection when neither closed-form root lands inside
    }
    // q(lo) < 0 < q(hi); flip sign so the bisection invariant f(lo) >= 0 holds
    struct Neg {
        const Quadratic& q;
        double operator()(double b) const { return -q(b); }
        double deriv(double b) const { return -q.deriv(b); }
    };
    return bisect_newton(Neg{q}, lo, hi, kBisectWidth);
}

Schedule solve_schedule(double M, int n, double v) {
    Schedule s{};
    s.alpha = solve_alpha(M, n, v);
    s.beta = solve_beta(M, n, v, s.alpha);
    s.alpha_residual = std::fabs(cubic_h(s.alpha, M, n, v));
    s.beta_residual = std::fabs(quad_q(s.beta, M, n, v, s.alpha));
    return s;
}

}  // namespace silver
