#pragma once

#include "silver/params.hpp"

namespace silver {

// Two-step stepsize schedule under the m = 1 normalization, with the absolute
// values of the defining polynomials at the returned roots.
struct Schedule {
    double alpha;
    double beta;
    double alpha_residual;
    double beta_residual;
};

// Cubic whose unique root in [1/M, 1) is the first stepsize.
double cubic_h(double alpha, double M, int n, double v);

// Largest absolute coefficient of the cubic; residual tolerances scale by it.
double cubic_scale(double M, int n, double v);

// Quadratic in beta (alpha_star fixed) whose root in (alpha*/M, (M+1)/(2M)) is
// the second stepsize.
double quad_q(double beta, double M, int n, double v, double alpha_star);

double quad_scale(double M, int n, double v, double alpha_star);

// Diagnostic quadratic from the multiplier nonnegativity analysis; at the
// solved schedule its value is <= 0.
double r_diagnostic(double beta, double M, int n, double v, double alpha_star);

double solve_alpha(double M, int n, double v);
double solve_beta(double M, int n, double v, double alpha_star);
Schedule solve_schedule(double M, int n, double v);

}  // namespace silver
