#pragma once

#include <Eigen/Core>

#include "silver/pep.hpp"

namespace silver {

struct SdpOptions {
    double tol = 1e-6;        // relative primal/dual residual and objective-change target
    int max_iter = 200000;
    double rho = 1.0;         // initial penalty; adapted from the residual ratio
    double over_relax = 1.6;
};

struct SdpSolution {
    double objective = 0.0;       // Tr(C H) at the cone-feasible iterate
    Eigen::MatrixXd H;            // positive semidefinite Gram matrix
    Eigen::VectorXd f_values;     // per-node function values (n+2)
    double max_violation = 0.0;   // worst linear-constraint violation at H, f
    int iterations = 0;
    bool converged = false;
};

// Maximizes Tr(C H) subject to the interpolation inequalities, the initial
// distance cap, and the n+1 variance caps, over H >= 0 and free f. Splitting
// method: alternate projection onto the slack-augmented affine set with
// projection onto the PSD-cone x nonnegative-slack product, over-relaxed.
SdpSolution solve_primal(const PepInstance& inst, const SdpOptions& opts = {});

// Worst case of the constant stepsize 2/(M+1) at unit R; the Figure-style
// red-line baseline.
SdpSolution baseline_h_constant(double M, int n, double sigma_over_R,
                                const SdpOptions& opts = {}, int n_cap = 8);

}  // namespace silver
