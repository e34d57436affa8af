#pragma once

#include <Eigen/Core>

#include <array>
#include <string>

#include "silver/schedule.hpp"

namespace silver {

// Dual multipliers certifying the expected-error bound. All supports share one
// value per multiplier family, so a single representative is stored; matrix
// assembly expands them on demand.
struct DualCertificate {
    double lambda_i_star;   // support -> optimum
    double lambda_star_i;   // optimum -> support
    double lambda_0_star;   // start -> optimum (identically zero)
    double lambda_star_0;   // optimum -> start
    double lambda_0_i;      // start -> support
    double lambda_i_0;      // support -> start
    double tau;             // initial-distance multiplier
    double mu_0;            // variance multiplier at the start point (+inf at v = 0, n > 1)
    double mu_i;            // variance multiplier at each first iterate
    // parameters of the reduced lower-right block
    double z;
    double delta1;
    double delta2;
};

struct BoundEval {
    double tau_v;  // contraction coefficient
    double mu_v;   // aggregate variance coefficient, possibly +inf
    double h;      // tau + mu * (sigma/R)^2; +inf iff mu = +inf and sigma > 0
};

// Dense dual-constraint slack matrix of dimension 1+n+n^2 together with the
// nine distinct entry values of its four structured pieces.
struct DeltaMatrix {
    Eigen::MatrixXd mat;
    int n = 0;
    double corner = 0;          // (1,1)
    double first_row_mid = 0;   // first row over the start-gradient block
    double first_row_tail = 0;  // first row over the second-step gradient block
    double mid_diag = 0, mid_off = 0;        // top-left n x n block
    double tail_diag = 0, tail_off = 0;      // diagonal n x n blocks of the n^2 part
    double couple_match = 0, couple_other = 0;  // coupling blocks
};

struct PsdVerdict {
    bool ok = false;
    std::string failed_condition;  // empty when ok
};

DualCertificate build_certificate(double M, int n, double v, const Schedule& schedule);

BoundEval bound_h(double M, int n, double v, double sigma_over_R);

// Accepts arbitrary (alpha, beta) so perturbation tests can probe the
// first-row identities away from the solved schedule.
DeltaMatrix assemble_delta(double M, int n, double v, double alpha, double beta,
                           const DualCertificate& cert, int n_cap = 64);

// Smallest eigenvalue via a symmetric eigensolver.
double psd_check_numeric(const Eigen::MatrixXd& delta);

// Tolerance used when interpreting psd_check_numeric: scaled by a spectral
// norm estimate to absorb O(n^2) rounding in assembly.
double psd_tolerance(const Eigen::MatrixXd& delta, double factor = 1e-8);

PsdVerdict psd_check_analytic(double z, double delta1, double delta2, int n, double v);

// Left-minus-right values of the nine defining equations at the given
// schedule and multipliers.
std::array<double, 9> equation_system_residuals(double M, int n, double v,
                                                const Schedule& schedule,
                                                const DualCertificate& cert);

// Closed form of the contraction coefficient at v = 0.
double tau_at_zero(double M);

}  // namespace silver
