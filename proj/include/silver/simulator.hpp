#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "silver/schedule.hpp"

namespace silver {

// Counter-based generator: output k of stream `seed` is the splitmix64
// finalizer applied to seed + (k+1) * 0x9E3779B97F4A7C15. Stateless, so
// trials can split the counter space deterministically.
uint64_t counter_rng(uint64_t seed, uint64_t counter);
double counter_uniform(uint64_t seed, uint64_t counter);  // in [0, 1)

// Diagonal quadratic test problem with state-independent gradient offsets:
// the oracle at x returns grad f(x) + offsets[i] with equal probability.
struct OracleInstance {
    int d = 1;
    Eigen::VectorXd quad_diag;            // curvature per coordinate, in [m, M]
    Eigen::VectorXd x0;
    std::vector<Eigen::VectorXd> offsets; // n vectors, summing to zero exactly
    double sigma = 0.0;
    double R = 1.0;

    Eigen::VectorXd gradient(const Eigen::VectorXd& x) const {
        return quad_diag.cwiseProduct(x);
    }
};

struct TwoStepResult {
    double exact_expectation = 0.0;
    std::vector<double> per_path;  // n^2 squared distances; empty when n > 1000
};

struct SgdStats {
    double mean = 0.0;
    double std_error = 0.0;
    long trials = 0;
};

struct BoundReport {
    double exact = 0.0;   // enumerated expectation on the worst-case instance
    double bound = 0.0;   // R^2 h(v, sigma/R)
    double gap = 0.0;     // bound - exact, nonnegative when the bound holds
    bool ok = false;
    Schedule schedule{};
};

// Hardest instance in the class for these parameters: curvature M along the
// first coordinate, 1 elsewhere, start at R*e1, offsets +/- sigma*e1 (an odd
// support count gets one exact-gradient sample and rescaled pairs).
OracleInstance build_worst_case(double M, int n, double R, double sigma, int d = 1);

// Expected squared distance after two steps by full enumeration of the n^2
// equally likely realization paths.
TwoStepResult exact_two_step(const OracleInstance& inst, double alpha, double beta);

// Seeded multi-step runs with uniform support sampling; reproducible across
// thread counts.
SgdStats run_sgd(const OracleInstance& inst, const std::vector<double>& stepsizes,
                 long trials, uint64_t seed);

// Checks enumerated performance against the certified bound; a violation
// would falsify the certificate numerics.
BoundReport validate_bound(double M, int n, double v, double sigma, double R);

}  // namespace silver
