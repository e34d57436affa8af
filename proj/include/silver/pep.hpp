#pragma once

#include <Eigen/Core>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "silver/params.hpp"

namespace silver {

// Index set of oracle realizations: the start point, the n possible first
// iterates, and the optimum. Ordinals 0, 1..n, n+1.
struct IndexSet {
    int n = 1;
    int size() const { return n + 2; }
    int start() const { return 0; }
    int support(int i) const { return 1 + i; }  // i in [0, n)
    int star() const { return n + 1; }
    std::string label(int ordinal) const;
};

// Finite-dimensional two-step worst-case model over the Gram lift of the
// start point and all stochastic gradient realizations (dimension 1+n+n^2).
struct PepInstance {
    double M = 2.0;
    double m = 1.0;
    int n = 1;
    double alpha = 0.0;
    double beta = 0.0;
    double sigma = 0.0;
    double R = 1.0;
    int D = 3;

    IndexSet nodes;
    Eigen::MatrixXd A_R;                 // rank-1, trace 1
    std::vector<Eigen::MatrixXd> A_var;  // n+1 bounded-variance matrices
    std::vector<std::pair<int, int>> pair_order;  // ordered node pairs (i, j), i != j
    std::vector<Eigen::MatrixXd> B;      // interpolation matrices, aligned with pair_order
    Eigen::MatrixXd C_obj;               // expected final squared distance
    double f_coef = 2.0;                 // 2(M - m), multiplies f_i - f_j per pair
};

// Scalar interpolation quantity for one ordered pair of (point, gradient,
// value) triples; nonnegativity over all pairs characterizes membership in
// the strongly convex smooth class.
double interp_Q(const Eigen::VectorXd& xi, const Eigen::VectorXd& xj,
                const Eigen::VectorXd& gi, const Eigen::VectorXd& gj, double fi,
                double fj, double m, double M);

PepInstance build_instance(double M, int n, double alpha, double beta, double sigma,
                           double R, int n_cap = 8);

// Plain-text sparse listing (upper triangle, 1-based, 17 significant digits)
// so external solvers can cross-check the model.
void export_instance(const PepInstance& inst, std::ostream& os);

}  // namespace silver
