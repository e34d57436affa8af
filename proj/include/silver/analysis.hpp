#pragma once

#include <string>
#include <vector>

#include "silver/certificate.hpp"

namespace silver {

// Constants comparing the schedule against the constant stepsize 2/(M+1).
struct TheoryConstants {
    double C_ratio = 0.0;   // guaranteed improvement factor, in (0, 1)
    double tau_bar = 0.0;   // ((M-1)/(M+1))^4
    double mu_bar = 0.0;    // 8(1+M^2)/(1+M)^4
    double U = 0.0;         // squared relative-noise threshold (+inf when n = 1)
    double v_max = 0.0;     // right end of the scanned v range
    double v_argmax = 0.0;  // maximizer of the threshold ratio
    bool deterministic_limit = false;  // n = 1: the bound is noise-free
    std::string note;       // diagnostic when the scan found no positive ratio
};

struct ImprovementReport {
    double sigma_over_R = 0.0;
    double best_v = 0.0;
    double h_at_best_v = 0.0;
    double h1_value = 0.0;
    bool improves = false;    // h(best_v) <= C * h1
    double ratio_achieved = 0.0;  // h(best_v) / h1
};

struct ScheduleRow {
    double v, alpha, beta;
};

struct BoundRow {
    double v, tau, mu, h;
};

// Closed-form two-step performance of the constant stepsize on the explicit
// worst-case instance; a lower bound for the constant-stepsize PEP value.
double h1(double M, double sigma_over_R);

// Guaranteed ratio between the tuned schedule bound and h1 in the
// small-noise regime.
double ratio_C(double M);

// v grid used by the sweeps and scans: log-spaced below 0.1*v_domain (the
// variance coefficient diverges at 0), linear tail above, clamped below at
// 1e-8*v_domain. Optionally prepends v = 0.
std::vector<double> v_grid(double M, int n, int points, bool include_zero = false);

// Largest squared noise ratio for which the tuned schedule provably beats the
// constant stepsize by the factor C. Dense scan plus golden-section
// refinement; deterministic for fixed inputs.
TheoryConstants threshold_U(double M, int n, int points = 2001);

// Minimizes the bound over v in (0, v_domain]; (0, tau(0)) when n = 1.
std::pair<double, double> best_v(double M, int n, double sigma_over_R,
                                 int points = 2001);

ImprovementReport improvement_certificate(double M, int n, double sigma_over_R);

std::vector<ScheduleRow> sweep_schedule(double M, int n,
                                        const std::vector<double>& grid);
std::vector<BoundRow> sweep_bound(double M, int n, const std::vector<double>& grid,
                                  double sigma_over_R);

// Worker count for sweep evaluation: SILVERPEP_THREADS when set, otherwise
// the machine parallelism. Results are assembled in input order either way.
int sweep_workers();

}  // namespace silver
