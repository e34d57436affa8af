#include "silver/certificate.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>

namespace silver {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_schedule_matches(double M, int n, double v, const Schedule& s) {
    const double ha = std::fabs(cubic_h(s.alpha, M, n, v));
    const double qb = std::fabs(quad_q(s.beta, M, n, v, s.alpha));
    if (ha > 1e-6 * cubic_scale(M, n, v) || qb > 1e-6 * quad_scale(M, n, v, s.alpha))
        throw invalid_params(ParamError::ScheduleMismatch,
                             "schedule does not solve the stepsize system for (M, n, v)");
}

}  // namespace

double tau_at_zero(double M) {
    const double s = std::sqrt(2.0 * M * M - 2.0 * M + 1.0);
    // s - M = (M-1)^2/(s+M) avoids the cancellation that would otherwise wipe
    // out all significant digits as M approaches 1
    const double d = (M - 1.0) * (M - 1.0) / (s + M);
    const double r = d / (2.0 + d);
    return r * r;
}

DualCertificate build_certificate(double M, int n, double v, const Schedule& sched) {
    (void)make_v(M, n, v);
    check_schedule_matches(M, n, v, sched);

    const double a = sched.alpha;
    const double b = sched.beta;
    const double nn = n;
    DualCertificate c{};

    const double den = nn * (1.0 + M - a + M * a);
    c.lambda_i_star = (a + b - a * b) / den;
    c.lambda_star_i = (M * b + a * (-1.0 + M * b)) / (M * den);
    c.lambda_0_star = 0.0;
    c.lambda_star_0 = nn * (c.lambda_i_star - c.lambda_star_i);

    const double sum_ms = c.lambda_i_star + M * c.lambda_star_i;
    const double sum_plain = c.lambda_i_star + c.lambda_star_i;
    const double common =
        (nn * nn * sum_ms * sum_ms - nn * sum_plain) / (2.0 * (nn - nn * v + v));
    const double half_diff = 0.5 * (c.lambda_i_star - c.lambda_star_i);
    c.lambda_0_i = common + half_diff;
    c.lambda_i_0 = common - half_diff;

    // tau equals 1 - M(sum of optimum-adjacent multipliers); the equivalent
    // product form (1-a)(1+M-2Mb)/(1+M+(M-1)a) avoids cancellation when tau
    // is small. In the deterministic limit the two factors have stable closed
    // forms: 1-a = (s-1)/(s+1) and 1+M-2Mb = 2M(M-1)^3/(2M^2-M+1+(1+M)s).
    if (n == 1 || v == 0.0) {
        const double s_ = std::sqrt(2.0 * M * M - 2.0 * M + 1.0);
        const double one_minus_a = (2.0 * M * (M - 1.0) / (s_ + 1.0)) / (s_ + 1.0);
        const double bracket = 2.0 * M * (M - 1.0) * (M - 1.0) * (M - 1.0) /
                               ((2.0 * M * M - M + 1.0 + (1.0 + M) * s_) *
                                (1.0 + 2.0 * M - s_));
        c.tau = one_minus_a * bracket / (1.0 + M + (M - 1.0) * a);
    } else {
        c.tau = (1.0 - a) * (1.0 + M - 2.0 * M * b) / (1.0 + M + (M - 1.0) * a);
    }

    const double ell = c.lambda_0_i + c.lambda_i_0;
    if (n == 1) {
        c.mu_0 = 0.0;
        c.mu_i = 0.0;
    } else {
        if (v == 0.0) {
            c.mu_0 = kInf;  // the divergent deterministic limit
        } else {
            const double lead = (nn * nn - (nn - 1.0) * (nn - 1.0) * v * v) / ((nn - 1.0) * v);
            c.mu_0 = std::max(0.0, lead * ell + nn * ell -
                                       2.0 * a * nn * (c.lambda_0_i + M * c.lambda_i_0) +
                                       (c.lambda_0_star + c.lambda_star_0));
        }
        c.mu_i = std::max(0.0, (1.0 - (nn - 1.0) * v / nn) * ell + sum_plain);
    }

    c.z = ell / (nn * nn);
    c.delta1 = (c.mu_0 - nn * ell + 2.0 * nn * a * (c.lambda_0_i + M * c.lambda_i_0) -
                c.lambda_0_star - c.lambda_star_0) /
               (nn * nn);
    c.delta2 = (c.mu_i - ell - sum_plain) / (nn * nn);
    return c;
}

BoundEval bound_h(double M, int n, double v, double sigma_over_R) {
    if (!(sigma_over_R >= 0.0))
        throw invalid_params(ParamError::NegativeSigma, "sigma/R must be nonnegative");
    const Schedule s = solve_schedule(M, n, v);
    const DualCertificate c = build_certificate(M, n, v, s);
    BoundEval out{};
    out.tau_v = c.tau;
    out.mu_v = (n == 1) ? 0.0 : c.mu_0 + n * c.mu_i;
    if (std::isinf(out.mu_v))
        out.h = (sigma_over_R > 0.0) ? kInf : out.tau_v;
    else
        out.h = out.tau_v + out.mu_v * sigma_over_R * sigma_over_R;
    return out;
}

DeltaMatrix assemble_delta(double M, int n, double v, double alpha, double beta,
                           const DualCertificate& c, int n_cap) {
    (void)make_v(M, n, v);  // v enters only through the multipliers
    if (n > n_cap)
        throw invalid_params(ParamError::DimensionCap,
                             "support count exceeds the dense-assembly cap");
    if (!std::isfinite(c.mu_0))
        throw invalid_params(ParamError::VOutOfRange,
                             "certificate has an infinite variance multiplier; "
                             "the slack matrix is only defined for v > 0 when n > 1");

    const double nn = n;
    const int D = 1 + n + n * n;
    const double ell = c.lambda_0_i + c.lambda_i_0;
    const double pair_sum = c.lambda_i_star + c.lambda_star_i;

    DeltaMatrix d;
    d.n = n;
    d.corner = c.tau - 1.0 +
               M * (c.lambda_0_star + c.lambda_star_0 + nn * c.lambda_i_star +
                    nn * c.lambda_star_i);
    d.first_row_mid =
        (alpha - c.lambda_0_star - M * c.lambda_star_0 - nn * M * alpha * pair_sum) / nn;
    d.first_row_tail =
        (beta - nn * c.lambda_i_star - nn * M * c.lambda_star_i) / (nn * nn);
    d.mid_diag = ((nn - 1.0) * c.mu_0 + nn * ell -
                  2.0 * nn * alpha * (c.lambda_0_i + M * c.lambda_i_0) + c.lambda_0_star +
                  c.lambda_star_0 +
                  nn * alpha * alpha * (-1.0 + nn * M * (ell + pair_sum))) /
                 (nn * nn);
    d.mid_off = (-c.mu_0 + nn * ell - 2.0 * nn * alpha * (c.lambda_0_i + M * c.lambda_i_0) +
                 c.lambda_0_star + c.lambda_star_0) /
                (nn * nn);
    d.tail_diag = (-beta * beta + (nn - 1.0) * c.mu_i + ell + pair_sum) / (nn * nn);
    d.tail_off = (-c.mu_i + ell + pair_sum) / (nn * nn);
    d.couple_match = (-alpha * beta - ell +
                      nn * alpha * (c.lambda_i_0 + c.lambda_i_star +
                                    M * (c.lambda_0_i + c.lambda_star_i))) /
                     (nn * nn);
    d.couple_other = -ell / (nn * nn);

    d.mat = Eigen::MatrixXd::Zero(D, D);
    d.mat(0, 0) = d.corner;
    for (int i = 1; i <= n; ++i) d.mat(0, i) = d.mat(i, 0) = d.first_row_mid;
    for (int i = n + 1; i < D; ++i) d.mat(0, i) = d.mat(i, 0) = d.first_row_tail;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) d.mat(i, j) = (i == j) ? d.mid_diag : d.mid_off;
    for (int i = n + 1; i < D; ++i) {
        const int bi = (i - n - 1) / n;
        for (int j = n + 1; j < D; ++j) {
            const int bj = (j - n - 1) / n;
            if (bi != bj) continue;
            d.mat(i, j) = (i == j) ? d.tail_diag : d.tail_off;
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = n + 1; j < D; ++j) {
            const int bj = (j - n - 1) / n;
            const double val = (bj == i - 1) ? d.couple_match : d.couple_other;
            d.mat(i, j) = d.mat(j, i) = val;
        }
    }
    return d;
}

double psd_check_numeric(const Eigen::MatrixXd& delta) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(delta, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw numerical_error("symmetric eigensolver failed to converge");
    return es.eigenvalues().minCoeff();
}

double psd_tolerance(const Eigen::MatrixXd& delta, double factor) {
    return factor * (1.0 + delta.norm());
}

PsdVerdict psd_check_analytic(double z, double delta1, double delta2, int n, double v) {
    PsdVerdict out;
    if (n == 1) {
        out.ok = true;  // the reduced block is identically zero
        return out;
    }
    const double nn = n;
    const double slack = 1e-12 * (1.0 + std::fabs(z));
    const double thr1 = (v == 0.0)
                            ? kInf
                            : (nn * nn * z - (nn - 1.0) * (nn - 1.0) * v * v * z) /
                                  ((nn - 1.0) * v);
    if (!(delta1 >= thr1 - slack)) {
        out.failed_condition = "delta1 below the start-block threshold";
        return out;
    }
    if (!(delta2 >= -(nn - 1.0) / nn * v * z - slack)) {
        out.failed_condition = "delta2 below the iterate-block threshold";
        return out;
    }
    const double last = (nn * delta1 + (nn - 1.0) * nn * v * z) * (nn - 1.0) * v * z -
                        z * z * nn * nn * nn;
    if (std::isfinite(delta1) && !(last >= -slack * (1.0 + std::fabs(z) * nn * nn * nn))) {
        out.failed_condition = "reduced 2x2 block determinant negative";
        return out;
    }
    out.ok = true;
    return out;
}

std::array<double, 9> equation_system_residuals(double M, int n, double v,
                                                const Schedule& sched,
                                                const DualCertificate& c) {
    const double a = sched.alpha;
    const double b = sched.beta;
    const double nn = n;
    const double l_is = c.lambda_i_star, l_si = c.lambda_star_i;
    const double l_0s = c.lambda_0_star, l_s0 = c.lambda_star_0;
    const double l_0i = c.lambda_0_i, l_i0 = c.lambda_i_0;
    const double ell = l_0i + l_i0;

    std::array<double, 9> r{};
    r[0] = (c.tau - 1.0) - (-M * (l_0s + l_s0 + nn * l_is + nn * l_si));
    r[1] = a - (l_0s + M * l_s0 + nn * M * a * (l_is + l_si));
    r[2] = b - (nn * l_is + nn * M * l_si);
    r[3] = a * a - ((nn - (nn - 1.0) * v) * ell + (l_0s + l_s0) +
                    nn * M * a * a * (ell + l_is + l_si) - 2.0 * nn * a * l_0i -
                    2.0 * nn * M * a * l_i0);
    r[4] = b * b - (nn * l_si + nn * l_is + (nn - (nn - 1.0) * v) * ell);
    r[5] = a * b - (-nn * ell + nn * M * a * (l_0i + l_si) + nn * a * (l_i0 + l_is));
    r[6] = (nn * l_0i + l_0s) - (nn * l_i0 + l_s0);
    r[7] = (l_i0 + l_is) - (l_0i + l_si);
    r[8] = (l_s0 + nn * l_si) - (l_0s + nn * l_is);
    return r;
}

}  // namespace silver
