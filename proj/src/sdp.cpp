#include "silver/sdp.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>

namespace silver {

namespace {

// Symmetric vectorization with sqrt(2)-scaled off-diagonals, so that
// svec(A) . svec(B) = Tr(AB).
Eigen::VectorXd svec(const Eigen::MatrixXd& A) {
    const int D = int(A.rows());
    Eigen::VectorXd out(D * (D + 1) / 2);
    const double s2 = std::sqrt(2.0);
    int k = 0;
    for (int i = 0; i < D; ++i) {
        out[k++] = A(i, i);
        for (int j = i + 1; j < D; ++j) out[k++] = s2 * A(i, j);
    }
    return out;
}

Eigen::MatrixXd smat(const Eigen::Ref<const Eigen::VectorXd>& x, int D) {
    Eigen::MatrixXd A(D, D);
    const double inv_s2 = 1.0 / std::sqrt(2.0);
    int k = 0;
    for (int i = 0; i < D; ++i) {
        A(i, i) = x[k++];
        for (int j = i + 1; j < D; ++j) {
            A(i, j) = A(j, i) = x[k++] * inv_s2;
        }
    }
    return A;
}

}  // namespace

SdpSolution solve_primal(const PepInstance& inst, const SdpOptions& opts) {
    const int D = inst.D;
    const int sd = D * (D + 1) / 2;
    const int nf = inst.n + 2;
    const int n_pairs = int(inst.pair_order.size());
    const int mcon = n_pairs + 1 + int(inst.A_var.size());
    const int N = sd + nf + mcon;

    // One row per constraint, each carrying its own slack column, so the rows
    // are linearly independent by construction.
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(mcon, N);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(mcon);
    int row = 0;
    for (int k = 0; k < n_pairs; ++k, ++row) {
        A.row(row).head(sd) = svec(inst.B[k]).transpose();
        const auto& [i, j] = inst.pair_order[k];
        A(row, sd + i) += inst.f_coef;
        A(row, sd + j) -= inst.f_coef;
        A(row, sd + nf + row) = -1.0;  // interp quantity - slack = 0, slack >= 0
    }
    A.row(row).head(sd) = svec(inst.A_R).transpose();
    A(row, sd + nf + row) = 1.0;
    b[row] = inst.R * inst.R;
    ++row;
    for (const auto& Av : inst.A_var) {
        A.row(row).head(sd) = svec(Av).transpose();
        A(row, sd + nf + row) = 1.0;
        b[row] = inst.sigma * inst.sigma;
        ++row;
    }

    for (int r = 0; r < mcon; ++r) {
        const double nrm = A.row(r).norm();
        A.row(r) /= nrm;
        b[r] /= nrm;
    }

    Eigen::VectorXd c = Eigen::VectorXd::Zero(N);
    c.head(sd) = -svec(inst.C_obj);

    const Eigen::LLT<Eigen::MatrixXd> llt((A * A.transpose()).eval());
    if (llt.info() != Eigen::Success)
        throw numerical_error("Gram factorization of the constraint system failed");
    const auto proj_affine = [&](Eigen::VectorXd v) {
        v.noalias() -= A.transpose() * llt.solve(A * v - b);
        return v;
    };

    double rho = opts.rho;
    const double gamma = opts.over_relax;
    Eigen::VectorXd z = Eigen::VectorXd::Zero(N);
    Eigen::VectorXd u = Eigen::VectorXd::Zero(N);
    Eigen::VectorXd x(N), xh(N), z_prev(N);

    SdpSolution sol;
    double obj_prev = std::numeric_limits<double>::infinity();
    const int check_every = 25;
    const int adapt_until = std::min(20000, opts.max_iter / 2);

    int it = 1;
    for (; it <= opts.max_iter; ++it) {
        x = proj_affine(z - u - c / rho);
        xh = gamma * x + (1.0 - gamma) * z;
        z_prev = z;

        // cone projection: PSD block by eigen-decomposition, slacks clipped,
        // f block free
        Eigen::VectorXd w = xh + u;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(smat(w.head(sd), D));
        if (es.info() != Eigen::Success)
            throw numerical_error("PSD projection eigensolver failed");
        const Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
        z.head(sd) = svec(es.eigenvectors() * lam.asDiagonal() *
                          es.eigenvectors().transpose());
        z.segment(sd, nf) = w.segment(sd, nf);
        z.tail(mcon) = w.tail(mcon).cwiseMax(0.0);

        u += xh - z;

        if (it % check_every == 0) {
            const double rpri = (x - z).norm();
            const double rdua = rho * (z - z_prev).norm();
            const double sc_p = std::max({1.0, x.norm(), z.norm()});
            const double sc_d = std::max(1.0, rho * u.norm());
            const double obj = -c.dot(z);
            const double dobj = std::fabs(obj - obj_prev) / std::max(1.0, std::fabs(obj));
            obj_prev = obj;
            if (rpri / sc_p < opts.tol && rdua / sc_d < opts.tol && dobj < opts.tol) {
                sol.converged = true;
                break;
            }
            if (it < adapt_until) {
                if (rpri / sc_p > 10.0 * rdua / sc_d) {
                    rho *= 2.0;
                    u /= 2.0;
                } else if (rdua / sc_d > 10.0 * rpri / sc_p) {
                    rho /= 2.0;
                    u *= 2.0;
                }
            }
        }
    }
    sol.iterations = std::min(it, opts.max_iter);

    sol.H = smat(z.head(sd), D);
    sol.f_values = z.segment(sd, nf);
    sol.objective = (inst.C_obj * sol.H).trace();

    double viol = 0.0;
    for (int k = 0; k < n_pairs; ++k) {
        const auto& [i, j] = inst.pair_order[k];
        const double q = inst.f_coef * (sol.f_values[i] - sol.f_values[j]) +
                         (inst.B[k] * sol.H).trace();
        viol = std::max(viol, -q);
    }
    viol = std::max(viol, (inst.A_R * sol.H).trace() - inst.R * inst.R);
    for (const auto& Av : inst.A_var)
        viol = std::max(viol, (Av * sol.H).trace() - inst.sigma * inst.sigma);
    sol.max_violation = std::max(0.0, viol);
    return sol;
}

SdpSolution baseline_h_constant(double M, int n, double sigma_over_R,
                                const SdpOptions& opts, int n_cap) {
    const double step = 2.0 / (M + 1.0);
    const PepInstance inst = build_instance(M, n, step, step, sigma_over_R, 1.0, n_cap);
    return solve_primal(inst, opts);
}

}  // namespace silver
