#include "silver/pep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace silver {

std::string IndexSet::label(int ordinal) const {
    if (ordinal == start()) return "0";
    if (ordinal == star()) return "*";
    return "1(" + std::to_string(ordinal) + ")";
}

double interp_Q(const Eigen::VectorXd& xi, const Eigen::VectorXd& xj,
                const Eigen::VectorXd& gi, const Eigen::VectorXd& gj, double fi,
                double fj, double m, double M) {
    return 2.0 * (M - m) * (fi - fj) + 2.0 * (M * gj - m * gi).dot(xj - xi) -
           (gi - gj).squaredNorm() - M * m * (xi - xj).squaredNorm();
}

PepInstance build_instance(double M, int n, double alpha, double beta, double sigma,
                           double R, int n_cap) {
    if (!(M > 1.0))
        throw invalid_params(ParamError::MNotLessThanL, "build_instance requires M > 1");
    if (n < 1)
        throw invalid_params(ParamError::BadSupportCount, "build_instance requires n >= 1");
    if (n > n_cap)
        throw invalid_params(
            ParamError::DimensionCap,
            "support count " + std::to_string(n) + " exceeds the cap " +
                std::to_string(n_cap) + "; the Gram dimension 1+n+n^2 = " +
                std::to_string(1 + n + n * n) + " would make the dense solve impractical");
    if (!(sigma >= 0.0) || !(R > 0.0))
        throw invalid_params(ParamError::NegativeSigma, "need sigma >= 0 and R > 0");

    PepInstance inst;
    inst.M = M;
    inst.m = 1.0;
    inst.n = n;
    inst.alpha = alpha;
    inst.beta = beta;
    inst.sigma = sigma;
    inst.R = R;
    inst.D = 1 + n + n * n;
    inst.nodes.n = n;
    inst.f_coef = 2.0 * (M - inst.m);

    const int D = inst.D;
    using Vec = Eigen::VectorXd;
    using Mat = Eigen::MatrixXd;

    // symbolic basis: start point, first-step gradients, second-step gradients
    // laid out in contiguous blocks of n per first iterate
    const Vec x0 = Vec::Unit(D, 0);
    std::vector<Vec> g0(n);
    for (int i = 0; i < n; ++i) g0[i] = Vec::Unit(D, 1 + i);
    std::vector<std::vector<Vec>> g1(n, std::vector<Vec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g1[i][j] = Vec::Unit(D, 1 + n + n * i + j);

    Vec df0 = Vec::Zero(D);
    for (int i = 0; i < n; ++i) df0 += g0[i];
    df0 /= n;
    std::vector<Vec> df1(n, Vec::Zero(D));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) df1[i] += g1[i][j];
        df1[i] /= n;
    }
    std::vector<Vec> x1(n);
    for (int i = 0; i < n; ++i) x1[i] = x0 - alpha * g0[i];

    inst.A_R = x0 * x0.transpose();

    inst.A_var.reserve(n + 1);
    Mat A0 = Mat::Zero(D, D);
    for (int i = 0; i < n; ++i) {
        const Vec d = g0[i] - df0;
        A0 += d * d.transpose();
    }
    inst.A_var.push_back(A0 / n);
    for (int i = 0; i < n; ++i) {
        Mat Ai = Mat::Zero(D, D);
        for (int j = 0; j < n; ++j) {
            const Vec d = g1[i][j] - df1[i];
            Ai += d * d.transpose();
        }
        inst.A_var.push_back(Ai / n);
    }

    // node ordinal -> (point, gradient); the optimum carries zeros
    std::vector<Vec> xs(n + 2), gs(n + 2);
    xs[0] = x0;
    gs[0] = df0;
    for (int i = 0; i < n; ++i) {
        xs[1 + i] = x1[i];
        gs[1 + i] = df1[i];
    }
    xs[n + 1] = Vec::Zero(D);
    gs[n + 1] = Vec::Zero(D);

    Eigen::Matrix4d K;
    const double m1 = inst.m;
    K << -M * m1, M * m1, m1, -M,
         M * m1, -M * m1, -m1, M,
         m1, -m1, -1.0, 1.0,
         -M, M, 1.0, -1.0;

    for (int i = 0; i < n + 2; ++i) {
        for (int j = 0; j < n + 2; ++j) {
            if (i == j) continue;
            Mat V(D, 4);
            V.col(0) = xs[i];
            V.col(1) = xs[j];
            V.col(2) = gs[i];
            V.col(3) = gs[j];
            inst.pair_order.emplace_back(i, j);
            inst.B.push_back(V * K * V.transpose());
        }
    }

    Mat C = Mat::Zero(D, D);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Vec w = x0 - alpha * g0[i] - beta * g1[i][j];
            C += w * w.transpose();
        }
    }
    inst.C_obj = C / (double(n) * double(n));
    return inst;
}

namespace {

void write_matrix(std::ostream& os, const std::string& name, const Eigen::MatrixXd& A) {
    os << "MATRIX " << name << "\n";
    char buf[64];
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = i; j < A.cols(); ++j) {
            if (A(i, j) == 0.0) continue;
            std::snprintf(buf, sizeof(buf), "%d %d %.17g", i + 1, j + 1, A(i, j));
            os << buf << "\n";
        }
    }
}

}  // namespace

void export_instance(const PepInstance& inst, std::ostream& os) {
    char buf[256];
    os << "D " << inst.D << "\n";
    std::snprintf(buf, sizeof(buf), "PARAMS M %.17g m %.17g n %d alpha %.17g beta %.17g sigma %.17g R %.17g",
                  inst.M, inst.m, inst.n, inst.alpha, inst.beta, inst.sigma, inst.R);
    os << buf << "\n";
    std::snprintf(buf, sizeof(buf), "FCOEF %.17g", inst.f_coef);
    os << buf << "\n";
    write_matrix(os, "A_R", inst.A_R);
    for (size_t i = 0; i < inst.A_var.size(); ++i)
        write_matrix(os, "A_var_" + std::to_string(i), inst.A_var[i]);
    for (size_t k = 0; k < inst.B.size(); ++k) {
        const auto& [i, j] = inst.pair_order[k];
        write_matrix(os, "B_" + inst.nodes.label(i) + "_" + inst.nodes.label(j),
                     inst.B[k]);
    }
    write_matrix(os, "C", inst.C_obj);
}

}  // namespace silver
