#include "silver/simulator.hpp"

#include <cmath>
#include <thread>

#include "silver/analysis.hpp"
#include "silver/certificate.hpp"

namespace silver {

namespace {

// Fixed-structure pairwise reduction; the summation tree depends only on the
// element count, so results are independent of the evaluation schedule.
double pairwise_sum(const double* data, size_t count) {
    if (count <= 8) {
        double s = 0.0;
        for (size_t i = 0; i < count; ++i) s += data[i];
        return s;
    }
    const size_t half = count / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, count - half);
}

constexpr size_t kPathStoreLimit = 1000;  // keep per-path values up to n = 1000

}  // namespace

uint64_t counter_rng(uint64_t seed, uint64_t counter) {
    uint64_t x = seed + (counter + 1) * 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double counter_uniform(uint64_t seed, uint64_t counter) {
    return double(counter_rng(seed, counter) >> 11) * 0x1.0p-53;
}

OracleInstance build_worst_case(double M, int n, double R, double sigma, int d) {
    if (d < 1)
        throw invalid_params(ParamError::BadSupportCount, "dimension d must be >= 1");
    check_problem(ProblemParams{1.0, M, n, sigma, R});

    OracleInstance inst;
    inst.d = d;
    inst.sigma = sigma;
    inst.R = R;
    inst.quad_diag = Eigen::VectorXd::Ones(d);
    inst.quad_diag[0] = M;
    inst.x0 = Eigen::VectorXd::Zero(d);
    inst.x0[0] = R;

    // interleave +/- pairs so the running sum cancels exactly in floating point
    Eigen::VectorXd up = Eigen::VectorXd::Zero(d);
    inst.offsets.assign(n, Eigen::VectorXd::Zero(d));
    if (n % 2 == 0) {
        up[0] = sigma;
        for (int i = 0; i < n; i += 2) {
            inst.offsets[i] = up;
            inst.offsets[i + 1] = -up;
        }
    } else if (n > 1) {
        up[0] = std::sqrt(double(n) / double(n - 1)) * sigma;
        for (int i = 1; i < n; i += 2) {
            inst.offsets[i] = up;
            inst.offsets[i + 1] = -up;
        }
    }

    // re-verify the oracle contract: zero mean exactly, mean square <= sigma^2
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(d);
    double msq = 0.0;
    for (const auto& o : inst.offsets) {
        mean += o;
        msq += o.squaredNorm();
    }
    msq /= n;
    if (mean.norm() != 0.0 || msq > sigma * sigma + 1e-12)
        throw numerical_error("worst-case oracle construction violated its invariants");
    return inst;
}

TwoStepResult exact_two_step(const OracleInstance& inst, double alpha, double beta) {
    const size_t n = inst.offsets.size();
    if (n > 10000)
        throw invalid_params(ParamError::DimensionCap,
                             "path enumeration is capped at n = 10^4 (n^2 paths)");
    TwoStepResult res;
    const bool keep = n <= kPathStoreLimit;
    std::vector<double> paths(n * n);
    for (size_t i = 0; i < n; ++i) {
        const Eigen::VectorXd x1 =
            inst.x0 - alpha * (inst.gradient(inst.x0) + inst.offsets[i]);
        const Eigen::VectorXd g1 = inst.gradient(x1);
        for (size_t j = 0; j < n; ++j) {
            const Eigen::VectorXd x2 = x1 - beta * (g1 + inst.offsets[j]);
            paths[i * n + j] = x2.squaredNorm();
        }
    }
    res.exact_expectation = pairwise_sum(paths.data(), paths.size()) / double(n * n);
    if (keep) res.per_path = std::move(paths);
    return res;
}

SgdStats run_sgd(const OracleInstance& inst, const std::vector<double>& stepsizes,
                 long trials, uint64_t seed) {
    if (trials < 1)
        throw invalid_params(ParamError::BadSupportCount, "trials must be >= 1");
    const size_t n = inst.offsets.size();
    const size_t steps = stepsizes.size();
    std::vector<double> finals(static_cast<size_t>(trials));

    const auto run_range = [&](long t0, long t1) {
        Eigen::VectorXd x(inst.d);
        for (long t = t0; t < t1; ++t) {
            x = inst.x0;
            for (size_t s = 0; s < steps; ++s) {
                const double u = counter_uniform(seed, uint64_t(t) * steps + s);
                size_t idx = size_t(u * double(n));
                if (idx >= n) idx = n - 1;
                x -= stepsizes[s] * (inst.gradient(x) + inst.offsets[idx]);
            }
            finals[size_t(t)] = x.squaredNorm();
        }
    };

    const int workers = std::max(1, std::min<int>(sweep_workers(), int(trials)));
    if (workers == 1) {
        run_range(0, trials);
    } else {
        std::vector<std::thread> pool;
        const long chunk = (trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const long t0 = w * chunk;
            const long t1 = std::min<long>(trials, t0 + chunk);
            if (t0 >= t1) break;
            pool.emplace_back(run_range, t0, t1);
        }
        for (auto& th : pool) th.join();
    }

    SgdStats st;
    st.trials = trials;
    st.mean = pairwise_sum(finals.data(), finals.size()) / double(trials);
    if (trials > 1) {
        std::vector<double> sq(finals.size());
        for (size_t i = 0; i < finals.size(); ++i) {
            const double d = finals[i] - st.mean;
            sq[i] = d * d;
        }
        const double var = pairwise_sum(sq.data(), sq.size()) / double(trials - 1);
        st.std_error = std::sqrt(var / double(trials));
    }
    return st;
}

BoundReport validate_bound(double M, int n, double v, double sigma, double R) {
    BoundReport rep;
    rep.schedule = solve_schedule(M, n, v);
    const BoundEval be = bound_h(M, n, v, sigma / R);
    rep.bound = R * R * be.h;
    const OracleInstance inst = build_worst_case(M, n, R, sigma);
    rep.exact = exact_two_step(inst, rep.schedule.alpha, rep.schedule.beta)
                    .exact_expectation;
    rep.gap = rep.bound - rep.exact;
    const double scale = std::max(1.0, std::isfinite(rep.bound) ? rep.bound : 1.0);
    rep.ok = rep.exact <= rep.bound + 1e-9 * scale;
    if (!rep.ok)
        throw validation_error("bound violation: enumerated expectation " +
                               std::to_string(rep.exact) + " exceeds the certified bound " +
                               std::to_string(rep.bound));
    return rep;
}

}  // namespace silver
