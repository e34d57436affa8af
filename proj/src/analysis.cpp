#include "silver/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <thread>

namespace silver {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// tau and aggregate mu at one grid point
std::pair<double, double> tau_mu(double M, int n, double v) {
    const BoundEval be = bound_h(M, n, v, 0.0);
    return {be.tau_v, be.mu_v};
}

double eval_h(double tau, double mu, double sR) {
    if (std::isinf(mu)) return sR > 0.0 ? kInf : tau;
    return tau + mu * sR * sR;
}

constexpr double kGolden = 0.6180339887498949;

// Golden-section minimization of f over [lo, hi].
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  int iters = 90) {
    double x1 = hi - kGolden * (hi - lo);
    double x2 = lo + kGolden * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int k = 0; k < iters && hi - lo > 0.0; ++k) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kGolden * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kGolden * (hi - lo);
            f2 = f(x2);
        }
    }
    return 0.5 * (lo + hi);
}

void parallel_for(size_t count, const std::function<void(size_t)>& body) {
    const int workers = std::min<size_t>(sweep_workers(), count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < count; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

int sweep_workers() {
    if (const char* env = std::getenv("SILVERPEP_THREADS")) {
        const int k = std::atoi(env);
        if (k > 0) return k;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? int(hc) : 1;
}

double h1(double M, double sigma_over_R) {
    const double tb = std::pow((M - 1.0) / (M + 1.0), 4);
    const double mb = 8.0 * (1.0 + M * M) / std::pow(1.0 + M, 4);
    return tb + mb * sigma_over_R * sigma_over_R;
}

double ratio_C(double M) {
    const double s = std::sqrt(2.0 * M * M - 2.0 * M + 1.0);
    const double num = std::pow(M + 1.0, 4) * (s - M) * (s - M);
    const double den = std::pow(M - 1.0, 4) * (2.0 + s - M) * (2.0 + s - M);
    return 0.5 + 0.5 * num / den;
}

std::vector<double> v_grid(double M, int n, int points, bool include_zero) {
    const double vd = v_domain(M, n);
    std::vector<double> g;
    if (include_zero) g.push_back(0.0);
    if (n == 1 || points < 1) return g;  // v is irrelevant in the deterministic limit

    const double lo = 1e-8 * vd;
    const double split = 0.1 * vd;
    const int n_log = std::max(1, (3 * points) / 4);
    const int n_lin = std::max(1, points - n_log);
    const double lr = std::log(split / lo);
    for (int i = 0; i < n_log; ++i)
        g.push_back(lo * std::exp(lr * double(i) / double(n_log - 1 > 0 ? n_log - 1 : 1)));
    for (int i = 1; i <= n_lin; ++i)
        g.push_back(split + (vd - split) * double(i) / double(n_lin));
    g.back() = vd;  // pin the endpoint exactly
    return g;
}

TheoryConstants threshold_U(double M, int n, int points) {
    TheoryConstants tc;
    tc.C_ratio = ratio_C(M);
    tc.tau_bar = std::pow((M - 1.0) / (M + 1.0), 4);
    tc.mu_bar = 8.0 * (1.0 + M * M) / std::pow(1.0 + M, 4);
    if (n == 1) {
        tc.U = kInf;
        tc.deterministic_limit = true;
        tc.v_max = 0.0;
        tc.note = "deterministic-limit";
        return tc;
    }

    const double Cmb = tc.C_ratio * tc.mu_bar;
    const double Ctb = tc.C_ratio * tc.tau_bar;
    const std::vector<double> grid = v_grid(M, n, points);
    std::vector<double> taus(grid.size()), mus(grid.size());
    parallel_for(grid.size(), [&](size_t i) {
        std::tie(taus[i], mus[i]) = tau_mu(M, n, grid[i]);
    });

    // march until the variance coefficient first drops to C*mu_bar, then
    // bisect the crossing
    tc.v_max = v_domain(M, n);
    size_t limit = grid.size();
    for (size_t i = 0; i < grid.size(); ++i) {
        if (Cmb - mus[i] >= 0.0) {
            double lo = (i == 0) ? 1e-12 * tc.v_max : grid[i - 1];
            double hi = grid[i];
            while (hi - lo > 1e-10 * std::max(1.0, lo)) {
                const double mid = 0.5 * (lo + hi);
                if (Cmb - tau_mu(M, n, mid).second >= 0.0)
                    hi = mid;
                else
                    lo = mid;
            }
            tc.v_max = lo;
            limit = i;
            break;
        }
    }

    const auto ratio = [&](double v) {
        const auto [t, mu] = tau_mu(M, n, v);
        const double den = Cmb - mu;
        if (!(den < 0.0)) return -kInf;
        return (t - Ctb) / den;
    };

    double best = -kInf;
    size_t best_i = 0;
    for (size_t i = 0; i < limit; ++i) {
        const double r = (taus[i] - Ctb) / (Cmb - mus[i]);
        if (Cmb - mus[i] < 0.0 && r > best) {
            best = r;
            best_i = i;
        }
    }
    if (!(best > 0.0)) {
        tc.U = 0.0;
        tc.note = "no grid point produced a positive threshold ratio";
        tc.v_argmax = 0.0;
        return tc;
    }
    const double lo = best_i > 0 ? grid[best_i - 1] : 0.5 * grid[0];
    const double hi = best_i + 1 < limit ? grid[best_i + 1] : tc.v_max;
    const double v_star =
        golden_min([&](double v) { return -ratio(v); }, lo, std::min(hi, tc.v_max));
    const double refined = ratio(v_star);
    if (refined > best) {
        tc.U = refined;
        tc.v_argmax = v_star;
    } else {
        tc.U = best;
        tc.v_argmax = grid[best_i];
    }
    return tc;
}

std::pair<double, double> best_v(double M, int n, double sigma_over_R, int points) {
    if (n == 1) {
        const Schedule s = solve_schedule(M, 1, 0.0);
        const DualCertificate c = build_certificate(M, 1, 0.0, s);
        return {0.0, c.tau};
    }
    const std::vector<double> grid = v_grid(M, n, points);
    std::vector<double> hs(grid.size());
    parallel_for(grid.size(), [&](size_t i) {
        const auto [t, mu] = tau_mu(M, n, grid[i]);
        hs[i] = eval_h(t, mu, sigma_over_R);
    });
    size_t best_i = 0;
    for (size_t i = 1; i < grid.size(); ++i)
        if (hs[i] < hs[best_i]) best_i = i;
    const double lo = best_i > 0 ? grid[best_i - 1] : 0.5 * grid[0];
    const double hi = best_i + 1 < grid.size() ? grid[best_i + 1] : grid.back();
    const auto f = [&](double v) {
        const auto [t, mu] = tau_mu(M, n, v);
        return eval_h(t, mu, sigma_over_R);
    };
    const double v_star = golden_min(f, lo, hi);
    const double h_star = f(v_star);
    if (h_star < hs[best_i]) return {v_star, h_star};
    return {grid[best_i], hs[best_i]};
}

ImprovementReport improvement_certificate(double M, int n, double sigma_over_R) {
    ImprovementReport rep;
    rep.sigma_over_R = sigma_over_R;
    rep.h1_value = h1(M, sigma_over_R);
    std::tie(rep.best_v, rep.h_at_best_v) = best_v(M, n, sigma_over_R);
    const double C = ratio_C(M);
    rep.ratio_achieved = rep.h_at_best_v / rep.h1_value;
    rep.improves = rep.h_at_best_v <= C * rep.h1_value * (1.0 + 1e-12);
    return rep;
}

std::vector<ScheduleRow> sweep_schedule(double M, int n, const std::vector<double>& grid) {
    std::vector<ScheduleRow> rows(grid.size());
    parallel_for(grid.size(), [&](size_t i) {
        const Schedule s = solve_schedule(M, n, grid[i]);
        rows[i] = ScheduleRow{grid[i], s.alpha, s.beta};
    });
    return rows;
}

std::vector<BoundRow> sweep_bound(double M, int n, const std::vector<double>& grid,
                                  double sigma_over_R) {
    std::vector<BoundRow> rows(grid.size());
    parallel_for(grid.size(), [&](size_t i) {
        const BoundEval be = bound_h(M, n, grid[i], sigma_over_R);
        rows[i] = BoundRow{grid[i], be.tau_v, be.mu_v, be.h};
    });
    return rows;
}

}  // namespace silver
