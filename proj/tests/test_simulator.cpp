#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "silver/analysis.hpp"
#include "silver/simulator.hpp"

using namespace silver;

namespace {

double feasible_perf(double M, double R, double sigma) {
    return std::pow((M - 1.0) / (M + 1.0), 4) * R * R +
           8.0 * (1.0 + M * M) / std::pow(1.0 + M, 4) * sigma * sigma;
}

}  // namespace

TEST_CASE("worst-case oracle construction") {
    const OracleInstance even = build_worst_case(2.0, 2, 1.0, 0.01);
    CHECK(even.offsets.size() == 2);
    CHECK(even.offsets[0][0] == doctest::Approx(0.01));
    CHECK(even.offsets[1][0] == doctest::Approx(-0.01));

    const OracleInstance odd = build_worst_case(2.0, 3, 1.0, 0.5);
    CHECK(odd.offsets[0].norm() == 0.0);
    const double s = std::sqrt(3.0 / 2.0) * 0.5;
    CHECK(odd.offsets[1][0] == doctest::Approx(s));
    CHECK(odd.offsets[2][0] == doctest::Approx(-s));
    double msq = 0.0;
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(1);
    for (const auto& o : odd.offsets) {
        mean += o;
        msq += o.squaredNorm();
    }
    CHECK(mean.norm() == 0.0);
    CHECK(msq / 3.0 == doctest::Approx(0.25).epsilon(1e-12));

    const OracleInstance det = build_worst_case(2.0, 1, 1.0, 0.7);
    CHECK(det.offsets.size() == 1);
    CHECK(det.offsets[0].norm() == 0.0);  // single support is deterministic
}

TEST_CASE("enumeration reproduces the closed-form constant-stepsize value") {
    for (double M : {2.0, 10.0, 100.0}) {
        const double step = 2.0 / (M + 1.0);
        for (int n = 1; n <= 6; ++n) {
            for (double sR : {0.0, 0.01, 0.1}) {
                const OracleInstance inst = build_worst_case(M, n, 1.0, sR);
                const TwoStepResult r = exact_two_step(inst, step, step);
                // a single-support oracle is deterministic whatever the
                // requested variance cap, so compare at the achieved level
                const double ref = feasible_perf(M, 1.0, n == 1 ? 0.0 : sR);
                CHECK(r.exact_expectation == doctest::Approx(ref).epsilon(1e-12));
            }
        }
    }
    const TwoStepResult r =
        exact_two_step(build_worst_case(2.0, 2, 1.0, 0.01), 2.0 / 3.0, 2.0 / 3.0);
    CHECK(r.exact_expectation == doctest::Approx(0.012395061728395062).epsilon(1e-12));
}

TEST_CASE("per-path values average to the expectation") {
    const OracleInstance inst = build_worst_case(3.0, 4, 1.0, 0.2);
    const TwoStepResult r = exact_two_step(inst, 0.4, 0.3);
    REQUIRE(r.per_path.size() == 16);
    double s = 0.0;
    for (double p : r.per_path) s += p;
    CHECK(s / 16.0 == doctest::Approx(r.exact_expectation).epsilon(1e-14));
}

TEST_CASE("exact annihilation at alpha = 1/M in one dimension") {
    const OracleInstance inst = build_worst_case(2.0, 2, 1.0, 0.0, 1);
    const TwoStepResult r = exact_two_step(inst, 0.5, 0.77);
    CHECK(r.exact_expectation == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("deterministic contraction at the constant stepsize") {
    const double M = 5.0;
    const double step = 2.0 / (M + 1.0);
    const OracleInstance inst = build_worst_case(M, 1, 1.0, 0.0, 1);
    const TwoStepResult r = exact_two_step(inst, step, step);
    const double contraction = (1.0 - step * M) * (1.0 - step * M);
    CHECK(r.exact_expectation == doctest::Approx(contraction * contraction).epsilon(1e-14));
}

TEST_CASE("monte carlo agrees with enumeration") {
    const OracleInstance inst = build_worst_case(2.0, 2, 1.0, 0.3);
    const TwoStepResult exact = exact_two_step(inst, 0.6, 0.7);
    const SgdStats mc = run_sgd(inst, {0.6, 0.7}, 100000, 42);
    CHECK(std::fabs(mc.mean - exact.exact_expectation) <= 3.0 * mc.std_error);

    // single support: every trajectory is the deterministic one
    const OracleInstance det = build_worst_case(2.0, 1, 1.0, 0.0);
    const SgdStats one = run_sgd(det, {0.6, 0.7}, 1, 7);
    const TwoStepResult ref = exact_two_step(det, 0.6, 0.7);
    CHECK(one.mean == doctest::Approx(ref.exact_expectation).epsilon(1e-14));
}

TEST_CASE("empty stepsize list returns the start distance") {
    const OracleInstance inst = build_worst_case(2.0, 2, 1.5, 0.1);
    const SgdStats st = run_sgd(inst, {}, 10, 3);
    CHECK(st.mean == doctest::Approx(2.25).epsilon(1e-15));
    CHECK(st.std_error == 0.0);
}

TEST_CASE("seeded runs are bit-identical") {
    const OracleInstance inst = build_worst_case(2.0, 3, 1.0, 0.2);
    const SgdStats a = run_sgd(inst, {0.5, 0.6, 0.7}, 5000, 99);
    const SgdStats b = run_sgd(inst, {0.5, 0.6, 0.7}, 5000, 99);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    const SgdStats c = run_sgd(inst, {0.5, 0.6, 0.7}, 5000, 100);
    CHECK(a.mean != c.mean);
}

TEST_CASE("results do not depend on the worker count") {
    const OracleInstance inst = build_worst_case(3.0, 4, 1.0, 0.1);
    ::setenv("SILVERPEP_THREADS", "1", 1);
    const SgdStats serial = run_sgd(inst, {0.4, 0.5}, 20000, 5);
    ::setenv("SILVERPEP_THREADS", "7", 1);
    const SgdStats parallel = run_sgd(inst, {0.4, 0.5}, 20000, 5);
    ::unsetenv("SILVERPEP_THREADS");
    CHECK(serial.mean == parallel.mean);
    CHECK(serial.std_error == parallel.std_error);
}

TEST_CASE("counter rng reference values are stable") {
    // splitmix64 finalizer on seed + (k+1) * golden gamma
    CHECK(counter_rng(0, 0) == 0xE220A8397B1DCDAFull);
    CHECK(counter_rng(0, 1) == 0x6E789E6AA1B965F4ull);
    CHECK(counter_uniform(0, 0) == doctest::Approx(0.8833108082136426).epsilon(1e-15));
}

TEST_CASE("validate_bound across regimes") {
    const BoundReport a = validate_bound(2.0, 2, 0.5, 0.01, 1.0);
    CHECK(a.ok);
    CHECK(a.gap >= 0.0);

    // both sides in closed form at n = 1
    const BoundReport b = validate_bound(2.0, 1, 0.0, 0.0, 1.0);
    CHECK(b.ok);
    const double contr = (1.0 - b.schedule.alpha * 2.0) * (1.0 - b.schedule.beta * 2.0);
    CHECK(b.exact == doctest::Approx(contr * contr).epsilon(1e-12));
    CHECK(b.bound == doctest::Approx(0.011145618000168243).epsilon(1e-10));
    CHECK(b.gap == doctest::Approx(b.bound - contr * contr).epsilon(1e-10));

    // sigma = 0 with several supports degenerates to the deterministic path
    const BoundReport c = validate_bound(2.0, 2, 0.5, 0.0, 1.0);
    const double cc =
        (1.0 - c.schedule.alpha * 2.0) * (1.0 - c.schedule.beta * 2.0);
    CHECK(c.exact == doctest::Approx(cc * cc).epsilon(1e-12));
    CHECK(c.ok);
}

TEST_CASE("bound dominance on a stratified sample") {
    int count = 0;
    for (int k = 0; k < 200; ++k) {
        const double u1 = counter_uniform(1234, 4 * k);
        const double u2 = counter_uniform(1234, 4 * k + 1);
        const double u3 = counter_uniform(1234, 4 * k + 2);
        const double u4 = counter_uniform(1234, 4 * k + 3);
        const double M = std::pow(10.0, 2.5 * u1) + 1e-2;
        const int n = 1 + int(u2 * 6.0);
        const double v = (n == 1) ? 0.0 : v_domain(M, n) * std::max(1e-4, u3);
        const double sR = 0.2 * u4;
        const BoundReport rep = validate_bound(M, n, v, sR, 1.0);
        CHECK(rep.ok);
        ++count;
    }
    CHECK(count == 200);
}

TEST_CASE("path-count guard") {
    OracleInstance inst = build_worst_case(2.0, 2, 1.0, 0.0);
    inst.offsets.assign(10001, Eigen::VectorXd::Zero(1));
    CHECK_THROWS_AS(exact_two_step(inst, 0.1, 0.1), invalid_params);
}
