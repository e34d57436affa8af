#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

#include "silver/analysis.hpp"
#include "silver/pep.hpp"
#include "silver/sdp.hpp"

using namespace silver;

TEST_CASE("interp_Q hand examples") {
    Eigen::VectorXd xi(1), xj(1), gi(1), gj(1);
    xi << 0.0;
    xj << 1.0;
    gi << 0.0;
    gj << 1.0;
    // data from f(x) = x^2/2, which sits on the strong-convexity boundary of
    // the (m, M) = (1, 2) class: both orderings are exactly tight
    CHECK(interp_Q(xi, xj, gi, gj, 0.0, 0.5, 1.0, 2.0) == doctest::Approx(0.0).scale(1.0));
    CHECK(interp_Q(xj, xi, gj, gi, 0.5, 0.0, 1.0, 2.0) == doctest::Approx(0.0).scale(1.0));

    // interior member f(x) = 0.75 x^2: strictly positive both ways
    Eigen::VectorXd gj2(1);
    gj2 << 1.5;
    CHECK(interp_Q(xi, xj, gi, gj2, 0.0, 0.75, 1.0, 2.0) ==
          doctest::Approx(0.25).epsilon(1e-14));
    CHECK(interp_Q(xj, xi, gj2, gi, 0.75, 0.0, 1.0, 2.0) ==
          doctest::Approx(0.25).epsilon(1e-14));

    // dropping the function value below the interpolable range flips exactly
    // one ordering negative: the model must impose both
    CHECK(interp_Q(xi, xj, gi, gj, 0.0, 0.3, 1.0, 2.0) ==
          doctest::Approx(0.4).epsilon(1e-14));
    CHECK(interp_Q(xj, xi, gj, gi, 0.3, 0.0, 1.0, 2.0) ==
          doctest::Approx(-0.4).epsilon(1e-14));

    CHECK(interp_Q(xi, xi, gi, gi, 0.3, 0.3, 1.0, 2.0) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("instance structure") {
    const PepInstance one = build_instance(2.0, 1, 2.0 / 3.0, 2.0 / 3.0, 0.0, 1.0);
    CHECK(one.D == 3);
    CHECK(one.A_var[0].cwiseAbs().maxCoeff() == 0.0);  // single support, zero deviation
    CHECK(one.A_var[1].cwiseAbs().maxCoeff() == 0.0);

    const PepInstance two = build_instance(2.0, 2, 0.5, 0.5, 0.1, 1.0);
    CHECK(two.D == 7);
    CHECK(two.A_R.trace() == doctest::Approx(1.0));
    CHECK(two.pair_order.size() == 4 * 3);
    // variance matrices are PSD averages of rank-1 terms
    for (const auto& Av : two.A_var) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Av);
        CHECK(es.eigenvalues().minCoeff() >= -1e-14);
    }
    // objective matrix: average of 4 rank-1 terms, PSD, trace > 0
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(two.C_obj);
    CHECK(es.eigenvalues().minCoeff() >= -1e-14);
    CHECK((es.eigenvalues().array() > 1e-12).count() <= 4);
}

TEST_CASE("instance cap and validation") {
    CHECK_THROWS_AS(build_instance(2.0, 100, 0.5, 0.5, 0.1, 1.0), invalid_params);
    CHECK_NOTHROW(build_instance(2.0, 9, 0.5, 0.5, 0.1, 1.0, /*n_cap=*/9));
    CHECK_THROWS_AS(build_instance(0.9, 2, 0.5, 0.5, 0.1, 1.0), invalid_params);
}

TEST_CASE("export format") {
    const PepInstance one = build_instance(2.0, 1, 0.5, 0.25, 0.0, 1.0);
    std::ostringstream os;
    export_instance(one, os);
    const std::string text = os.str();
    CHECK(text.rfind("D 3\n", 0) == 0);
    CHECK(text.find("MATRIX A_R\n1 1 1\n") != std::string::npos);
    CHECK(text.find("MATRIX B_0_1(1)") != std::string::npos);
    CHECK(text.find("MATRIX B_*_0") != std::string::npos);
    CHECK(text.find("MATRIX C") != std::string::npos);
    CHECK(text.find("FCOEF 2\n") != std::string::npos);
}

TEST_CASE("deterministic two-step worst case" * doctest::timeout(120)) {
    // reference: worst case of two plain gradient steps at stepsize 2/(M+1)
    const SdpSolution sol = baseline_h_constant(2.0, 1, 0.0);
    CHECK(sol.converged);
    CHECK(sol.objective == doctest::Approx(std::pow(1.0 / 3.0, 4)).epsilon(2e-4));
    CHECK(sol.max_violation <= 1e-5);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sol.H);
    CHECK(es.eigenvalues().minCoeff() >= -1e-9);
}

TEST_CASE("noisy baseline brackets the closed-form floor" * doctest::timeout(240)) {
    // reference value from an independent interior-point solve: 0.017283949
    const SdpSolution sol = baseline_h_constant(2.0, 2, 0.1);
    CHECK(sol.converged);
    CHECK(sol.objective >= h1(2.0, 0.1) - 1e-5);
    CHECK(sol.objective <= h1(2.0, 0.1) + 1e-4);

    // sigma = 0 collapses the supports onto the deterministic worst case
    const SdpSolution det = baseline_h_constant(2.0, 2, 0.0);
    CHECK(det.objective == doctest::Approx(1.0 / 81.0).epsilon(2e-4));
}

TEST_CASE("silver-schedule instance is dominated by the certified bound" *
          doctest::timeout(240)) {
    const auto [vb, hb] = best_v(2.0, 2, 0.01);
    const Schedule s = solve_schedule(2.0, 2, vb);
    const PepInstance inst = build_instance(2.0, 2, s.alpha, s.beta, 0.01, 1.0);
    const SdpSolution sol = solve_primal(inst);
    CHECK(sol.converged);
    CHECK(sol.objective <= hb + 1e-5);
    // and it is at least the closed-form two-step value on the hard instance
    CHECK(sol.objective >= 0.0);
}

TEST_CASE("scale invariance of the model" * doctest::timeout(240)) {
    SdpOptions tight;
    tight.tol = 1e-8;
    const PepInstance small = build_instance(2.0, 2, 2.0 / 3.0, 2.0 / 3.0, 0.05, 1.0);
    const PepInstance big = build_instance(2.0, 2, 2.0 / 3.0, 2.0 / 3.0, 0.15, 3.0);
    const double o1 = solve_primal(small, tight).objective;
    const double o2 = solve_primal(big, tight).objective;
    CHECK(9.0 * o1 == doctest::Approx(o2).epsilon(1e-6));
}

TEST_CASE("baseline is nondecreasing in the noise level" * doctest::timeout(240)) {
    double prev = -1.0;
    for (double s : {0.0, 0.05, 0.1, 0.2}) {
        const double obj = baseline_h_constant(2.0, 2, s).objective;
        CHECK(obj >= prev - 1e-6);
        prev = obj;
    }
}

TEST_CASE("solver budget flag") {
    SdpOptions tiny;
    tiny.max_iter = 10;
    const SdpSolution sol = baseline_h_constant(2.0, 2, 0.1, tiny);
    CHECK_FALSE(sol.converged);
    CHECK(sol.iterations == 10);
}
