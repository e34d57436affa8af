#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "silver/params.hpp"

using namespace silver;

TEST_CASE("normalize keeps already-normalized input") {
    const auto np = normalize({1.0, 2.0, 2, 0.01, 1.0});
    CHECK(np.kappa == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(np.scale == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(np.n == 2);

    // idempotency: renormalizing the normalized problem changes nothing
    const auto np2 = normalize({1.0, np.kappa, np.n, np.sigma_over_R, 1.0});
    CHECK(np2.kappa == doctest::Approx(np.kappa).epsilon(1e-15));
    CHECK(np2.scale == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(np2.sigma_over_R == doctest::Approx(np.sigma_over_R).epsilon(1e-15));
}

TEST_CASE("normalize rescales uniformly") {
    const auto np = normalize({2.0, 4.0, 2, 0.01, 1.0});
    CHECK(np.kappa == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(np.scale == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("normalize rejects bad inputs with distinct codes") {
    const auto code_of = [](const ProblemParams& p) {
        try {
            normalize(p);
        } catch (const invalid_params& e) {
            return e.code();
        }
        return ParamError::DimensionCap;  // sentinel: no throw
    };
    CHECK(code_of({3.0, 2.0, 2, 0.0, 1.0}) == ParamError::MNotLessThanL);
    CHECK(code_of({2.0, 2.0, 2, 0.0, 1.0}) == ParamError::MNotLessThanL);
    CHECK(code_of({-1.0, 2.0, 2, 0.0, 1.0}) == ParamError::NonPositiveM);
    CHECK(code_of({1.0, 2.0, 0, 0.0, 1.0}) == ParamError::BadSupportCount);
    CHECK(code_of({1.0, 2.0, 2, -0.1, 1.0}) == ParamError::NegativeSigma);
    CHECK(code_of({1.0, 2.0, 2, 0.1, 0.0}) == ParamError::NonPositiveR);
}

TEST_CASE("v_domain values") {
    CHECK(v_domain(2.0, 2) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::isinf(v_domain(2.0, 1)));
    CHECK(v_domain(100.0, 100) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("v_domain monotonicity on a grid") {
    for (double M : {2.0, 3.0, 10.0, 100.0}) {
        double prev = v_domain(M, 2);
        for (int n = 3; n <= 40; ++n) {
            const double cur = v_domain(M, n);
            CHECK(cur <= prev + 1e-15);  // decreasing in n
            prev = cur;
        }
    }
    for (int n : {2, 3, 10}) {
        double prev = v_domain(1.5, n);
        for (double M : {2.0, 5.0, 50.0, 500.0}) {
            const double cur = v_domain(M, n);
            CHECK(cur >= prev - 1e-15);  // increasing in M
            prev = cur;
        }
    }
    // n = 1 dominates every finite value
    CHECK(v_domain(2.0, 1) > v_domain(2.0, 2));
}

TEST_CASE("make_v accepts the closed right endpoint") {
    CHECK(make_v(2.0, 2, 1.0).v == doctest::Approx(1.0));
    CHECK(make_v(2.0, 2, 0.0).v == 0.0);
    CHECK_THROWS_AS(make_v(2.0, 2, 1.01), invalid_params);
    CHECK_THROWS_AS(make_v(2.0, 2, -0.01), invalid_params);
    CHECK(make_v(2.0, 1, 1e12).v == 1e12);  // unbounded domain when n = 1
}
