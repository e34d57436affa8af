#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace silver {

enum class ParamError {
    NonPositiveM,
    MNotLessThanL,      // strong convexity modulus must be strictly below smoothness
    BadSupportCount,
    NegativeSigma,
    NonPositiveR,
    VOutOfRange,
    ScheduleMismatch,
    DimensionCap,
};

class invalid_params : public std::invalid_argument {
public:
    invalid_params(ParamError code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}
    ParamError code() const { return code_; }

private:
    ParamError code_;
};

class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computed quantity contradicts a certified inequality; distinct from
// numerical_error so callers can treat it as a falsification signal.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raw problem description: f is m-strongly convex with M-Lipschitz gradient,
// the stochastic gradient has n equally likely realizations with mean-square
// deviation at most sigma^2, and the start point is within R of the optimum.
struct ProblemParams {
    double m = 1.0;
    double M = 2.0;
    int n = 1;
    double sigma = 0.0;
    double R = 1.0;
};

// Everything downstream works with m = 1. A schedule (alpha, beta) computed at
// kappa applies to the original problem as (alpha*scale, beta*scale).
struct NormalizedParams {
    double kappa;
    double scale;
    int n;
    double sigma_over_R;
};

struct VParam {
    double v = 0.0;
};

inline void check_problem(const ProblemParams& p) {
    if (!(p.m > 0.0))
        throw invalid_params(ParamError::NonPositiveM, "m must be positive");
    if (!(p.m < p.M))
        throw invalid_params(ParamError::MNotLessThanL, "m must be strictly less than M");
    if (p.n < 1)
        throw invalid_params(ParamError::BadSupportCount, "support count n must be at least 1");
    if (!(p.sigma >= 0.0))
        throw invalid_params(ParamError::NegativeSigma, "sigma must be nonnegative");
    if (!(p.R > 0.0))
        throw invalid_params(ParamError::NonPositiveR, "R must be positive");
}

// Upper end of the admissible v interval: (M-1)n/((n-1)M), with the n = 1 case
// taken as +infinity.
inline double v_domain(double M, int n) {
    if (!(M > 1.0))
        throw invalid_params(ParamError::MNotLessThanL, "v_domain requires M > 1");
    if (n < 1)
        throw invalid_params(ParamError::BadSupportCount, "v_domain requires n >= 1");
    if (n == 1) return std::numeric_limits<double>::infinity();
    return (M - 1.0) * n / ((n - 1.0) * M);
}

inline NormalizedParams normalize(const ProblemParams& p) {
    check_problem(p);
    NormalizedParams out;
    out.kappa = p.M / p.m;
    out.scale = 1.0 / p.m;
    out.n = p.n;
    // Dividing f by m rescales gradients (and their deviations) by 1/m while
    // leaving distances untouched.
    out.sigma_over_R = p.sigma / (p.m * p.R);
    return out;
}

// The closed interval [0, v_domain] is admissible; the right endpoint is a
// legitimate input (the first stepsize then lands exactly on 1/M).
inline VParam make_v(double M, int n, double v) {
    const double hi = v_domain(M, n);
    const double slack = 1e-12 * (1.0 + (n == 1 ? 0.0 : hi));
    if (!(v >= 0.0) || v > hi + slack)
        throw invalid_params(ParamError::VOutOfRange,
                             "v must lie in [0, (M-1)n/((n-1)M)]");
    return VParam{v > hi ? hi : v};
}

}  // namespace silver
