#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace rslnet {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace quad_detail {

// Gauss-Kronrod 15-point nodes/weights on [-1, 1]; the embedded 7-point
// Gauss rule uses the odd-indexed nodes.
inline constexpr double kNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0,
};
inline constexpr double kWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
};
inline constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
};

template <typename F>
std::pair<double, double> gk15(F& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double kronrod = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 7; ++i) {
        const double offset = half * kNodes[i];
        const double sum = f(mid - offset) + f(mid + offset);
        kronrod += kWeights[i] * sum;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * sum;
    }
    const double centre = f(mid);
    kronrod += kWeights[7] * centre;
    gauss += kGaussWeights[3] * centre;
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

template <typename F>
double refine(F& f, double a, double b, double tol, int depth) {
    const auto [value, error] = gk15(f, a, b);
    if (error <= tol) return value;
    if (depth <= 0) throw QuadratureError("adaptive quadrature did not converge");
    const double mid = 0.5 * (a + b);
    return refine(f, a, mid, 0.5 * tol, depth - 1) +
           refine(f, mid, b, 0.5 * tol, depth - 1);
}

}  // namespace quad_detail

// Adaptive Gauss-Kronrod integration of f over [a, b] to absolute tolerance
// abs_tol. Throws QuadratureError when the interval budget is exhausted.
template <typename F>
double integrate_adaptive(F f, double a, double b, double abs_tol,
                          int max_depth = 48) {
    return quad_detail::refine(f, a, b, abs_tol, max_depth);
}

}  // namespace rslnet
