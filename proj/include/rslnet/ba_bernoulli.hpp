#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "rslnet/analytic_pmf.hpp"

namespace rslnet {

// Bernoulli-process view of preferential attachment: at link-timestep t a
// node of degree k receives the new link with probability k/(2t).

inline double attachment_probability(std::uint64_t k, std::uint64_t t) {
    if (t < 1) throw std::invalid_argument("attachment_probability: t must be >= 1");
    if (k > 2 * t)
        throw std::invalid_argument(
            "attachment_probability: k cannot exceed the stub count 2t");
    return static_cast<double>(k) / (2.0 * static_cast<double>(t));
}

// One-step mass update at degree k > m:
//
//   (t/(t+1)) * [ (1 - k/2t) p(k) + ((k-1)/2t) p(k-1) ]
//
// nodes at k that miss the trial plus nodes at k-1 that take it, rescaled
// by the node-count ratio (t/m)/((t+1)/m). The identity with the
// stationary distribution is algebraically exact for every t, so the
// factors are combined directly rather than through
// attachment_probability's bounds checks.
inline double one_step_update(std::uint64_t m, std::uint64_t t, std::uint64_t k) {
    if (t < 1) throw std::invalid_argument("one_step_update: t must be >= 1");
    if (k <= m)
        throw std::invalid_argument(
            "one_step_update: k must be >= m+1 (below that, mass arrives from "
            "new nodes, not from Bernoulli trials)");
    const double kd = static_cast<double>(k);
    const double td = static_cast<double>(t);
    const double stay = (1.0 - kd / (2.0 * td)) * pmf_ba(m, k);
    const double inflow = (kd - 1.0) / (2.0 * td) * pmf_ba(m, k - 1);
    return td / (td + 1.0) * (stay + inflow);
}

struct BernoulliStepReport {
    std::uint64_t m = 0;
    std::uint64_t k_min = 0;  // first degree checked, always m+1
    std::uint64_t k_max = 0;
    std::vector<std::uint64_t> t_values;
    std::vector<double> max_abs_error_per_t;  // parallel to t_values
    double max_abs_error = 0.0;
};

// Sweeps |one_step_update(m,t,k) - pmf_ba(m,k)| over k in [m+1, k_max] for
// each t. The update reduces to the stationary PMF exactly, so anything
// beyond floating-point noise is a defect.
inline BernoulliStepReport verify_fixed_point(std::uint64_t m,
                                              std::span<const std::uint64_t> t_values,
                                              std::uint64_t k_max) {
    if (m < 1) throw std::invalid_argument("verify_fixed_point: m must be >= 1");
    if (k_max < m + 1)
        throw std::invalid_argument("verify_fixed_point: kmax must be >= m+1");
    if (t_values.empty())
        throw std::invalid_argument("verify_fixed_point: need at least one t");

    BernoulliStepReport report;
    report.m = m;
    report.k_min = m + 1;
    report.k_max = k_max;
    for (std::uint64_t t : t_values) {
        if (t < 1) throw std::invalid_argument("verify_fixed_point: t must be >= 1");
        double worst = 0.0;
        for (std::uint64_t k = m + 1; k <= k_max; ++k) {
            const double err = std::abs(one_step_update(m, t, k) - pmf_ba(m, k));
            if (err > worst) worst = err;
        }
        report.t_values.push_back(t);
        report.max_abs_error_per_t.push_back(worst);
        if (worst > report.max_abs_error) report.max_abs_error = worst;
    }
    return report;
}

}  // namespace rslnet
