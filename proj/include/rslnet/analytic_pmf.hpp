#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <variant>

#include "rslnet/quadrature.hpp"

namespace rslnet {

// Closed-form degree distributions. All of them are proper PMFs over
// k = 1, 2, 3, ... and every function below is pure.

// Barabasi-Albert stationary distribution with m links per arriving node:
//   p(k) = 2m(m+1) / (k(k+1)(k+2))  for k >= m, and 0 below support.
inline double pmf_ba(std::uint64_t m, std::uint64_t k) {
    if (m < 1) throw std::invalid_argument("pmf_ba: m must be >= 1");
    if (k < m) return 0.0;
    const double kd = static_cast<double>(k);
    return 2.0 * static_cast<double>(m) * static_cast<double>(m + 1) /
           (kd * (kd + 1.0) * (kd + 2.0));
}

// Shifted geometric: Pr(K = k) = q(1-q)^(k-1), k >= 1. Trials up to and
// including the first success at per-trial stopping probability q.
inline double pmf_shifted_geometric(double q, std::uint64_t k) {
    if (!(q > 0.0 && q <= 1.0))
        throw std::invalid_argument("pmf_shifted_geometric: q must be in (0,1]");
    if (k < 1) throw std::invalid_argument("pmf_shifted_geometric: k must be >= 1");
    return q * std::pow(1.0 - q, static_cast<double>(k - 1));
}

// Geometric mixture with uniform stopping probabilities: p(k) = 1/(k^2+k).
inline double pmf_uniform_mixture(std::uint64_t k) {
    if (k < 1) throw std::invalid_argument("pmf_uniform_mixture: k must be >= 1");
    const double kd = static_cast<double>(k);
    return 1.0 / (kd * (kd + 1.0));
}

// Geometric mixture with linear mixing density a(q) = 2q:
//   p(k) = 4 / (k(k+1)(k+2)).
inline double pmf_linear_mixture(std::uint64_t k) {
    if (k < 1) throw std::invalid_argument("pmf_linear_mixture: k must be >= 1");
    const double kd = static_cast<double>(k);
    return 4.0 / (kd * (kd + 1.0) * (kd + 2.0));
}

// Geometric mixture with mixing density a(q) = (1+c)q^c, c in [0,1]:
//
//   p(k) = (c+1) Gamma(k) Gamma(c+2) / Gamma(k+c+2)
//
// evaluated through log-gamma differences; direct Gamma overflows doubles
// near k = 170. Reduces to the uniform mixture at c = 0 and the linear
// mixture at c = 1; the large-k tail decays as k^-(c+2).
inline double pmf_sublinear(double c, std::uint64_t k) {
    if (!(c >= 0.0 && c <= 1.0))
        throw std::invalid_argument("pmf_sublinear: c must be in [0,1]");
    if (k < 1) throw std::invalid_argument("pmf_sublinear: k must be >= 1");
    const double kd = static_cast<double>(k);
    const double log_p = std::log1p(c) + std::lgamma(kd) + std::lgamma(c + 2.0) -
                         std::lgamma(kd + c + 2.0);
    return std::exp(log_p);
}

// Numeric-integration route to the same mixture:
//
//   p(k) = integral over q in [0,1] of (1+c) q^(1+c) (1-q)^(k-1)
//
// by adaptive quadrature to 1e-10 absolute tolerance. Shares no code with
// the closed forms above and serves as their cross-check.
inline double mixture_pmf_numeric(double c, std::uint64_t k) {
    if (!(c >= 0.0 && c <= 1.0))
        throw std::invalid_argument("mixture_pmf_numeric: c must be in [0,1]");
    if (k < 1) throw std::invalid_argument("mixture_pmf_numeric: k must be >= 1");
    const double km1 = static_cast<double>(k - 1);
    auto integrand = [c, km1](double q) {
        // pow(0, 0) == 1 covers the q = 1 endpoint at k = 1
        return (1.0 + c) * std::pow(q, 1.0 + c) * std::pow(1.0 - q, km1);
    };
    return integrate_adaptive(integrand, 0.0, 1.0, 1e-10);
}

// Tagged choice of analytic degree distribution.
struct BaModel {
    std::uint64_t m = 1;
};
struct ShiftedGeometricModel {
    double q = 1.0;
};
struct UniformMixtureModel {};
struct LinearMixtureModel {};
struct SublinearModel {
    double c = 0.0;
};

using PmfModel = std::variant<BaModel, ShiftedGeometricModel, UniformMixtureModel,
                              LinearMixtureModel, SublinearModel>;

inline double pmf(const PmfModel& model, std::uint64_t k) {
    return std::visit(
        [k](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, BaModel>) return pmf_ba(m.m, k);
            if constexpr (std::is_same_v<T, ShiftedGeometricModel>)
                return pmf_shifted_geometric(m.q, k);
            if constexpr (std::is_same_v<T, UniformMixtureModel>)
                return pmf_uniform_mixture(k);
            if constexpr (std::is_same_v<T, LinearMixtureModel>)
                return pmf_linear_mixture(k);
            if constexpr (std::is_same_v<T, SublinearModel>)
                return pmf_sublinear(m.c, k);
        },
        model);
}

}  // namespace rslnet
