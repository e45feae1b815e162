#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace rslnet {

// Discrete power-law fit in the style of Clauset, Shalizi & Newman:
// maximum-likelihood exponent at a candidate cutoff kmin, cutoff chosen by
// minimizing the Kolmogorov-Smirnov distance over the fitted tail.

struct PowerLawFit {
    double alpha = 0.0;       // fitted exponent, > 1
    std::uint64_t kmin = 1;   // lower cutoff of the power-law regime
    double ks = 1.0;          // KS distance at (alpha, kmin)
    std::size_t n_tail = 0;   // observations with k >= kmin
    std::size_t n_total = 0;
};

namespace zeta_detail {

// Generalized (Hurwitz) zeta sum(k>=a) k^-alpha and its log-weighted
// companion sum(k>=a) ln(k) k^-alpha. Terms below M = max(a, kCutoff) are
// summed explicitly; the rest comes from an Euler-Maclaurin tail through
// the B4 term, whose remainder is below 1e-12 for alpha in (1, 64] and
// M >= 1000.
inline constexpr std::uint64_t kCutoff = 1000;

struct Tail {
    double plain;
    double logw;
};

inline Tail em_tail(double alpha, double m) {
    const double lm = std::log(m);
    const double pm = std::exp(-alpha * lm);          // m^-alpha
    const double am1 = alpha - 1.0;
    const double head = std::exp(-am1 * lm);          // m^(1-alpha)
    const double m3 = m * m * m;
    const double a123 = alpha * (alpha + 1.0) * (alpha + 2.0);

    Tail t;
    t.plain = head / am1 + 0.5 * pm + alpha / 12.0 * pm / m - a123 / 720.0 * pm / m3;
    t.logw = head * (lm / am1 + 1.0 / (am1 * am1)) + 0.5 * lm * pm +
             (alpha * lm - 1.0) / 12.0 * pm / m +
             (((alpha + 2.0) * (2.0 * alpha + 1.0) + alpha * (alpha + 1.0)) -
              a123 * lm) /
                 720.0 * pm / m3;
    return t;
}

inline double hurwitz_zeta(double alpha, std::uint64_t a) {
    const std::uint64_t m = std::max(a, kCutoff);
    double z = em_tail(alpha, static_cast<double>(m)).plain;
    for (std::uint64_t k = m; k-- > a;)
        z += std::exp(-alpha * std::log(static_cast<double>(k)));
    return z;
}

// Model mean of ln K under the zeta(alpha, a) distribution.
inline double zeta_log_mean(double alpha, std::uint64_t a) {
    const std::uint64_t m = std::max(a, kCutoff);
    Tail acc = em_tail(alpha, static_cast<double>(m));
    for (std::uint64_t k = m; k-- > a;) {
        const double lk = std::log(static_cast<double>(k));
        const double p = std::exp(-alpha * lk);
        acc.plain += p;
        acc.logw += lk * p;
    }
    return acc.logw / acc.plain;
}

// Precomputes suffix sums so that zeta(alpha, a) is O(1) for every a >= lo
// at a fixed alpha; used by the KS scan.
class ZetaEvaluator {
public:
    ZetaEvaluator(double alpha, std::uint64_t lo) : alpha_(alpha), lo_(lo) {
        if (lo < kCutoff) {
            suffix_.resize(kCutoff - lo + 1, 0.0);
            suffix_.back() = em_tail(alpha, static_cast<double>(kCutoff)).plain;
            for (std::uint64_t k = kCutoff; k-- > lo;)
                suffix_[k - lo] =
                    suffix_[k - lo + 1] + std::exp(-alpha * std::log(static_cast<double>(k)));
        }
    }

    double operator()(std::uint64_t a) const {
        if (a < lo_) throw std::invalid_argument("ZetaEvaluator: a below window");
        if (a < kCutoff) return suffix_[a - lo_];
        return em_tail(alpha_, static_cast<double>(a)).plain;
    }

private:
    double alpha_;
    std::uint64_t lo_;
    std::vector<double> suffix_;
};

}  // namespace zeta_detail

namespace fit_detail {

// Discrete MLE: alpha solves E_zeta(alpha,kmin)[ln K] = mean ln(tail). The
// model mean is strictly decreasing in alpha, so the root is unique;
// bisection over (1, 64], clamped at the top for near-degenerate tails.
inline double mle_alpha(double mean_log_tail, std::uint64_t kmin) {
    double lo = 1.0 + 1e-9;
    double hi = 64.0;
    if (zeta_detail::zeta_log_mean(hi, kmin) >= mean_log_tail) return hi;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (zeta_detail::zeta_log_mean(mid, kmin) > mean_log_tail ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// KS distance between the empirical tail CDF and the fitted model CDF
//   P(K <= k) = 1 - zeta(alpha, k+1)/zeta(alpha, kmin),
// evaluated at every distinct observed tail value.
inline double ks_statistic(std::span<const std::uint64_t> sorted_tail, double alpha,
                           std::uint64_t kmin) {
    const zeta_detail::ZetaEvaluator zeta(alpha, kmin);
    const double norm = zeta(kmin);
    const double n = static_cast<double>(sorted_tail.size());
    double worst = 0.0;
    std::size_t cum = 0;
    for (std::size_t i = 0; i < sorted_tail.size();) {
        const std::uint64_t k = sorted_tail[i];
        std::size_t j = i;
        while (j < sorted_tail.size() && sorted_tail[j] == k) ++j;
        cum = j;
        const double empirical = static_cast<double>(cum) / n;
        const double model = 1.0 - zeta(k + 1) / norm;
        worst = std::max(worst, std::abs(empirical - model));
        i = j;
    }
    return worst;
}

struct KminFit {
    double alpha = 0.0;
    double ks = 1.0;
    std::size_t n_tail = 0;
};

inline KminFit fit_at_kmin_sorted(std::span<const std::uint64_t> sorted,
                                  std::uint64_t kmin) {
    if (kmin < 1) throw std::invalid_argument("fit_alpha_at_kmin: kmin must be >= 1");
    const auto first = std::lower_bound(sorted.begin(), sorted.end(), kmin);
    const auto tail = sorted.subspan(static_cast<std::size_t>(first - sorted.begin()));
    if (tail.size() < 10)
        throw std::invalid_argument("fit_alpha_at_kmin: fewer than 10 tail observations");
    if (tail.front() == tail.back())
        throw std::invalid_argument("fit_alpha_at_kmin: degenerate sample, tail has zero variance");

    double sum_log = 0.0;
    for (std::uint64_t k : tail) sum_log += std::log(static_cast<double>(k));
    const double mean_log = sum_log / static_cast<double>(tail.size());

    KminFit fit;
    fit.alpha = mle_alpha(mean_log, kmin);
    fit.ks = ks_statistic(tail, fit.alpha, kmin);
    fit.n_tail = tail.size();
    return fit;
}

}  // namespace fit_detail

// Maximum-likelihood exponent and KS distance at a fixed cutoff.
inline fit_detail::KminFit fit_alpha_at_kmin(std::span<const std::uint64_t> degrees,
                                             std::uint64_t kmin) {
    std::vector<std::uint64_t> sorted(degrees.begin(), degrees.end());
    std::sort(sorted.begin(), sorted.end());
    return fit_detail::fit_at_kmin_sorted(sorted, kmin);
}

// Full fit: evaluates every candidate kmin from 1 up to the 90th-percentile
// degree and keeps the one minimizing the KS distance, ties broken toward
// smaller kmin. Candidates that leave fewer than 10 tail points or a
// zero-variance tail are skipped.
inline PowerLawFit fit_power_law(std::span<const std::uint64_t> degrees) {
    if (degrees.size() < 50)
        throw std::invalid_argument("fit_power_law: sample too small (need >= 50 observations)");
    std::vector<std::uint64_t> sorted(degrees.begin(), degrees.end());
    std::sort(sorted.begin(), sorted.end());

    const std::uint64_t p90 = sorted[(9 * (sorted.size() - 1)) / 10];

    PowerLawFit best;
    best.n_total = sorted.size();
    bool found = false;
    for (std::uint64_t kmin = 1; kmin <= p90; ++kmin) {
        const auto first = std::lower_bound(sorted.begin(), sorted.end(), kmin);
        const std::span<const std::uint64_t> tail(first, sorted.end());
        if (tail.size() < 10) break;  // shrinks as kmin grows
        if (tail.front() == tail.back()) continue;
        const auto fit = fit_detail::fit_at_kmin_sorted(sorted, kmin);
        if (!found || fit.ks < best.ks) {
            found = true;
            best.alpha = fit.alpha;
            best.kmin = kmin;
            best.ks = fit.ks;
            best.n_tail = fit.n_tail;
        }
    }
    if (!found)
        throw std::invalid_argument("fit_power_law: no usable kmin candidate (sample too small)");
    return best;
}

}  // namespace rslnet
