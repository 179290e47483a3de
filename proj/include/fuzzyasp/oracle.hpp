#pragma once

// Independent numerical yardsticks for the closed-form measures: adaptive
// quadrature over the membership function, Monte Carlo estimation of
// Prob(p <= q) by inverse-CDF sampling, and enumeration of the closure of a
// value set under the connectives.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "closure.hpp"
#include "connectives.hpp"

namespace fuzzyasp::oracle {

namespace detail {

// Integrates f over [0, 1] piece by piece between the breakpoints of x, where
// the membership curve has its kinks and jumps.
template <class F>
double integrate_unit(const FuzzyTruth& x, F f, double tolerance) {
    std::array<double, 6> cuts{0.0, x.a(), x.b(), x.c(), x.d(), 1.0};
    for (double& c : cuts) c = std::clamp(c, 0.0, 1.0);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0, error_total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (!(cuts[i + 1] > cuts[i])) continue;
        double error = 0.0;
        total += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, cuts[i], cuts[i + 1], 15,
                                                                               1e-12, &error);
        error_total += error;
    }
    if (!(error_total <= tolerance)) {
        throw QuadratureFailure("quadrature error estimate " + std::to_string(error_total) + " above " +
                                std::to_string(tolerance));
    }
    return total;
}

} // namespace detail

/// Area under the (truncated) membership curve on [0, 1].
inline double integrate_area(const FuzzyTruth& x, double tolerance = 1e-8) {
    return detail::integrate_unit(x, [&](double v) { return membership(x, v); }, tolerance);
}

/// Mean of the density proportional to the membership curve on [0, 1].
inline double integrate_density_mean(const FuzzyTruth& x, double tolerance = 1e-8) {
    const double area = integrate_area(x, tolerance);
    if (!(area > 0.0)) throw QuadratureFailure("value has no spread; its density is not a function");
    const double moment = detail::integrate_unit(x, [&](double v) { return v * membership(x, v); }, tolerance);
    return moment / area;
}

/// Integral of the library density over [0, 1]; 1 for every value with k > 0.
inline double integrate_density(const FuzzyTruth& x, double tolerance = 1e-8) {
    return detail::integrate_unit(x, [&](double v) { return density(x, v); }, tolerance);
}

/// Inverse-CDF sampler for the density proportional to a value's membership on [0, 1].
///
/// Segment masses are measured from the geometry directly: rising slope over
/// [max(0, a), b], plateau over [b, c], falling slope over [c, min(d, 1)].
class Sampler {
public:
    explicit Sampler(const FuzzyTruth& x) : x_(x) {
        const double a = x.a(), b = x.b(), c = x.c(), d = x.d();
        lo_ = std::max(0.0, a);
        hi_ = std::min(1.0, d);
        if (b > a) mass_[0] = ((b - a) * (b - a) - (lo_ - a) * (lo_ - a)) / (2.0 * (b - a));
        mass_[1] = c - b;
        if (d > c) mass_[2] = ((d - c) * (d - c) - (d - hi_) * (d - hi_)) / (2.0 * (d - c));
        total_ = mass_[0] + mass_[1] + mass_[2];
    }

    double total_mass() const noexcept { return total_; }

    template <class Rng>
    double operator()(Rng& rng) const {
        if (total_ <= 0.0) return x_.b(); // point mass
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double u = unit(rng) * total_;
        const double a = x_.a(), b = x_.b(), c = x_.c(), d = x_.d();
        if (u < mass_[0]) {
            // mass from lo to v: ((v-a)^2 - (lo-a)^2) / (2(b-a))
            return std::min(b, a + std::sqrt((lo_ - a) * (lo_ - a) + 2.0 * (b - a) * u));
        }
        u -= mass_[0];
        if (u < mass_[1] || mass_[2] <= 0.0) return std::min(c, b + u);
        u -= mass_[1];
        // mass from c to v: ((d-c)^2 - (d-v)^2) / (2(d-c))
        return std::max(c, d - std::sqrt(std::max(0.0, (d - c) * (d - c) - 2.0 * (d - c) * u)));
    }

private:
    FuzzyTruth x_;
    double lo_ = 0.0;
    double hi_ = 1.0;
    std::array<double, 3> mass_{};
    double total_ = 0.0;
};

inline constexpr std::uint64_t default_seed = 20190601;

struct Estimate {
    double probability = 0.0;
    double standard_error = 0.0;
    std::size_t samples = 0;
};

/// Monte Carlo estimate of Prob(p <= q) for independent p ~ x and q ~ y.
inline Estimate prob_leq(const FuzzyTruth& x, const FuzzyTruth& y, std::size_t samples = 1'000'000,
                         std::uint64_t seed = default_seed) {
    const Sampler sx(x), sy(y);
    std::mt19937_64 rng(seed);
    std::size_t hits = 0;
    for (std::size_t n = 0; n < samples; ++n) {
        const double p = sx(rng);
        const double q = sy(rng);
        if (p <= q) ++hits;
    }
    Estimate e;
    e.samples = samples;
    e.probability = samples ? static_cast<double>(hits) / static_cast<double>(samples) : 0.0;
    e.standard_error = samples ? std::sqrt(e.probability * (1.0 - e.probability) / static_cast<double>(samples)) : 0.0;
    return e;
}

using fuzzyasp::closure_enumerate;

} // namespace fuzzyasp::oracle
