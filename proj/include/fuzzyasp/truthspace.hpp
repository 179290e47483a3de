#pragma once

// Epistemic-state values: interval, triangular and trapezoidal fuzzy numbers
// over [0, 1], stored uniformly as trapezoidal quadruples (a, b, c, d).

#include <cmath>
#include <string>

#include "error.hpp"

namespace fuzzyasp {

/// Absolute tolerance used for parameter and measure comparisons.
inline constexpr double default_tolerance = 1e-9;

enum class Shape { interval, triangular, trapezoidal };

inline const char* to_string(Shape s) {
    switch (s) {
    case Shape::interval: return "ifn";
    case Shape::triangular: return "tfn";
    case Shape::trapezoidal: return "trfn";
    }
    return "?";
}

/// A member of the truth-value space.
///
/// Restricted values have all four parameters in [0, 1].  Semi-restricted
/// values (a < 0 or d > 1, core still inside [0, 1]) keep their original
/// parameters and are marked truncated: they denote the membership function
/// clipped to [0, 1].
class FuzzyTruth {
public:
    /// Full ignorance, IFN(0, 1).
    constexpr FuzzyTruth() noexcept = default;

    static FuzzyTruth make(double a, double b, double c, double d) {
        if (!(a <= b && b <= c && c <= d)) {
            throw OrderViolation("fuzzy truth parameters must satisfy a <= b <= c <= d, got (" +
                                 std::to_string(a) + ", " + std::to_string(b) + ", " +
                                 std::to_string(c) + ", " + std::to_string(d) + ")");
        }
        if (b < 0.0 || c > 1.0) {
            throw CoreOutOfRange("core [" + std::to_string(b) + ", " + std::to_string(c) +
                                 "] must lie inside [0, 1]");
        }
        return FuzzyTruth(a, b, c, d, a < 0.0 || d > 1.0);
    }

    constexpr double a() const noexcept { return a_; }
    constexpr double b() const noexcept { return b_; }
    constexpr double c() const noexcept { return c_; }
    constexpr double d() const noexcept { return d_; }

    constexpr bool truncated() const noexcept { return truncated_; }
    constexpr bool restricted() const noexcept { return !truncated_; }

    /// Derived class: interval if a = b and c = d, triangular if b = c.
    constexpr Shape shape() const noexcept {
        if (a_ == b_ && c_ == d_) return Shape::interval;
        if (b_ == c_) return Shape::triangular;
        return Shape::trapezoidal;
    }

    /// True for exact intervals IFN(x, x).
    constexpr bool is_point() const noexcept { return a_ == d_; }

    friend constexpr bool operator==(const FuzzyTruth&, const FuzzyTruth&) = default;

private:
    constexpr FuzzyTruth(double a, double b, double c, double d, bool truncated) noexcept
        : a_(a), b_(b), c_(c), d_(d), truncated_(truncated) {}

    double a_ = 0.0;
    double b_ = 0.0;
    double c_ = 1.0;
    double d_ = 1.0;
    bool truncated_ = false;
};

inline FuzzyTruth trfn(double a, double b, double c, double d) { return FuzzyTruth::make(a, b, c, d); }
inline FuzzyTruth tfn(double a, double b, double c) { return FuzzyTruth::make(a, b, b, c); }
inline FuzzyTruth ifn(double a, double d) { return FuzzyTruth::make(a, a, d, d); }

inline FuzzyTruth unknown() { return FuzzyTruth{}; }
inline FuzzyTruth certainly_true() { return ifn(1.0, 1.0); }
inline FuzzyTruth certainly_false() { return ifn(0.0, 0.0); }

/// Piecewise-linear membership degree of v.  Truncated values are zero outside [0, 1].
/// A degenerate left segment (a = b) takes the plateau value 1 at v = b.
inline double membership(const FuzzyTruth& x, double v) {
    if (x.truncated() && (v < 0.0 || v > 1.0)) return 0.0;
    if (v < x.a() || v > x.d()) return 0.0;
    if (v >= x.b() && v <= x.c()) return 1.0;
    if (v < x.b()) return (v - x.a()) / (x.b() - x.a());
    return (x.d() - v) / (x.d() - x.c());
}

struct AlphaCut {
    double lower = 0.0;
    double upper = 0.0;
    double alpha = 0.0;
};

/// Level set at height alpha, computed on the untruncated quadruple.
inline AlphaCut alpha_cut(const FuzzyTruth& x, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw AlphaOutOfRange("alpha must lie in [0, 1], got " + std::to_string(alpha));
    }
    const double lower = std::lerp(x.a(), x.b(), alpha);
    const double upper = std::lerp(x.d(), x.c(), alpha);
    return {lower, upper, alpha};
}

/// Parameter-wise comparison; canonical shapes need not match.
inline bool equal(const FuzzyTruth& x, const FuzzyTruth& y, double eps = default_tolerance) {
    return x.truncated() == y.truncated() && std::abs(x.a() - y.a()) <= eps &&
           std::abs(x.b() - y.b()) <= eps && std::abs(x.c() - y.c()) <= eps &&
           std::abs(x.d() - y.d()) <= eps;
}

} // namespace fuzzyasp
