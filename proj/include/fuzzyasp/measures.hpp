#pragma once

// Truth degree t (mean of the equivalent probability density of the unknown
// actual truth value) and uncertainty degree k (area under the membership
// curve on [0, 1]), plus the two total preorders they induce.

#include <algorithm>

#include "truthspace.hpp"

namespace fuzzyasp {

namespace detail {

// Corner areas of a semi-restricted value that fall outside [0, 1].  The
// core lies inside [0, 1], so a clipped corner is always a slope segment
// and its denominator is strictly positive.
inline double left_clipped_area(const FuzzyTruth& x) {
    return x.a() < 0.0 ? x.a() * x.a() / (2.0 * (x.b() - x.a())) : 0.0;
}

inline double right_clipped_area(const FuzzyTruth& x) {
    return x.d() > 1.0 ? (x.d() - 1.0) * (x.d() - 1.0) / (2.0 * (x.d() - x.c())) : 0.0;
}

// First moment of the membership function over [max(0, a), min(d, 1)].
inline double first_moment(const FuzzyTruth& x) {
    const double a = x.a(), b = x.b(), c = x.c(), d = x.d();
    double moment = (c * c - b * b) / 2.0;
    if (b > a) {
        // u = v - a runs from u0 to u1 = b - a
        const double u1 = b - a;
        const double u0 = std::max(0.0, a) - a;
        moment += ((u1 * u1 + u1 * u0 + u0 * u0) * (u1 - u0) / 3.0 +
                   a * (u1 + u0) * (u1 - u0) / 2.0) / u1;
    }
    if (d > c) {
        // w = d - v runs from w1 = d - min(d, 1) to w0 = d - c
        const double w0 = d - c;
        const double w1 = d - std::min(d, 1.0);
        moment += (d * (w0 + w1) * (w0 - w1) / 2.0 -
                   (w0 * w0 + w0 * w1 + w1 * w1) * (w0 - w1) / 3.0) / w0;
    }
    return moment;
}

} // namespace detail

/// Uncertainty degree k: (d + c - b - a) / 2 minus the corner areas clipped off by truncation.
inline double uncertainty_degree(const FuzzyTruth& x) {
    const double k = (x.d() + x.c() - x.b() - x.a()) / 2.0;
    if (x.restricted()) return k;
    return std::max(0.0, k - detail::left_clipped_area(x) - detail::right_clipped_area(x));
}

/// Truth degree t: expected value of the equivalent probability density.
inline double truth_degree(const FuzzyTruth& x) {
    const double a = x.a(), b = x.b(), c = x.c(), d = x.d();
    if (x.restricted()) {
        // Weighted mean of (a+b+d)/3 and (b+c+d)/3 with weights (d-a) and (c-b);
        // equal to the cubic-difference closed form, without its 0/0 at a = b or c = d.
        const double outer = d - a;
        const double core = c - b;
        if (outer + core <= 0.0) return a;
        return (outer * (a + b + d) + core * (b + c + d)) / (3.0 * (outer + core));
    }
    const double k = uncertainty_degree(x);
    if (k <= 0.0) return (b + c) / 2.0; // all mass collapsed onto an endpoint of [0, 1]
    return std::clamp(detail::first_moment(x) / k, 0.0, 1.0);
}

/// Height of the equivalent density, 1 / k.  Zero for exact intervals.
inline double density_height(const FuzzyTruth& x) {
    const double k = uncertainty_degree(x);
    return k > 0.0 ? 1.0 / k : 0.0;
}

/// Equivalent probability density of the actual truth value at v.
/// Exact intervals have no proper density and return 0 everywhere.
inline double density(const FuzzyTruth& x, double v) {
    const double h = density_height(x);
    if (h == 0.0 || v < 0.0 || v > 1.0) return 0.0;
    return h * membership(x, v);
}

struct Measure {
    double t = 0.5;
    double k = 1.0;
};

inline Measure measure(const FuzzyTruth& x) { return {truth_degree(x), uncertainty_degree(x)}; }

enum class Relation { less, equal, greater };

inline const char* to_string(Relation r) {
    switch (r) {
    case Relation::less: return "less";
    case Relation::equal: return "equal";
    case Relation::greater: return "greater";
    }
    return "?";
}

/// Position of x relative to y in the truth and in the knowledge preorder.
/// Knowledge grows as uncertainty shrinks: x is knowledge-less than y when k_x > k_y.
struct Ordering {
    Relation truth = Relation::equal;
    Relation knowledge = Relation::equal;
};

inline Relation compare_scalar(double lhs, double rhs, double tol) {
    if (lhs < rhs - tol) return Relation::less;
    if (lhs > rhs + tol) return Relation::greater;
    return Relation::equal;
}

inline Ordering compare(const FuzzyTruth& x, const FuzzyTruth& y, double tol = default_tolerance) {
    const Measure mx = measure(x), my = measure(y);
    return {compare_scalar(mx.t, my.t, tol), compare_scalar(my.k, mx.k, tol)};
}

inline bool leq_truth(const FuzzyTruth& x, const FuzzyTruth& y, double tol = default_tolerance) {
    return truth_degree(x) <= truth_degree(y) + tol;
}

inline bool leq_knowledge(const FuzzyTruth& x, const FuzzyTruth& y, double tol = default_tolerance) {
    return uncertainty_degree(x) >= uncertainty_degree(y) - tol;
}

/// The degenerate interval IFN(t, t) sharing x's truth degree.
inline FuzzyTruth equivalent_interval(const FuzzyTruth& x) {
    if (x.truncated()) throw NotRestricted("equivalent interval is defined for restricted values only");
    const double t = truth_degree(x);
    return ifn(t, t);
}

} // namespace fuzzyasp
