#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>

#include "measures.hpp"

namespace fuzzyasp {

/// Involutive negation: reflection of the quadruple about 0.5.  Preserves k.
inline FuzzyTruth negate(const FuzzyTruth& x) {
    return FuzzyTruth::make(1.0 - x.d(), 1.0 - x.c(), 1.0 - x.b(), 1.0 - x.a());
}

/// Negation as failure.  Always an exact interval, built from the second parameter.
inline FuzzyTruth naf(const FuzzyTruth& x) {
    const double v = 1.0 - x.b();
    return ifn(v, v);
}

/// Product t-norm.
///
/// Restricted operands multiply componentwise.  If either operand is
/// truncated, the outer parameters are the extremes of the four products of
/// {a, d} and the core parameters the extremes of the four products of
/// {b, c}; extremes of a bilinear product over a box sit at its corners, so
/// the result stays ordered.
inline FuzzyTruth conj(const FuzzyTruth& x, const FuzzyTruth& y) {
    if (x.restricted() && y.restricted()) {
        return FuzzyTruth::make(x.a() * y.a(), x.b() * y.b(), x.c() * y.c(), x.d() * y.d());
    }
    const auto outer = {x.a() * y.a(), x.a() * y.d(), x.d() * y.a(), x.d() * y.d()};
    const auto core = {x.b() * y.b(), x.b() * y.c(), x.c() * y.b(), x.c() * y.c()};
    return FuzzyTruth::make(std::min(outer), std::min(core), std::max(core), std::max(outer));
}

/// De Morgan dual of conj under negate.
inline FuzzyTruth disj(const FuzzyTruth& x, const FuzzyTruth& y) {
    return negate(conj(negate(x), negate(y)));
}

/// Knowledge aggregation: the operand with the strictly smaller uncertainty
/// degree.  Equal uncertainty with distinct values has no result.
inline std::optional<FuzzyTruth> try_kagg(const FuzzyTruth& x, const FuzzyTruth& y,
                                          double tol = default_tolerance) {
    const double kx = uncertainty_degree(x);
    const double ky = uncertainty_degree(y);
    if (kx < ky - tol) return x;
    if (ky < kx - tol) return y;
    if (equal(x, y, tol)) return x;
    return std::nullopt;
}

inline FuzzyTruth kagg(const FuzzyTruth& x, const FuzzyTruth& y, double tol = default_tolerance) {
    if (auto r = try_kagg(x, y, tol)) return *r;
    throw AggregationTie("knowledge aggregation of distinct values with equal uncertainty");
}

} // namespace fuzzyasp
