#pragma once

// Enumeration of the restricted values over the lattice {0, 1/n, ..., 1}
// with their (t, k) pairs, and a cross-check against reference values for
// the 1/3 lattice.

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "measures.hpp"

namespace fuzzyasp {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational reduced(std::int64_t n, std::int64_t d) {
        const std::int64_t g = std::gcd(n, d);
        return g ? Rational{n / g, d / g} : Rational{0, 1};
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// A reference row: lattice numerators (over 3) of the displayed parameters and the expected (t, k).
struct ReferenceRow {
    Shape shape;
    std::string label;
    std::vector<int> params; // ifn: (a,d), tfn: (a,b,c), trfn: (a,b,c,d)
    Rational t;
    Rational k;
};

/// Reference (t, k) values for the 1/3 lattice: ten intervals, ten triangles, nine trapezoids.
inline const std::vector<ReferenceRow>& reference_rows_thirds() {
    static const std::vector<ReferenceRow> rows = {
        {Shape::interval, "IFN 1", {0, 0}, {0, 1}, {0, 1}},
        {Shape::interval, "IFN 2", {1, 1}, {1, 3}, {0, 1}},
        {Shape::interval, "IFN 3", {2, 2}, {2, 3}, {0, 1}},
        {Shape::interval, "IFN 4", {3, 3}, {1, 1}, {0, 1}},
        {Shape::interval, "IFN 5", {0, 1}, {1, 6}, {1, 3}},
        {Shape::interval, "IFN 6", {0, 2}, {1, 3}, {2, 3}},
        {Shape::interval, "IFN 7", {0, 3}, {1, 2}, {1, 1}},
        {Shape::interval, "IFN 8", {1, 2}, {1, 2}, {1, 3}},
        {Shape::interval, "IFN 9", {1, 3}, {2, 3}, {2, 3}},
        {Shape::interval, "IFN 10", {2, 3}, {5, 6}, {1, 3}},
        {Shape::triangular, "TFN 1", {0, 1, 3}, {4, 9}, {1, 2}},
        {Shape::triangular, "TFN 2", {0, 1, 2}, {1, 3}, {1, 3}},
        {Shape::triangular, "TFN 3", {0, 2, 3}, {5, 9}, {1, 2}},
        {Shape::triangular, "TFN 4", {0, 0, 2}, {2, 9}, {1, 3}},
        {Shape::triangular, "TFN 5", {0, 0, 3}, {1, 3}, {1, 2}},
        {Shape::triangular, "TFN 6", {1, 3, 3}, {7, 9}, {1, 3}},
        {Shape::triangular, "TFN 7", {0, 3, 3}, {2, 3}, {1, 2}},
        {Shape::triangular, "TFN 8", {1, 2, 3}, {2, 3}, {1, 3}},
        {Shape::triangular, "TFN 9", {1, 1, 3}, {5, 9}, {1, 3}},
        {Shape::triangular, "TFN 10", {0, 2, 2}, {4, 9}, {1, 3}},
        {Shape::trapezoidal, "TrFN 1", {0, 1, 2, 3}, {1, 2}, {2, 3}},
        {Shape::trapezoidal, "TrFN 2", {0, 0, 1, 2}, {7, 27}, {1, 2}},
        {Shape::trapezoidal, "TrFN 3", {0, 0, 2, 3}, {19, 45}, {5, 6}},
        {Shape::trapezoidal, "TrFN 4", {1, 1, 2, 3}, {16, 27}, {1, 2}},
        {Shape::trapezoidal, "TrFN 5", {0, 1, 3, 3}, {26, 45}, {5, 6}},
        {Shape::trapezoidal, "TrFN 6", {0, 2, 3, 3}, {23, 36}, {2, 3}},
        {Shape::trapezoidal, "TrFN 7", {1, 2, 3, 3}, {20, 27}, {1, 2}},
        {Shape::trapezoidal, "TrFN 8", {0, 1, 2, 2}, {11, 27}, {1, 2}},
        {Shape::trapezoidal, "TrFN 9", {0, 0, 1, 3}, {13, 36}, {2, 3}},
    };
    return rows;
}

struct LatticeRow {
    Shape shape;
    std::array<int, 4> numerators; // quadruple (a,b,c,d) over the lattice denominator
    FuzzyTruth value;
    double t = 0.0;
    double k = 0.0;
    Rational exact_t;
    Rational exact_k;
    const ReferenceRow* reference = nullptr;
    /// Reference present and the computed pair differs from it beyond 1e-12.
    bool mismatch = false;
};

namespace detail {

inline std::vector<int> displayed_params(Shape shape, const std::array<int, 4>& q) {
    switch (shape) {
    case Shape::interval: return {q[0], q[3]};
    case Shape::triangular: return {q[0], q[1], q[3]};
    case Shape::trapezoidal: break;
    }
    return {q[0], q[1], q[2], q[3]};
}

} // namespace detail

/// Every restricted value whose parameters lie on {0, 1/n, ..., 1}, intervals
/// first, then triangles, then trapezoids.
inline std::vector<LatticeRow> lattice_table(int n) {
    if (n < 1) throw Error("lattice step must be 1/n with n >= 1");
    std::array<std::vector<LatticeRow>, 3> by_shape;
    for (int a = 0; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            for (int c = b; c <= n; ++c)
                for (int d = c; d <= n; ++d) {
                    LatticeRow row;
                    row.numerators = {a, b, c, d};
                    row.value = trfn(double(a) / n, double(b) / n, double(c) / n, double(d) / n);
                    row.shape = row.value.shape();
                    row.t = truth_degree(row.value);
                    row.k = uncertainty_degree(row.value);
                    // exact pair in integer arithmetic
                    const std::int64_t outer = d - a, core = c - b;
                    if (outer + core == 0) {
                        row.exact_t = Rational::reduced(a, n);
                    } else {
                        row.exact_t = Rational::reduced(outer * (a + b + d) + core * (b + c + d),
                                                        3LL * n * (outer + core));
                    }
                    row.exact_k = Rational::reduced(outer + core, 2LL * n);
                    if (n == 3) {
                        const auto shown = detail::displayed_params(row.shape, row.numerators);
                        for (const auto& ref : reference_rows_thirds()) {
                            if (ref.shape == row.shape && ref.params == shown) {
                                row.reference = &ref;
                                row.mismatch = std::abs(row.t - ref.t.value()) > 1e-12 ||
                                               std::abs(row.k - ref.k.value()) > 1e-12;
                            }
                        }
                    }
                    by_shape[static_cast<int>(row.shape)].push_back(row);
                }
    std::vector<LatticeRow> out;
    for (auto& group : by_shape) out.insert(out.end(), group.begin(), group.end());
    return out;
}

/// Displayed parameters of a lattice row as fractions, e.g. "(0, 1/3, 1)".
inline std::string lattice_params(const LatticeRow& row, int n) {
    std::string out = "(";
    const auto shown = detail::displayed_params(row.shape, row.numerators);
    for (std::size_t i = 0; i < shown.size(); ++i) {
        if (i) out += ", ";
        out += Rational::reduced(shown[i], n).str();
    }
    return out + ")";
}

} // namespace fuzzyasp
