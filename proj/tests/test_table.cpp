#include <gtest/gtest.h>

#include <algorithm>

#include "fuzzyasp/table.hpp"

using namespace fuzzyasp;

TEST(Table, ThirdsReproduceEveryReferenceRow) {
    const auto rows = lattice_table(3);
    std::size_t found = 0;
    for (const auto& row : rows) {
        if (!row.reference) continue;
        ++found;
        EXPECT_FALSE(row.mismatch) << row.reference->label;
        EXPECT_EQ(row.exact_t, row.reference->t) << row.reference->label;
        EXPECT_EQ(row.exact_k, row.reference->k) << row.reference->label;
    }
    EXPECT_EQ(found, reference_rows_thirds().size());
    EXPECT_EQ(found, 29u);
}

TEST(Table, TriangleRow) {
    const auto rows = lattice_table(3);
    const auto it = std::find_if(rows.begin(), rows.end(), [](const LatticeRow& r) {
        return r.numerators == std::array<int, 4>{0, 1, 1, 3};
    });
    ASSERT_NE(it, rows.end());
    EXPECT_EQ(it->shape, Shape::triangular);
    EXPECT_EQ(it->exact_t, (Rational{4, 9}));
    EXPECT_EQ(it->exact_k, (Rational{1, 2}));
    EXPECT_EQ(lattice_params(*it, 3), "(0, 1/3, 1)");
}

// Integer cubic-difference form, independent of the library's exact pair.
TEST(Table, ExactPairsMatchIntegerArithmetic) {
    for (int n : {1, 2, 3, 4, 6}) {
        for (const auto& row : lattice_table(n)) {
            const std::int64_t a = row.numerators[0], b = row.numerators[1], c = row.numerators[2],
                               d = row.numerators[3];
            const std::int64_t width = d + c - b - a;
            const Rational t = width == 0 ? Rational::reduced(a, n)
                                          : Rational::reduced(c * c + c * d + d * d - a * a - a * b - b * b,
                                                              3LL * n * width);
            EXPECT_EQ(row.exact_t, t);
            EXPECT_EQ(row.exact_k, Rational::reduced(width, 2LL * n));
            EXPECT_NEAR(row.t, row.exact_t.value(), 1e-12);
            EXPECT_NEAR(row.k, row.exact_k.value(), 1e-12);
        }
    }
}

TEST(Table, UnitStep) {
    const auto rows = lattice_table(1);
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows.front().shape, Shape::interval);
    for (const auto& row : rows) EXPECT_EQ(row.reference, nullptr);
    EXPECT_THROW(lattice_table(0), Error);
}

TEST(Table, RowCountAndOrdering) {
    for (int n : {2, 3, 5}) {
        const auto rows = lattice_table(n);
        std::size_t quadruples = 0;
        for (int a = 0; a <= n; ++a)
            for (int b = a; b <= n; ++b)
                for (int c = b; c <= n; ++c)
                    for (int d = c; d <= n; ++d) ++quadruples;
        EXPECT_EQ(rows.size(), quadruples);
        EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end(), [](const LatticeRow& x, const LatticeRow& y) {
            return static_cast<int>(x.shape) < static_cast<int>(y.shape);
        }));
    }
}
