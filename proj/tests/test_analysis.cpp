#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "holocode/analysis.hpp"

using namespace holocode;

namespace {

// Brute-force argmin of the bound over q in [q_min, 400].
std::int64_t brute_q_opt(std::int64_t p) {
    std::int64_t best = q_min(p);
    for (std::int64_t q = best + 1; q <= 400; ++q) {
        if (code_rate_bound(SchlafliPair(p, q)) < code_rate_bound(SchlafliPair(p, best))) best = q;
    }
    return best;
}

// Linear search for the last q with bound < 1, in long double.
std::int64_t linear_q_max(std::int64_t p) {
    std::int64_t q = q_opt(p).q;
    while (bound_at<long double>(p, q + 1) < 1.0L) ++q;
    return q;
}

}  // namespace

TEST(QMin, Values) {
    EXPECT_EQ(q_min(3), 7);
    EXPECT_EQ(q_min(4), 5);
    EXPECT_EQ(q_min(5), 4);
    EXPECT_EQ(q_min(6), 4);
    EXPECT_EQ(q_min(7), 3);
    EXPECT_EQ(q_min(1000), 3);
    EXPECT_THROW(q_min(2), std::invalid_argument);
}

TEST(QMin, IsLeastHyperbolicQ) {
    for (std::int64_t p = 3; p <= 100; ++p) {
        EXPECT_TRUE(SchlafliPair(p, q_min(p)).hyperbolic());
        if (q_min(p) > 3) {
            EXPECT_FALSE(SchlafliPair(p, q_min(p) - 1).hyperbolic());
        }
    }
}

TEST(QOpt, ReferenceValues) {
    const std::int64_t q[] = {14, 9, 7, 6, 6, 5, 5, 5};
    const double b[] = {1.614, 0.776, 0.500, 0.365, 0.285, 0.233, 0.196, 0.169};
    for (std::int64_t p = 3; p <= 10; ++p) {
        const OptimalQ opt = q_opt(p);
        EXPECT_EQ(opt.q, q[p - 3]) << p;
        EXPECT_NEAR(opt.bound, b[p - 3], 5e-4) << p;
    }
}

TEST(QOpt, AgreesWithBruteForce) {
    for (std::int64_t p = 3; p <= 60; ++p) EXPECT_EQ(q_opt(p).q, brute_q_opt(p)) << p;
}

TEST(QOpt, PiecewiseStructure) {
    for (std::int64_t p = 8; p <= 11; ++p) EXPECT_EQ(q_opt(p).q, 5) << p;
    for (std::int64_t p = 12; p <= 30; ++p) EXPECT_EQ(q_opt(p).q, 4) << p;
    for (std::int64_t p = 31; p <= 100; ++p) EXPECT_EQ(q_opt(p).q, 3) << p;
    EXPECT_NEAR(q_opt(12).bound, 0.132, 5e-4);
}

TEST(QOpt, BestBoundBelowOneForPAboveThree) {
    EXPECT_GT(q_opt(3).bound, 1.0);
    for (std::int64_t p = 4; p <= 100; ++p) EXPECT_LT(q_opt(p).bound, 1.0) << p;
}

TEST(QMax, SmallPMatchesLinearSearch) {
    for (std::int64_t p = 4; p <= 7; ++p) {
        const auto qm = q_max(p);
        ASSERT_TRUE(qm.has_value());
        EXPECT_EQ(*qm, linear_q_max(p)) << p;
    }
    EXPECT_EQ(*q_max(4), 36);
    EXPECT_EQ(*q_max(5), 199);
    EXPECT_EQ(*q_max(6), 952);
}

TEST(QMax, HeptagonThresholdInHighPrecision) {
    // bound(7, 4469) sits about 1e-6 below one; bound(7, 4470) is above.
    using boost::multiprecision::cpp_bin_float_100;
    const cpp_bin_float_100 below = bound_at(cpp_bin_float_100(7), cpp_bin_float_100(4469));
    const cpp_bin_float_100 above = bound_at(cpp_bin_float_100(7), cpp_bin_float_100(4470));
    EXPECT_LT(below, 1);
    EXPECT_GT(1 - below, cpp_bin_float_100("1e-6"));
    EXPECT_GE(above, 1);
    EXPECT_EQ(*q_max(7), 4469);
}

TEST(QMax, NoneForTriangles) { EXPECT_FALSE(q_max(3).has_value()); }

TEST(QMax, BeyondSixtyFourBits) {
    const auto qm = q_max(30);
    ASSERT_TRUE(qm.has_value());
    EXPECT_GT(*qm, BigInteger(std::numeric_limits<std::uint64_t>::max()));
    EXPECT_TRUE(bound_below_one(30, *qm));
    EXPECT_FALSE(bound_below_one(30, *qm + 1));
    // Same crossing located with 100-digit arithmetic.
    using boost::multiprecision::cpp_bin_float_100;
    const cpp_bin_float_100 q(*qm);
    EXPECT_LT(bound_at(cpp_bin_float_100(30), q), 1);
    EXPECT_GE(bound_at(cpp_bin_float_100(30), q + 1), 1);
}

TEST(RangeReport, InvariantsForModerateP) {
    for (std::int64_t p = 4; p <= 30; ++p) {
        const RangeReport r = range_report(p);
        EXPECT_EQ(r.q_min, 1 + static_cast<std::int64_t>(std::floor(2.0 + 4.0 / double(p - 2)))) << p;
        ASSERT_TRUE(r.q_max.has_value());
        EXPECT_TRUE(bound_below_one(p, *r.q_max)) << p;
        EXPECT_FALSE(bound_below_one(p, *r.q_max + 1)) << p;
        EXPECT_DOUBLE_EQ(r.best_bound, code_rate_bound(SchlafliPair(p, r.q_opt)));
        for (std::int64_t q = r.q_min; q <= r.q_opt + 20; ++q) EXPECT_LE(r.best_bound, code_rate_bound(SchlafliPair(p, q)));
        ASSERT_TRUE(r.q1_estimate.has_value());
    }
    EXPECT_FALSE(range_report(3).q1_estimate.has_value());
}

TEST(Q1Estimate, ReferenceValues) {
    EXPECT_NEAR(q1_estimate(5), 216, 1.0);
    EXPECT_NEAR(q1_estimate(6), 971, 1.0);
    EXPECT_NEAR(q1_estimate(7), 4491, 1.0);
    // The formula gives about 51.5 for squares; it is reported as computed.
    EXPECT_NEAR(q1_estimate(4), 51.5017, 1e-3);
    EXPECT_THROW(q1_estimate(3), std::invalid_argument);
}

TEST(Q1Estimate, TracksQMax) {
    for (std::int64_t p = 5; p <= 7; ++p) {
        const double r = static_cast<double>(*q_max(p)) / q1_estimate(p);
        EXPECT_GT(r, 0.79) << p;
        EXPECT_LT(r, 1.0) << p;
    }
    for (std::int64_t p = 10; p <= 20; ++p) {
        const double r = static_cast<double>(*q_max(p)) / q1_estimate(p);
        EXPECT_NEAR(r, 1.0, 1e-3) << p;
    }
}

TEST(BoundDecay, InverseInP) {
    const double limit = 3.0 * std::log(3.0) / std::numbers::pi;
    for (std::int64_t p : {10000, 100000, 1000000}) {
        EXPECT_NEAR(p * code_rate_bound(SchlafliPair(p, 3)), limit, 0.1 * limit) << p;
    }
}

TEST(CodeRateTable, Rows) {
    const auto rows = table_code_rates();
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].pq, SchlafliPair(3, 7));
    EXPECT_EQ(rows[3].pq, SchlafliPair(7, 3));
    const double rate[] = {2.236, 0.789, 0.519, 0.447};
    const double bound[] = {2.430, 0.998, 0.676, 0.541};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_NEAR(rows[i].code_rate, rate[i], 5e-4);
        EXPECT_NEAR(rows[i].bound, bound[i], 5e-4);
        EXPECT_NEAR(rows[i].ratio, rows[i].code_rate / rows[i].bound, 1e-12);
    }
    EXPECT_NEAR(rows[0].ratio, 0.920, 1e-3);
    EXPECT_NEAR(rows[1].ratio, 0.790, 1e-3);
    EXPECT_NEAR(rows[2].ratio, 0.768, 1e-3);
}

TEST(FigureSeries, TriangleFamily) {
    const auto rate = figure_series(FigureMode::rate, Family::fixed_p(3), 20);
    ASSERT_EQ(rate.size(), 14u);
    EXPECT_EQ(rate.front().q, 7);
    EXPECT_DOUBLE_EQ(rate.front().x, 1.0);
    EXPECT_NEAR(rate.front().y, 2.236, 5e-4);
    const auto ratio = figure_series(FigureMode::ratio, Family::fixed_p(3), 20);
    EXPECT_NEAR(ratio.front().y, 0.920, 1e-3);
    EXPECT_THROW(figure_series(FigureMode::rate, Family::fixed_p(3), 6), std::invalid_argument);
}

TEST(FigureSeries, AbscissaInUnitInterval) {
    for (int v = 3; v <= 7; ++v) {
        for (const Family f : {Family::fixed_p(v), Family::fixed_q(v)}) {
            const auto rows = figure_series(FigureMode::ratio, f, 40);
            std::int64_t prev = 0;
            for (const FigureRow& r : rows) {
                EXPECT_GT(r.x, 0.0);
                EXPECT_LE(r.x, 1.0);
                EXPECT_LT(r.y, 1.0);
                const std::int64_t free = f.axis == Family::Axis::fixed_p ? r.q : r.p;
                EXPECT_GT(free, prev);
                prev = free;
            }
        }
    }
}

TEST(RatioScan, TriangleCodeIsSupremum) {
    const RatioScan s = ratio_supremum_scan(30, 400);
    EXPECT_EQ(s.argmax, SchlafliPair(3, 7));
    EXPECT_NEAR(s.max_ratio, 0.920, 1e-3);
    EXPECT_TRUE(s.all_below_one);
    EXPECT_GT(s.pairs_scanned, 50u);
    EXPECT_NEAR(s.asymptote, 0.953, 5e-4);
    EXPECT_THROW(ratio_supremum_scan(6, 10), std::invalid_argument);
}

TEST(RatioScan, DualTriangleAsymptote) {
    const double asymptote = std::numbers::pi / (3.0 * std::log(3.0));
    EXPECT_LE(std::abs(code_rate_row(SchlafliPair(1000000, 3)).ratio - asymptote), 1e-3);
    const RatioScan s = ratio_supremum_scan(200, 7);
    EXPECT_NEAR(s.asymptotic_gap, std::abs(code_rate_row(SchlafliPair(200, 3)).ratio - asymptote), 1e-15);
}
