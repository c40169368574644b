#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "holocode/geometry.hpp"
#include "holocode/schlafli.hpp"

using namespace holocode;

namespace {

// Side of the central triangle (centre, two adjacent corners) from the
// hyperbolic law of cosines for angles: corner angles pi/q, centre 2 pi/p.
long double side_by_angle_law(int p, int q) {
    const long double pi = std::numbers::pi_v<long double>;
    const long double a = pi / q;
    const long double c = 2 * pi / p;
    return std::acosh((std::cos(c) + std::cos(a) * std::cos(a)) / (std::sin(a) * std::sin(a)));
}

// Gauss-Bonnet: angle defect of a p-gon with interior angles 2 pi / q.
long double area_by_angle_defect(int p, int q) {
    const long double pi = std::numbers::pi_v<long double>;
    return (p - 2) * pi - p * (2 * pi / q);
}

}  // namespace

TEST(Schlafli, ClassifiesCurvature) {
    EXPECT_EQ(SchlafliPair(5, 4).curvature(), Curvature::hyperbolic);
    EXPECT_EQ(SchlafliPair(4, 4).curvature(), Curvature::euclidean);
    EXPECT_EQ(SchlafliPair(6, 3).curvature(), Curvature::euclidean);
    EXPECT_EQ(SchlafliPair(3, 6).curvature(), Curvature::euclidean);
    EXPECT_EQ(SchlafliPair(3, 5).curvature(), Curvature::spherical);
    EXPECT_EQ(SchlafliPair(3, 7).curvature(), Curvature::hyperbolic);
    EXPECT_EQ(SchlafliPair(7, 3).curvature(), Curvature::hyperbolic);
    EXPECT_EQ(classify(SchlafliPair(1000000, 3)), Curvature::hyperbolic);
}

TEST(Schlafli, CurvatureAgreesWithReciprocalSum) {
    for (int p = 3; p <= 60; ++p) {
        for (int q = 3; q <= 60; ++q) {
            const double s = 1.0 / p + 1.0 / q;
            const Curvature c = SchlafliPair(p, q).curvature();
            if (std::abs(s - 0.5) < 1e-12) {
                EXPECT_EQ(c, Curvature::euclidean) << p << "," << q;
            } else {
                EXPECT_EQ(c, s < 0.5 ? Curvature::hyperbolic : Curvature::spherical) << p << "," << q;
            }
        }
    }
}

TEST(Schlafli, RejectsDegenerateEntries) {
    EXPECT_THROW(SchlafliPair(2, 7), std::invalid_argument);
    EXPECT_THROW(SchlafliPair(7, 2), std::invalid_argument);
    EXPECT_THROW(SchlafliPair(-5, 4), std::invalid_argument);
}

TEST(Schlafli, NonHyperbolicErrorNamesCurvature) {
    try {
        SchlafliPair(4, 4).require_hyperbolic();
        FAIL() << "expected NotHyperbolic";
    } catch (const NotHyperbolic& e) {
        EXPECT_EQ(e.curvature(), Curvature::euclidean);
        EXPECT_NE(std::string(e.what()).find("euclidean"), std::string::npos);
    }
    EXPECT_THROW(tile_geometry(SchlafliPair(3, 5)), NotHyperbolic);
}

TEST(Schlafli, DualSwapsEntries) {
    const SchlafliPair pq(5, 4);
    EXPECT_EQ(pq.dual(), SchlafliPair(4, 5));
    EXPECT_EQ(to_string(pq), "{5,4}");
}

TEST(StableAcosh, MatchesLibraryAndLargeArgumentForm) {
    for (double x : {1.0, 1.0 + 1e-12, 1.5, 2.0, 10.0, 1e6, 1e7}) {
        EXPECT_NEAR(stable_acosh(x), std::acosh(x), 1e-12 * std::max(1.0, std::acosh(x))) << x;
    }
    for (double x : {1e9, 1e15, 1e300}) {
        EXPECT_DOUBLE_EQ(stable_acosh(x), std::log(2.0 * x)) << x;
    }
    EXPECT_EQ(stable_acosh(1.0), 0.0);
    EXPECT_THROW(stable_acosh(0.999), std::domain_error);
    EXPECT_NEAR(stable_acosh(std::numeric_limits<double>::max()), 710.4758600739439, 1e-9);
}

TEST(TileGeometry, SideAndAreaMatchIndependentFormulas) {
    for (int p = 3; p <= 30; ++p) {
        for (int q = 3; q <= 30; ++q) {
            const SchlafliPair pq(p, q);
            if (!pq.hyperbolic()) continue;
            const auto g = tile_geometry(pq);
            EXPECT_NEAR(g.side_length, static_cast<double>(side_by_angle_law(p, q)), 1e-10) << p << "," << q;
            EXPECT_NEAR(g.area, static_cast<double>(area_by_angle_defect(p, q)), 1e-12) << p << "," << q;
            EXPECT_DOUBLE_EQ(g.bound, g.side_length / g.area);
        }
    }
}

TEST(TileGeometry, SquareFivesAroundVertex) {
    const auto g = tile_geometry(SchlafliPair(4, 5));
    EXPECT_NEAR(g.side_length, static_cast<double>(side_by_angle_law(4, 5)), 1e-12);
    EXPECT_NEAR(g.side_length, 1.2537393, 1e-7);
    EXPECT_NEAR(g.area, 2.0 * std::numbers::pi / 5.0, 1e-14);
}

TEST(TileGeometry, ReferenceBounds) {
    EXPECT_NEAR(code_rate_bound(SchlafliPair(3, 7)), 2.430, 5e-4);
    EXPECT_NEAR(code_rate_bound(SchlafliPair(4, 5)), 0.998, 5e-4);
    EXPECT_NEAR(code_rate_bound(SchlafliPair(5, 4)), 0.676, 5e-4);
    EXPECT_NEAR(code_rate_bound(SchlafliPair(7, 3)), 0.541, 5e-4);
    EXPECT_NEAR(code_rate_bound(SchlafliPair(12, 4)), 0.132, 5e-4);
    EXPECT_NEAR(code_rate_bound(SchlafliPair(30, 4)), 0.043, 5e-4);
}

TEST(TileGeometry, BoundDecreasesInPForFixedQ) {
    for (int q = 3; q <= 10; ++q) {
        double prev = std::numeric_limits<double>::infinity();
        for (int p = 3; p <= 200; ++p) {
            const SchlafliPair pq(p, q);
            if (!pq.hyperbolic()) continue;
            const double b = code_rate_bound(pq);
            EXPECT_LT(b, prev) << p << "," << q;
            prev = b;
        }
    }
}

TEST(TileGeometry, HighPrecisionAgreesWithDouble) {
    for (auto [p, q] : {std::pair{3, 7}, {5, 4}, {7, 4469}, {30, 1000000}}) {
        const double d = bound_at(double(p), double(q));
        const long double l = bound_at<long double>(p, q);
        EXPECT_NEAR(d, static_cast<double>(l), 1e-13 * d) << p << "," << q;
    }
    EXPECT_THROW(bound_at(4.0, 4.0), std::domain_error);
}

TEST(Isoperimetric, CircleSaturates) {
    for (double s : {0.1, 1.0, 5.0, 10.0}) {
        const Circle c = circle_geometry(s);
        const double l2 = c.circumference * c.circumference;
        const double gap = l2 - c.area * (4.0 * std::numbers::pi + c.area);
        EXPECT_LE(std::abs(gap), 1e-9 * std::max(1.0, l2)) << s;
    }
    EXPECT_EQ(circle_geometry(0.0).area, 0.0);
    EXPECT_THROW(circle_geometry(-1.0), std::invalid_argument);
}

TEST(Isoperimetric, EuclideanCircleHoldsWithEquality) {
    const double pi = std::numbers::pi;
    EXPECT_TRUE(isoperimetric_holds(pi, 2.0 * pi, 0));
    EXPECT_FALSE(isoperimetric_holds(pi, 2.0 * pi - 1e-6, 0));
}

TEST(Isoperimetric, CurvatureSignConvention) {
    // A unit-circumference-squared budget admits more area with negative k.
    const double area = 1.0;
    const double length = std::sqrt(4.0 * std::numbers::pi);
    EXPECT_TRUE(isoperimetric_holds(area, length, 0));
    EXPECT_FALSE(isoperimetric_holds(area, length, 1));
    EXPECT_TRUE(isoperimetric_holds(area, length, -1));
}

TEST(Isoperimetric, RejectsBadInputs) {
    EXPECT_THROW(isoperimetric_holds(-1.0, 1.0, 1), std::invalid_argument);
    EXPECT_THROW(isoperimetric_holds(1.0, -1.0, 1), std::invalid_argument);
    EXPECT_THROW(isoperimetric_holds(1.0, 1.0, 2), std::invalid_argument);
}

TEST(FiniteLayer, SinglePentagon) {
    // a = pi/2, so (1/5) sqrt(1 + 4 pi / (pi/2)) = 3/5.
    const double lhs = finite_layer_lhs(SchlafliPair(5, 4), 1, 5);
    EXPECT_NEAR(lhs, 0.6, 1e-12);
    EXPECT_LE(lhs, code_rate_bound(SchlafliPair(5, 4)));
}

TEST(FiniteLayer, SingleTriangle) {
    const SchlafliPair pq(3, 7);
    const double a = static_cast<double>(area_by_angle_defect(3, 7));
    EXPECT_NEAR(finite_layer_lhs(pq, 1, 3), std::sqrt(1.0 + 4.0 * std::numbers::pi / a) / 3.0, 1e-12);
    EXPECT_NEAR(finite_layer_lhs(pq, 1, 3), 1.79505, 1e-5);
}

TEST(FiniteLayer, ConvergesToRatioForLargePatches) {
    const SchlafliPair pq(5, 4);
    EXPECT_NEAR(finite_layer_lhs(pq, 1000000000LL, 2000000000LL), 0.5, 1e-8);
    EXPECT_THROW(finite_layer_lhs(pq, 0, 5), std::invalid_argument);
    EXPECT_THROW(finite_layer_lhs(pq, 1, 0), std::invalid_argument);
}
