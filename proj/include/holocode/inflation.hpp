#pragma once

// Growth algebra of tile completion: after a finite transient every layer
// consists of two cell types (tiles that differ in their number of dangling
// edges), and the per-type counts of consecutive layers are related by a
// 2x2 integer matrix of unit determinant.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "holocode/geometry.hpp"
#include "holocode/schlafli.hpp"

namespace holocode {

/// Which closed form applies; also fixes the ordering of the cell-type basis.
enum class GrowthFamily {
    generic,        // p > 3, q > 3: types carry (p-3, p-2) dangling edges
    triangle,       // p = 3, q > 6: types carry (0, 1)
    dual_triangle,  // q = 3, p > 6: types carry (p-4, p-3)
};

constexpr std::string_view to_string(GrowthFamily f) {
    switch (f) {
        case GrowthFamily::generic: return "generic";
        case GrowthFamily::triangle: return "triangle";
        case GrowthFamily::dual_triangle: return "dual_triangle";
    }
    return "unknown";
}

using IntVector2 = std::array<std::int64_t, 2>;
using RealVector2 = std::array<double, 2>;

struct GrowthMatrix {
    // Row-major; entries may be negative (the triangle family has a -1).
    std::array<IntVector2, 2> entries;
    GrowthFamily family;

    std::int64_t determinant() const { return entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0]; }
    std::int64_t trace() const { return entries[0][0] + entries[1][1]; }

    GrowthMatrix transposed() const {
        return {{{{entries[0][0], entries[1][0]}, {entries[0][1], entries[1][1]}}}, family};
    }

    /// M * v for any ring-like element type (int64, cpp_int, double).
    template <class T>
    std::array<T, 2> apply(const std::array<T, 2>& v) const {
        return {T(entries[0][0]) * v[0] + T(entries[0][1]) * v[1],
                T(entries[1][0]) * v[0] + T(entries[1][1]) * v[1]};
    }

    friend bool operator==(const GrowthMatrix&, const GrowthMatrix&) = default;
};

/// gamma = trace / 2, kept exact: half-integers appear when (p-2)(q-2) is odd.
struct HalfTrace {
    std::int64_t twice;

    double value() const { return static_cast<double>(twice) / 2.0; }
};

inline GrowthFamily growth_family(const SchlafliPair& pq) {
    pq.require_hyperbolic();
    if (pq.p() > 3 && pq.q() > 3) return GrowthFamily::generic;
    if (pq.p() == 3) return GrowthFamily::triangle;
    return GrowthFamily::dual_triangle;
}

inline GrowthMatrix growth_matrix(const SchlafliPair& pq) {
    const std::int64_t p = pq.p();
    const std::int64_t q = pq.q();
    switch (growth_family(pq)) {
        case GrowthFamily::generic:
            return {{{{p - 3, (p - 3) * (q - 3) - 1}, {p - 2, (p - 2) * (q - 3) - 1}}}, GrowthFamily::generic};
        case GrowthFamily::triangle:
            return {{{{0, 1}, {-1, q - 4}}}, GrowthFamily::triangle};
        case GrowthFamily::dual_triangle:
            return {{{{1, p - 6}, {1, p - 5}}}, GrowthFamily::dual_triangle};
    }
    throw std::logic_error("growth_matrix: no family matched a hyperbolic pair");
}

inline HalfTrace half_trace(const SchlafliPair& pq) {
    pq.require_hyperbolic();
    return {(pq.p() - 2) * (pq.q() - 2) - 2};
}

/// Largest eigenvalue gamma + sqrt(gamma^2 - 1), written in terms of the
/// integer trace T as (T + sqrt((T-2)(T+2))) / 2.
inline double growth_rate(const SchlafliPair& pq) {
    const auto t = static_cast<double>(half_trace(pq).twice);
    return 0.5 * (t + std::sqrt((t - 2.0) * (t + 2.0)));
}

/// The growth rate is irrational iff T^2 - 4 is not a perfect square.
/// For T >= 3 it lies strictly between (T-1)^2 and T^2, so this always
/// holds for hyperbolic pairs; the check is kept exact anyway.
inline bool growth_rate_is_irrational(const SchlafliPair& pq) {
    const auto t = static_cast<__int128>(half_trace(pq).twice);
    const __int128 disc = t * t - 4;
    if (disc < 0) return false;
    auto root = static_cast<__int128>(std::sqrt(static_cast<long double>(disc)));
    while (root * root > disc) --root;
    while ((root + 1) * (root + 1) <= disc) ++root;
    return root * root != disc;
}

inline IntVector2 tile_vector(const SchlafliPair&) { return {1, 1}; }

inline IntVector2 edge_vector(const SchlafliPair& pq) {
    const std::int64_t p = pq.p();
    switch (growth_family(pq)) {
        case GrowthFamily::generic: return {p - 3, p - 2};
        case GrowthFamily::triangle: return {0, 1};
        case GrowthFamily::dual_triangle: return {p - 4, p - 3};
    }
    throw std::logic_error("edge_vector: no family matched a hyperbolic pair");
}

/// Perron eigenvector of growth_matrix(pq), unnormalised; entrywise positive.
inline RealVector2 growth_vector(const SchlafliPair& pq) {
    const double lambda = growth_rate(pq);
    const auto p = static_cast<double>(pq.p());
    const auto q = static_cast<double>(pq.q());
    switch (growth_family(pq)) {
        case GrowthFamily::generic: return {(p - 3.0) * (q - 3.0) - 1.0, lambda - (p - 3.0)};
        case GrowthFamily::triangle: return {1.0, lambda};
        case GrowthFamily::dual_triangle: return {p - 6.0, lambda - 1.0};
    }
    throw std::logic_error("growth_vector: no family matched a hyperbolic pair");
}

struct GrowthSystem {
    SchlafliPair pq;
    GrowthMatrix matrix;
    IntVector2 tile_vector;
    IntVector2 edge_vector;
    HalfTrace gamma;
    double growth_rate;
    RealVector2 growth_vector;
};

inline GrowthSystem growth_system(const SchlafliPair& pq) {
    return {pq,
            growth_matrix(pq),
            tile_vector(pq),
            edge_vector(pq),
            half_trace(pq),
            growth_rate(pq),
            growth_vector(pq)};
}

/// Limit of N_bulk / N_boundary: [lambda / (lambda - 1)] (u.t) / (u.e).
/// One evaluation path for every family.
inline double code_rate(const GrowthSystem& s) {
    const double lambda = s.growth_rate;
    const auto& u = s.growth_vector;
    const double ut = u[0] * static_cast<double>(s.tile_vector[0]) + u[1] * static_cast<double>(s.tile_vector[1]);
    const double ue = u[0] * static_cast<double>(s.edge_vector[0]) + u[1] * static_cast<double>(s.edge_vector[1]);
    return lambda / (lambda - 1.0) * ut / ue;
}

inline double code_rate(const SchlafliPair& pq) { return code_rate(growth_system(pq)); }

/// Triangle-code shortcut (lambda + 1) / (lambda - 1). Kept as a separate
/// route to cross-check code_rate on p = 3.
inline double triangle_code_rate(std::int64_t q) {
    if (q < 7) throw std::invalid_argument("triangle_code_rate: needs q >= 7");
    const double lambda = growth_rate(SchlafliPair(3, q));
    return (lambda + 1.0) / (lambda - 1.0);
}

/// A family of tilings with one Schlafli entry held fixed.
struct Family {
    enum class Axis { fixed_p, fixed_q };
    Axis axis;
    std::int64_t value;

    static Family fixed_p(std::int64_t p) { return {Axis::fixed_p, p}; }
    static Family fixed_q(std::int64_t q) { return {Axis::fixed_q, q}; }

    /// The pair obtained by setting the free entry to `other`.
    SchlafliPair member(std::int64_t other) const {
        return axis == Axis::fixed_p ? SchlafliPair(value, other) : SchlafliPair(other, value);
    }

    /// Smallest free entry giving a hyperbolic tiling.
    std::int64_t first_member() const {
        if (value < 3) throw std::invalid_argument("family value must be >= 3");
        return 3 + 4 / (value - 2);
    }

    friend bool operator==(const Family&, const Family&) = default;
};

/// Slowest growth rate within a family, used to normalise figure x-axes.
inline double growth_rate_lower_bound(const Family& family) {
    const std::int64_t v = family.value;
    if (v < 3) throw std::invalid_argument("growth_rate_lower_bound: family value must be >= 3");
    switch (v) {
        case 3: return growth_rate(SchlafliPair(3, 7));
        case 4: return growth_rate(SchlafliPair(4, 5));
        case 5: return growth_rate(SchlafliPair(5, 4));
        case 6: return growth_rate(SchlafliPair(6, 4));
        default:
            return family.axis == Family::Axis::fixed_p ? growth_rate(SchlafliPair(v, 3))
                                                         : growth_rate(SchlafliPair(3, v));
    }
}

}  // namespace holocode
