#pragma once

// Closed-form geometry of regular tiles in the hyperbolic plane of unit
// curvature radius: side length, area, the code-rate bound, and the
// isoperimetric machinery the bound rests on.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "holocode/schlafli.hpp"

namespace holocode {

template <class Real>
inline Real pi_v() {
    return boost::math::constants::pi<Real>();
}

/// arccosh(x) for x >= 1 without forming x*x.
///
/// Beyond the cutover the sqrt term is indistinguishable from x at the
/// working precision, and ln(2x) is used instead. For double the cutover
/// is 1e8; wider types cut over at 1/sqrt(epsilon).
template <class Real>
Real stable_acosh(const Real& x) {
    using std::log;
    using std::sqrt;
    if (!(x >= Real(1))) {
        throw std::domain_error("arccosh argument below 1");
    }
    const Real cutover = std::numeric_limits<Real>::digits <= std::numeric_limits<double>::digits
                             ? Real(1e8)
                             : Real(1) / sqrt(std::numeric_limits<Real>::epsilon());
    if (x > cutover) return log(x) + log(Real(2));  // 2x could overflow
    return log(x + sqrt((x - Real(1)) * (x + Real(1))));
}

template <class Real = double>
struct TileGeometry {
    Real side_length;
    Real area;
    Real bound;
};

/// Side length of the regular p-gon tile of the {p,q} tiling. Arguments are
/// reals so callers can evaluate at q beyond 64 bits.
template <class Real>
Real side_length_at(const Real& p, const Real& q) {
    using std::cos;
    using std::sin;
    const Real pi = pi_v<Real>();
    return Real(2) * stable_acosh(Real(cos(pi / p) / sin(pi / q)));
}

template <class Real>
Real area_at(const Real& p, const Real& q) {
    // 2 pi p (1/2 - 1/p - 1/q)
    return pi_v<Real>() * (p - Real(2) - Real(2) * p / q);
}

/// The code-rate bound ell/a evaluated at real-valued (p, q).
template <class Real>
Real bound_at(const Real& p, const Real& q) {
    const Real a = area_at(p, q);
    if (!(a > Real(0))) throw std::domain_error("tile area is not positive");
    return side_length_at(p, q) / a;
}

template <class Real = double>
TileGeometry<Real> tile_geometry(const SchlafliPair& pq) {
    pq.require_hyperbolic();
    const Real p(pq.p());
    const Real q(pq.q());
    TileGeometry<Real> g;
    g.side_length = side_length_at(p, q);
    g.area = area_at(p, q);
    g.bound = g.side_length / g.area;
    return g;
}

template <class Real = double>
Real code_rate_bound(const SchlafliPair& pq) {
    return tile_geometry<Real>(pq).bound;
}

/// Additive slack on the isoperimetric comparison; circles saturate it.
inline constexpr double isoperimetric_tolerance = 1e-9;

/// Checks A(4 pi + k A) <= L^2.
///
/// Sign convention: k = +1 hyperbolic, 0 euclidean, -1 elliptic. This is
/// opposite to the Gaussian-curvature sign most texts use.
inline bool isoperimetric_holds(double area, double length, int k) {
    if (area < 0.0 || length < 0.0) {
        throw std::invalid_argument("isoperimetric_holds: area and length must be non-negative");
    }
    if (k < -1 || k > 1) {
        throw std::invalid_argument("isoperimetric_holds: curvature sign must be -1, 0 or +1");
    }
    const double lhs = area * (4.0 * pi_v<double>() + k * area);
    return lhs <= length * length + isoperimetric_tolerance;
}

struct Circle {
    double circumference;
    double area;
};

/// Geodesic circle of radius s in the hyperbolic plane.
inline Circle circle_geometry(double radius) {
    if (radius < 0.0) throw std::invalid_argument("circle_geometry: negative radius");
    const double pi = pi_v<double>();
    const double sh = std::sinh(radius / 2.0);
    return {2.0 * pi * std::sinh(radius), 4.0 * pi * sh * sh};
}

/// Left side of the finite-layer inequality
///   (N_bulk / N_boundary) sqrt(1 + 4 pi / (N_bulk a_{p,q})) <= ell/a.
/// Count may be any integer-like type convertible to double.
template <class Count>
double finite_layer_lhs(const SchlafliPair& pq, const Count& n_bulk, const Count& n_boundary) {
    const auto bulk = static_cast<double>(n_bulk);
    const auto boundary = static_cast<double>(n_boundary);
    if (!(bulk >= 1.0) || !(boundary >= 1.0)) {
        throw std::invalid_argument("finite_layer_lhs: counts must be at least one");
    }
    const double a = tile_geometry(pq).area;
    return bulk / boundary * std::sqrt(1.0 + 4.0 * pi_v<double>() / (bulk * a));
}

}  // namespace holocode
