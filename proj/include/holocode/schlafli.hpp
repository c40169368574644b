#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace holocode {

enum class Curvature { spherical, euclidean, hyperbolic };

constexpr std::string_view to_string(Curvature c) {
    switch (c) {
        case Curvature::spherical: return "spherical";
        case Curvature::euclidean: return "euclidean";
        case Curvature::hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

/// Raised when a metric operation receives a tiling that does not live in
/// the hyperbolic plane.
class NotHyperbolic : public std::domain_error {
public:
    NotHyperbolic(std::int64_t p, std::int64_t q, Curvature c)
        : std::domain_error("{" + std::to_string(p) + "," + std::to_string(q) + "} is " +
                            std::string(to_string(c)) + ", not hyperbolic"),
          curvature_(c) {}

    Curvature curvature() const noexcept { return curvature_; }

private:
    Curvature curvature_;
};

/// Regular tessellation {p,q}: p-sided tiles, q of them around every vertex.
///
/// Any pair with p,q >= 3 is representable, including euclidean and
/// spherical ones, so that range scans can probe the 1/p + 1/q = 1/2 edge.
/// The upper cap keeps products like (p-2)(q-2) inside 64 bits.
class SchlafliPair {
public:
    static constexpr std::int64_t max_value = std::int64_t{1} << 31;

    constexpr SchlafliPair(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
        if (p < 3 || q < 3) {
            throw std::invalid_argument("invalid Schlafli symbol {" + std::to_string(p) + "," +
                                        std::to_string(q) + "}: both entries must be >= 3");
        }
        if (p > max_value || q > max_value) {
            throw std::invalid_argument("Schlafli entries above 2^31 are not supported");
        }
    }

    constexpr std::int64_t p() const noexcept { return p_; }
    constexpr std::int64_t q() const noexcept { return q_; }

    constexpr SchlafliPair dual() const { return SchlafliPair(q_, p_); }

    // Sign of 1/2 - 1/p - 1/q, scaled by 2pq so it stays exact.
    constexpr Curvature curvature() const noexcept {
        const std::int64_t excess = p_ * q_ - 2 * p_ - 2 * q_;
        if (excess > 0) return Curvature::hyperbolic;
        if (excess == 0) return Curvature::euclidean;
        return Curvature::spherical;
    }

    constexpr bool hyperbolic() const noexcept { return curvature() == Curvature::hyperbolic; }

    void require_hyperbolic() const {
        if (!hyperbolic()) throw NotHyperbolic(p_, q_, curvature());
    }

    friend constexpr bool operator==(const SchlafliPair&, const SchlafliPair&) = default;

private:
    std::int64_t p_;
    std::int64_t q_;
};

inline std::string to_string(const SchlafliPair& pq) {
    return "{" + std::to_string(pq.p()) + "," + std::to_string(pq.q()) + "}";
}

constexpr Curvature classify(const SchlafliPair& pq) noexcept { return pq.curvature(); }

}  // namespace holocode
