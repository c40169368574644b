#pragma once

// Searches over the tiling parameters: where the code-rate bound is
// smallest for a given p, and how far q can grow before the bound stops
// guaranteeing error correction. Also the data behind the reference
// tables and figures.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "holocode/geometry.hpp"
#include "holocode/inflation.hpp"
#include "holocode/schlafli.hpp"

namespace holocode {

using BigInteger = boost::multiprecision::cpp_int;
using WideReal = boost::multiprecision::cpp_bin_float_50;

/// Least q for which {p,q} is hyperbolic: 1 + floor(2 + 4/(p-2)).
inline std::int64_t q_min(std::int64_t p) {
    if (p < 3) throw std::invalid_argument("q_min: p must be >= 3");
    return 3 + 4 / (p - 2);
}

/// Values of the bound this close to 1 are re-evaluated in 50 digits.
inline constexpr double threshold_guard = 1e-9;

/// Whether bound(p, q) < 1, exact enough to split adjacent q anywhere below
/// ~1e40. Double precision is trusted only when q is exactly representable
/// and the value is not near the threshold.
inline bool bound_below_one(std::int64_t p, const BigInteger& q) {
    static const BigInteger exact_limit = BigInteger(1) << 52;
    if (q <= exact_limit) {
        const double b = bound_at(static_cast<double>(p), static_cast<double>(q));
        if (std::abs(b - 1.0) > threshold_guard) return b < 1.0;
    }
    return bound_at(WideReal(p), WideReal(q)) < WideReal(1);
}

struct OptimalQ {
    std::int64_t q;
    double bound;
};

/// Consecutive non-improving q that end the q_opt scan.
inline constexpr int unimodality_margin = 8;

/// q minimising bound(p, q); ties keep the smaller q.
inline OptimalQ q_opt(std::int64_t p) {
    std::int64_t q = q_min(p);
    OptimalQ best{q, code_rate_bound(SchlafliPair(p, q))};
    for (int misses = 0; misses < unimodality_margin;) {
        ++q;
        const double b = code_rate_bound(SchlafliPair(p, q));
        if (b < best.bound) {
            best = {q, b};
            misses = 0;
        } else {
            ++misses;
        }
    }
    return best;
}

/// Largest q with bound(p, q) < 1, or nothing when even the best bound is
/// at least 1 (p = 3). The bound increases in q past q_opt, so exponential
/// bracketing followed by bisection finds the crossing.
inline std::optional<BigInteger> q_max(std::int64_t p) {
    const OptimalQ opt = q_opt(p);
    if (!(opt.bound < 1.0)) return std::nullopt;

    BigInteger lo = opt.q;
    BigInteger hi = 2 * lo;
    while (bound_below_one(p, hi)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const BigInteger mid = (lo + hi) / 2;
        (bound_below_one(p, mid) ? lo : hi) = mid;
    }
    if (!bound_below_one(p, lo) || bound_below_one(p, lo + 1)) {
        throw std::logic_error("q_max: bracket failed validation");
    }
    return lo;
}

/// Large-p estimate pi cosh(pi (p-2)/2) / cos(pi/p) of q_max. For p = 4 it
/// gives about 51.5 while the reference value is 45; the formula value
/// is reported as is.
inline double q1_estimate(std::int64_t p) {
    if (p < 4) throw std::invalid_argument("q1_estimate: needs p >= 4");
    const double pi = pi_v<double>();
    const auto pd = static_cast<double>(p);
    return pi * std::cosh(pi * (pd - 2.0) / 2.0) / std::cos(pi / pd);
}

struct RangeReport {
    std::int64_t p;
    std::int64_t q_min;
    std::optional<BigInteger> q_max;
    std::int64_t q_opt;
    double best_bound;
    std::optional<double> q1_estimate;  // defined for p >= 4
};

inline RangeReport range_report(std::int64_t p) {
    const OptimalQ opt = q_opt(p);
    RangeReport r{p, q_min(p), q_max(p), opt.q, opt.bound, std::nullopt};
    if (p >= 4) r.q1_estimate = q1_estimate(p);
    return r;
}

struct CodeRateRow {
    SchlafliPair pq;
    double code_rate;
    double bound;
    double ratio;
};

inline CodeRateRow code_rate_row(const SchlafliPair& pq) {
    const double rate = code_rate(pq);
    const double bound = code_rate_bound(pq);
    return {pq, rate, bound, rate / bound};
}

/// The four slowest-growing tilings of each shape: triangle, square,
/// pentagon, and heptagon-with-three-around-a-vertex.
inline std::vector<CodeRateRow> table_code_rates() {
    return {code_rate_row(SchlafliPair(3, 7)), code_rate_row(SchlafliPair(4, 5)),
            code_rate_row(SchlafliPair(5, 4)), code_rate_row(SchlafliPair(7, 3))};
}

enum class FigureMode { rate, ratio };

struct FigureRow {
    Family family;
    std::int64_t p;
    std::int64_t q;
    double x;  // slowest growth in the family over this growth rate
    double y;  // code rate, or code rate over bound
};

/// Series for one family, free parameter running from its first hyperbolic
/// value up to `limit` inclusive.
inline std::vector<FigureRow> figure_series(FigureMode mode, const Family& family, std::int64_t limit) {
    const std::int64_t first = family.first_member();
    if (limit < first) throw std::invalid_argument("figure_series: family has no member below the limit");
    const double slowest = growth_rate_lower_bound(family);
    std::vector<FigureRow> rows;
    for (std::int64_t v = first; v <= limit; ++v) {
        const SchlafliPair pq = family.member(v);
        const double rate = code_rate(pq);
        const double y = mode == FigureMode::rate ? rate : rate / code_rate_bound(pq);
        rows.push_back({family, pq.p(), pq.q(), slowest / growth_rate(pq), y});
    }
    return rows;
}

struct RatioScan {
    SchlafliPair argmax{3, 7};
    double max_ratio = 0.0;
    std::size_t pairs_scanned = 0;
    bool all_below_one = true;
    double asymptote = 0.0;      // pi / (3 ln 3)
    double asymptotic_gap = 0.0; // |ratio(p_limit, 3) - asymptote|
};

/// Largest code_rate / bound over p <= p_limit with q_min(p) <= q <=
/// min(q_opt(p), q_limit). Because the code rate falls with q, larger q
/// cannot beat the ratio at q_opt.
inline RatioScan ratio_supremum_scan(std::int64_t p_limit, std::int64_t q_limit) {
    if (p_limit < 7 || q_limit < 7) throw std::invalid_argument("ratio_supremum_scan: limits must be >= 7");
    RatioScan scan;
    for (std::int64_t p = 3; p <= p_limit; ++p) {
        const std::int64_t top = std::min(q_opt(p).q, q_limit);
        for (std::int64_t q = q_min(p); q <= top; ++q) {
            const CodeRateRow row = code_rate_row(SchlafliPair(p, q));
            ++scan.pairs_scanned;
            scan.all_below_one = scan.all_below_one && row.ratio < 1.0;
            if (row.ratio > scan.max_ratio) {
                scan.max_ratio = row.ratio;
                scan.argmax = row.pq;
            }
        }
    }
    scan.asymptote = pi_v<double>() / (3.0 * std::log(3.0));
    scan.asymptotic_gap = std::abs(code_rate_row(SchlafliPair(p_limit, 3)).ratio - scan.asymptote);
    return scan;
}

}  // namespace holocode
