#pragma once

// Layer-by-layer tile-completion runs on a CombinatorialMap, with census
// extraction and the checks that tie measured counts back to the growth
// algebra and the isoperimetric bound.

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <locale>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "holocode/combinatorial_map.hpp"
#include "holocode/geometry.hpp"
#include "holocode/inflation.hpp"

namespace holocode {

using BigCount = boost::multiprecision::cpp_int;

struct LayerCensus {
    std::size_t layer = 0;
    BigCount new_tiles;
    std::map<std::int64_t, BigCount> class_counts;  // dangling edges -> tiles
    BigCount perimeter_edges;
    BigCount cumulative_tiles;

    BigCount count_of(std::int64_t dangling) const {
        const auto it = class_counts.find(dangling);
        return it == class_counts.end() ? BigCount(0) : it->second;
    }
};

/// Census of the newest layer of `map`.
inline LayerCensus latest_census(const CombinatorialMap& map) {
    LayerCensus c;
    c.layer = map.layer_count() - 1;
    const auto [first, last] = map.layer_tiles(c.layer);
    c.new_tiles = last - first;
    for (auto t = first; t < last; ++t) {
        c.class_counts[static_cast<std::int64_t>(map.dangling_edges(t))] += 1;
    }
    c.perimeter_edges = map.perimeter();
    c.cumulative_tiles = map.tile_count();
    return c;
}

inline LayerCensus grow_layer(CombinatorialMap& map, bool validate = true) {
    map.grow();
    if (validate) map.validate();
    return latest_census(map);
}

struct Simulation {
    CombinatorialMap map;
    std::vector<LayerCensus> censuses;  // censuses[0] is the seed
};

/// Grows up to max_layers layers, stopping early once the next layer's
/// perimeter would exceed max_boundary.
inline Simulation simulate(const SchlafliPair& pq, SeedKind kind, std::size_t max_layers, std::uint64_t max_boundary,
                           bool validate = true) {
    if (max_layers < 1) throw std::invalid_argument("simulate: max_layers must be at least 1");
    Simulation sim{CombinatorialMap::seed(pq, kind), {}};
    if (validate) sim.map.validate();
    sim.censuses.push_back(latest_census(sim.map));
    for (std::size_t n = 0; n < max_layers; ++n) {
        if (sim.map.predicted_next_perimeter() > max_boundary) break;
        sim.censuses.push_back(grow_layer(sim.map, validate));
    }
    return sim;
}

inline std::vector<LayerCensus> run(const SchlafliPair& pq, SeedKind kind, std::size_t max_layers,
                                    std::uint64_t max_boundary, bool validate = true) {
    return simulate(pq, kind, max_layers, max_boundary, validate).censuses;
}

/// Grows until the perimeter first exceeds min_perimeter (or max_layers is hit).
inline Simulation simulate_past(const SchlafliPair& pq, SeedKind kind, std::uint64_t min_perimeter,
                                std::size_t max_layers = 64, bool validate = true) {
    Simulation sim{CombinatorialMap::seed(pq, kind), {}};
    if (validate) sim.map.validate();
    sim.censuses.push_back(latest_census(sim.map));
    while (sim.map.perimeter() <= min_perimeter && sim.censuses.size() <= max_layers) {
        sim.censuses.push_back(grow_layer(sim.map, validate));
    }
    return sim;
}

inline double ratio(const BigCount& num, const BigCount& den) {
    return static_cast<double>(num) / static_cast<double>(den);
}

/// N_bulk / N_boundary at the last recorded layer.
inline double empirical_code_rate(std::span<const LayerCensus> censuses) {
    if (censuses.empty()) throw std::invalid_argument("empirical_code_rate: no censuses");
    const LayerCensus& last = censuses.back();
    return ratio(last.cumulative_tiles, last.perimeter_edges);
}

using CountVector2 = std::array<BigCount, 2>;

/// Counts of the two expected classes, or nothing if another class occurs.
inline std::optional<CountVector2> class_vector(const LayerCensus& c, const IntVector2& classes) {
    for (const auto& [cls, n] : c.class_counts) {
        if (n != 0 && cls != classes[0] && cls != classes[1]) return std::nullopt;
    }
    return CountVector2{c.count_of(classes[0]), c.count_of(classes[1])};
}

/// First layer k such that u_{n+1} = M u_n holds exactly for every n >= k,
/// with at least one step checked.
inline std::optional<std::size_t> recurrence_start(std::span<const LayerCensus> censuses, const GrowthMatrix& m,
                                                   const IntVector2& classes) {
    const std::size_t n = censuses.size();
    if (n < 2) return std::nullopt;
    auto next = class_vector(censuses[n - 1], classes);
    if (!next) return std::nullopt;
    std::size_t k = n - 1;
    while (k > 0) {
        const auto prev = class_vector(censuses[k - 1], classes);
        if (!prev || m.apply(*prev) != *next) break;
        next = prev;
        --k;
    }
    if (k == n - 1) return std::nullopt;
    return k;
}

struct GrowthVerification {
    bool passed = false;
    std::optional<std::size_t> transient;             // first layer of exact recurrence
    std::optional<std::size_t> two_class_from;        // first layer after which both classes always occur alone
    std::optional<std::size_t> transposed_transient;  // same recurrence test with M transposed
    std::string detail;
};

inline GrowthVerification verify_growth_matrix(std::span<const LayerCensus> censuses, const GrowthSystem& system) {
    if (censuses.size() < 4) throw std::invalid_argument("verify_growth_matrix: needs at least 4 layers");
    const IntVector2& classes = system.edge_vector;
    GrowthVerification v;

    std::size_t from = censuses.size();
    while (from > 0) {
        const LayerCensus& c = censuses[from - 1];
        if (c.class_counts.size() != 2 || c.count_of(classes[0]) == 0 || c.count_of(classes[1]) == 0) break;
        --from;
    }
    if (from < censuses.size()) v.two_class_from = from;

    v.transient = recurrence_start(censuses, system.matrix, classes);
    v.transposed_transient = recurrence_start(censuses, system.matrix.transposed(), classes);
    v.passed = v.transient.has_value();

    std::ostringstream os;
    if (!class_vector(censuses.back(), classes)) {
        os << "final layer has classes outside {" << classes[0] << "," << classes[1] << "}";
    } else if (v.passed) {
        os << "u(n+1) = M u(n) exactly from layer " << *v.transient;
    } else {
        os << "class counts do not follow M";
        if (v.transposed_transient) os << "; they follow M^T exactly from layer " << *v.transposed_transient;
    }
    v.detail = os.str();
    return v;
}

/// Finite-layer isoperimetric inequality for one census.
inline bool verify_isoperimetric(const LayerCensus& census, const SchlafliPair& pq) {
    const double lhs = finite_layer_lhs(pq, census.cumulative_tiles, census.perimeter_edges);
    return lhs <= code_rate_bound(pq) + isoperimetric_tolerance;
}

/// CSV with columns layer,new_tiles,class_a,class_b,perimeter,cumulative,empirical_rate.
/// class_a / class_b count tiles with classes[0] / classes[1] dangling edges;
/// tiles of any other class are the remainder of new_tiles.
inline void write_census_csv(std::ostream& os, std::span<const LayerCensus> censuses, const IntVector2& classes,
                             int precision = 6) {
    os << "layer,new_tiles,class_a,class_b,perimeter,cumulative,empirical_rate\n";
    for (const LayerCensus& c : censuses) {
        std::ostringstream rate;
        rate.imbue(std::locale::classic());
        rate << std::fixed << std::setprecision(precision) << ratio(c.cumulative_tiles, c.perimeter_edges);
        os << c.layer << ',' << c.new_tiles << ',' << c.count_of(classes[0]) << ',' << c.count_of(classes[1]) << ','
           << c.perimeter_edges << ',' << c.cumulative_tiles << ',' << rate.str() << '\n';
    }
}

}  // namespace holocode
