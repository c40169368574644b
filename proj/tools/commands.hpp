#pragma once

// Command bodies for the holocode tool. Each returns the tables it prints,
// so tests can check results without spawning a process.

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "holocode/holocode.hpp"

namespace holocode::cli {

/// Bad arguments or a domain the command does not cover (exit status 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int table_digits = 3;

inline Field big(const BigCount& n) { return BigText{n.str()}; }

inline Field optional_index(const std::optional<std::size_t>& k) {
    return k ? Field{static_cast<std::int64_t>(*k)} : Field{};
}

inline std::vector<Table> cmd_bound(std::int64_t p, std::int64_t q, int precision) {
    const SchlafliPair pq(p, q);
    const auto g = tile_geometry(pq);
    Record r;
    r.add("p", p).add("q", q).add("curvature", std::string(to_string(pq.curvature())));
    r.add("side_length", Real{g.side_length, precision})
        .add("area", Real{g.area, precision})
        .add("bound", Real{g.bound, precision});
    return {{"bound", {r}}};
}

inline std::vector<Table> cmd_rate(std::int64_t p, std::int64_t q, int precision) {
    const SchlafliPair pq(p, q);
    const GrowthSystem s = growth_system(pq);
    const double rate = code_rate(s);
    const double bound = code_rate_bound(pq);
    const auto& m = s.matrix.entries;
    Record r;
    r.add("p", p).add("q", q).add("family", std::string(to_string(s.matrix.family)));
    r.add("gamma", Real{s.gamma.value(), precision}).add("growth_rate", Real{s.growth_rate, precision});
    r.add("m11", m[0][0]).add("m12", m[0][1]).add("m21", m[1][0]).add("m22", m[1][1]);
    r.add("u1", Real{s.growth_vector[0], precision}).add("u2", Real{s.growth_vector[1], precision});
    r.add("code_rate", Real{rate, precision})
        .add("bound", Real{bound, precision})
        .add("ratio", Real{rate / bound, precision})
        .add("qec", rate < 1.0);
    return {{"rate", {r}}};
}

inline Record range_record(const RangeReport& rr, int precision) {
    Record r;
    r.add("p", rr.p).add("q_min", rr.q_min);
    r.add("q_max", rr.q_max ? Field{BigText{rr.q_max->str()}} : Field{});
    r.add("q_opt", rr.q_opt).add("best_bound", Real{rr.best_bound, precision});
    r.add("q1_estimate", rr.q1_estimate ? Field{Real{*rr.q1_estimate, precision}} : Field{});
    return r;
}

inline std::vector<Table> cmd_scan(std::int64_t p_from, std::int64_t p_to, int precision) {
    if (p_from < 3 || p_to < p_from) throw UsageError("scan: need 3 <= p_from <= p_to");
    if (p_to > 64) throw UsageError("scan: p_to above 64 is not supported");
    Table t{"scan", {}};
    for (std::int64_t p = p_from; p <= p_to; ++p) t.rows.push_back(range_record(range_report(p), precision));
    return {t};
}

struct SimulateOptions {
    std::int64_t p = 0;
    std::int64_t q = 0;
    SeedKind seed = SeedKind::single_tile;
    std::size_t layers = 64;
    std::uint64_t max_boundary = 1'000'000;
    int precision = 6;
};

inline std::vector<Table> cmd_simulate(const SimulateOptions& o) {
    const SchlafliPair pq(o.p, o.q);
    const GrowthSystem system = growth_system(pq);
    const std::vector<LayerCensus> censuses = run(pq, o.seed, o.layers, o.max_boundary);
    const IntVector2& classes = system.edge_vector;

    Table census{"census", {}};
    bool iso_all = true;
    for (const LayerCensus& c : censuses) {
        const bool iso = verify_isoperimetric(c, pq);
        iso_all = iso_all && iso;
        const BigCount other = c.new_tiles - c.count_of(classes[0]) - c.count_of(classes[1]);
        Record r;
        r.add("layer", static_cast<std::int64_t>(c.layer)).add("new_tiles", big(c.new_tiles));
        r.add("class_a", big(c.count_of(classes[0]))).add("class_b", big(c.count_of(classes[1])));
        r.add("class_other", big(other));
        r.add("perimeter", big(c.perimeter_edges)).add("cumulative", big(c.cumulative_tiles));
        r.add("empirical_rate", Real{ratio(c.cumulative_tiles, c.perimeter_edges), o.precision});
        r.add("isoperimetric", iso);
        census.rows.push_back(std::move(r));
    }

    const double predicted = code_rate(system);
    const double empirical = empirical_code_rate(censuses);
    Record s;
    s.add("p", o.p).add("q", o.q).add("seed", std::string(to_string(o.seed)));
    s.add("layers", static_cast<std::int64_t>(censuses.size() - 1));
    s.add("class_a_label", classes[0]).add("class_b_label", classes[1]);
    if (censuses.size() >= 4) {
        const GrowthVerification v = verify_growth_matrix(censuses, system);
        s.add("transient", optional_index(v.transient)).add("matrix_verified", v.passed);
        s.add("transposed_transient", optional_index(v.transposed_transient));
        s.add("verification", v.detail);
    } else {
        s.add("transient", Field{}).add("matrix_verified", Field{}).add("transposed_transient", Field{});
        s.add("verification", std::string("needs at least 3 grown layers"));
    }
    s.add("empirical_rate", Real{empirical, o.precision}).add("code_rate", Real{predicted, o.precision});
    s.add("relative_error", Real{std::abs(empirical - predicted) / predicted, o.precision});
    s.add("isoperimetric_all", iso_all);
    return {census, {"summary", {s}}};
}

inline std::vector<Table> cmd_tables() {
    Table one{"table_1", {}};
    for (const CodeRateRow& row : table_code_rates()) {
        Record r;
        r.add("p", row.pq.p()).add("q", row.pq.q());
        r.add("code_rate", Real{row.code_rate, table_digits})
            .add("bound", Real{row.bound, table_digits})
            .add("ratio", Real{row.ratio, table_digits});
        one.rows.push_back(std::move(r));
    }
    Table two{"table_2", {}};
    for (std::int64_t p = 3; p <= 10; ++p) {
        const OptimalQ opt = q_opt(p);
        Record r;
        r.add("p", p).add("q_opt", opt.q).add("best_bound", Real{opt.bound, table_digits});
        two.rows.push_back(std::move(r));
    }
    Table three{"table_3", {}};
    for (std::int64_t p = 4; p <= 7; ++p) {
        const RangeReport rr = range_report(p);
        Record r;
        r.add("p", p).add("q_min", rr.q_min).add("q_max", BigText{rr.q_max->str()});
        r.add("q1_estimate", Real{*rr.q1_estimate, table_digits});
        three.rows.push_back(std::move(r));
    }
    return {one, two, three};
}

inline std::vector<Table> cmd_figures(int fig_id, std::int64_t limit, int precision) {
    if (fig_id < 1 || fig_id > 4) throw UsageError("figures: fig_id must be 1, 2, 3 or 4");
    const FigureMode mode = fig_id <= 2 ? FigureMode::rate : FigureMode::ratio;
    const bool fixed_p = fig_id % 2 == 1;
    Table t{"figure_" + std::to_string(fig_id), {}};
    for (std::int64_t v = 3; v <= 7; ++v) {
        const Family family = fixed_p ? Family::fixed_p(v) : Family::fixed_q(v);
        if (limit < family.first_member()) {
            throw UsageError("figures: limit " + std::to_string(limit) + " leaves family " + std::to_string(v) +
                             " empty");
        }
        const std::string label = (fixed_p ? "p=" : "q=") + std::to_string(v);
        for (const FigureRow& row : figure_series(mode, family, limit)) {
            Record r;
            r.add("family", label).add("p", row.p).add("q", row.q);
            r.add("x", Real{row.x, precision}).add("y", Real{row.y, precision});
            t.rows.push_back(std::move(r));
        }
    }
    if (mode == FigureMode::rate) {
        Record r;
        r.add("family", std::string("qec")).add("p", Field{}).add("q", Field{});
        r.add("x", Field{}).add("y", Real{1.0, precision});
        t.rows.push_back(std::move(r));
    }
    return {t};
}

}  // namespace holocode::cli
