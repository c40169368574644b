#pragma once

// Incidence structure for a simply connected finite patch of the {p,q}
// tiling, grown by tile completion. No coordinates: every count is exact
// and independent of the curvature.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "holocode/schlafli.hpp"

namespace holocode {

/// A broken structural invariant. Always a bug, never bad user input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class SeedKind { single_tile, single_edge_pair, vertex_star };

constexpr std::string_view to_string(SeedKind k) {
    switch (k) {
        case SeedKind::single_tile: return "tile";
        case SeedKind::single_edge_pair: return "edge";
        case SeedKind::vertex_star: return "vertex";
    }
    return "unknown";
}

inline std::optional<SeedKind> parse_seed_kind(std::string_view s) {
    if (s == "tile" || s == "single-tile") return SeedKind::single_tile;
    if (s == "edge" || s == "single-edge-pair") return SeedKind::single_edge_pair;
    if (s == "vertex" || s == "vertex-star") return SeedKind::vertex_star;
    return std::nullopt;
}

class CombinatorialMap {
public:
    using Index = std::uint32_t;
    static constexpr Index none = std::numeric_limits<Index>::max();

    struct Vertex {
        std::uint32_t tile_degree = 0;
        std::uint32_t edge_degree = 0;
        bool on_boundary = false;
    };

    struct Edge {
        std::array<Index, 2> ends;
        std::array<Index, 2> tiles{none, none};

        int tile_count() const { return (tiles[0] != none ? 1 : 0) + (tiles[1] != none ? 1 : 0); }
    };

    static CombinatorialMap seed(const SchlafliPair& pq, SeedKind kind) {
        pq.require_hyperbolic();
        CombinatorialMap map(pq);
        map.layer_begin_.push_back(0);
        switch (kind) {
            case SeedKind::single_tile: map.seed_single_tile(); break;
            case SeedKind::single_edge_pair: map.seed_edge_pair(); break;
            case SeedKind::vertex_star: map.seed_vertex_star(); break;
        }
        return map;
    }

    const SchlafliPair& tiling() const noexcept { return pq_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t tile_count() const noexcept { return tile_layer_.size(); }
    std::size_t layer_count() const noexcept { return layer_begin_.size(); }
    std::size_t perimeter() const noexcept { return boundary_edges_.size(); }

    std::span<const Index> boundary_vertices() const noexcept { return boundary_vertices_; }
    std::span<const Index> boundary_edges() const noexcept { return boundary_edges_; }

    const Vertex& vertex(Index v) const { return vertices_.at(v); }
    const Edge& edge(Index e) const { return edges_.at(e); }

    /// Edges of tile t in cyclic order around the polygon.
    std::span<const Index> tile_edges(Index t) const {
        return std::span<const Index>(tile_edges_).subspan(static_cast<std::size_t>(t) * p_, p_);
    }

    std::uint32_t tile_layer(Index t) const { return tile_layer_.at(t); }

    /// Half-open tile index range [first, last) of one layer.
    std::pair<Index, Index> layer_tiles(std::size_t layer) const {
        const Index first = layer_begin_.at(layer);
        const Index last = layer + 1 < layer_begin_.size() ? layer_begin_[layer + 1] : static_cast<Index>(tile_count());
        return {first, last};
    }

    /// Number of edges of tile t that lie on the perimeter.
    std::size_t dangling_edges(Index t) const {
        std::size_t n = 0;
        for (Index e : tile_edges(t)) n += edges_[e].tile_count() == 1 ? 1 : 0;
        return n;
    }

    std::int64_t euler_characteristic() const {
        return static_cast<std::int64_t>(vertex_count()) - static_cast<std::int64_t>(edge_count()) +
               static_cast<std::int64_t>(tile_count());
    }

    /// Perimeter the next call to grow() would produce, computed from the
    /// boundary deficits alone.
    std::size_t predicted_next_perimeter() const {
        const LayerPlan plan = plan_layer();
        std::size_t total = 0;
        for (std::size_t a : plan.anchors) total += (plan.deficit[a] - 2) * (p_ - 2);
        for (std::size_t d : plan.run_dangling) total += d;
        return total;
    }

    /// Adds every tile of the infinite tiling sharing a vertex with the patch.
    ///
    /// Walks the perimeter starting from the anchor (boundary vertex missing
    /// at least two tiles) with the lowest creation index. Around an anchor
    /// missing D tiles we add D-1 spokes and D-2 corner tiles; a maximal run
    /// of perimeter edges between consecutive anchors is covered by a single
    /// tile, since the vertices inside the run miss exactly one tile each.
    void grow() {
        const LayerPlan plan = plan_layer();
        const std::size_t K = plan.anchors.size();
        const auto layer = static_cast<std::uint32_t>(layer_begin_.size());
        layer_begin_.push_back(checked_index(tile_count()));

        // Spoke slots in perimeter order; slot s of anchor k is spoke s - first_slot[k].
        std::vector<std::size_t> first_slot(K + 1, 0);
        for (std::size_t k = 0; k < K; ++k) first_slot[k + 1] = first_slot[k] + plan.deficit[plan.anchors[k]] - 1;
        const std::size_t slots = first_slot[K];

        // A run tile without dangling edges closes onto a single far vertex
        // shared with the first spoke of the next anchor.
        std::vector<char> linked(slots, 0);
        for (std::size_t k = 0; k < K; ++k) {
            if (plan.run_dangling[(k + K - 1) % K] == 0) linked[first_slot[k]] = 1;
        }
        const auto unlinked = std::find(linked.begin(), linked.end(), 0);
        if (unlinked == linked.end()) throw InternalError("grow: every spoke collapses onto one vertex");
        const auto s0 = static_cast<std::size_t>(unlinked - linked.begin());

        std::vector<Index> far(slots, none);
        for (std::size_t i = 0; i < slots; ++i) {
            const std::size_t s = (s0 + i) % slots;
            far[s] = linked[s] ? far[(s + slots - 1) % slots] : add_vertex();
        }
        std::vector<Index> spoke(slots, none);
        for (std::size_t k = 0; k < K; ++k) {
            const Index v = boundary_vertices_[plan.anchors[k]];
            for (std::size_t s = first_slot[k]; s < first_slot[k + 1]; ++s) spoke[s] = add_edge(v, far[s]);
        }

        const std::size_t m = boundary_vertices_.size();
        std::vector<Index> next_vertices;
        std::vector<Index> next_edges;
        std::vector<Index> verts;
        std::vector<Index> edges;
        std::vector<Index> chain_v;
        std::vector<Index> chain_e;

        for (std::size_t k = 0; k < K; ++k) {
            const std::size_t a = plan.anchors[k];
            const Index v = boundary_vertices_[a];

            for (std::size_t s = first_slot[k]; s + 1 < first_slot[k + 1]; ++s) {
                make_chain(far[s], far[s + 1], p_ - 2, chain_v, chain_e);
                verts.assign({v});
                verts.insert(verts.end(), chain_v.begin(), chain_v.end());
                edges.assign({spoke[s]});
                edges.insert(edges.end(), chain_e.begin(), chain_e.end());
                edges.push_back(spoke[s + 1]);
                add_tile(verts, edges, layer);
                next_vertices.insert(next_vertices.end(), chain_v.begin(), chain_v.end() - 1);
                next_edges.insert(next_edges.end(), chain_e.begin(), chain_e.end());
            }

            const std::size_t b = plan.anchors[(k + 1) % K];
            const std::size_t run = (b + m - a) % m;
            const std::size_t d = plan.run_dangling[k];
            const std::size_t s_last = first_slot[k + 1] - 1;
            const std::size_t s_next = first_slot[(k + 1) % K];

            verts.clear();
            edges.clear();
            for (std::size_t i = 0; i <= run; ++i) verts.push_back(boundary_vertices_[(a + i) % m]);
            for (std::size_t i = 0; i < run; ++i) edges.push_back(boundary_edges_[(a + i) % m]);
            edges.push_back(spoke[s_next]);
            if (d == 0) {
                if (far[s_last] != far[s_next]) throw InternalError("grow: closed run tile has two far vertices");
                verts.push_back(far[s_next]);
            } else {
                make_chain(far[s_last], far[s_next], d, chain_v, chain_e);
                verts.insert(verts.end(), chain_v.rbegin(), chain_v.rend());
                edges.insert(edges.end(), chain_e.rbegin(), chain_e.rend());
                next_vertices.insert(next_vertices.end(), chain_v.begin(), chain_v.end() - 1);
                next_edges.insert(next_edges.end(), chain_e.begin(), chain_e.end());
            }
            edges.push_back(spoke[s_last]);
            add_tile(verts, edges, layer);
        }

        for (Index v : boundary_vertices_) vertices_[v].on_boundary = false;
        for (Index v : next_vertices) vertices_[v].on_boundary = true;
        boundary_vertices_ = std::move(next_vertices);
        boundary_edges_ = std::move(next_edges);
    }

    /// Re-derives every structural invariant from scratch. Throws
    /// InternalError naming the first violation.
    void validate() const {
        const auto q = static_cast<std::uint32_t>(pq_.q());

        std::vector<std::uint32_t> tile_degree(vertices_.size(), 0);
        for (Index t = 0; t < tile_count(); ++t) {
            const auto te = tile_edges(t);
            for (std::size_t k = 0; k < p_; ++k) {
                const Edge& e0 = edges_[te[k]];
                const Edge& e1 = edges_[te[(k + 1) % p_]];
                const Index shared = shared_vertex(e0, e1);
                if (shared == none) fail("consecutive edges of tile " + std::to_string(t) + " share no vertex");
                ++tile_degree[shared];
                if (e0.tiles[0] != t && e0.tiles[1] != t) fail("edge does not list its tile");
            }
        }

        std::vector<std::uint32_t> edge_degree(vertices_.size(), 0);
        std::size_t single = 0;
        for (const Edge& e : edges_) {
            const int n = e.tile_count();
            if (n == 0) fail("edge with no incident tile");
            if (n == 1) ++single;
            ++edge_degree[e.ends[0]];
            ++edge_degree[e.ends[1]];
        }

        const std::size_t m = boundary_vertices_.size();
        if (boundary_edges_.size() != m || m < 3) fail("perimeter is not a cycle");
        if (single != m) fail("perimeter edges do not form a single cycle");
        std::vector<char> seen_vertex(vertices_.size(), 0);
        std::vector<char> seen_edge(edges_.size(), 0);
        for (std::size_t i = 0; i < m; ++i) {
            const Index v = boundary_vertices_[i];
            const Index w = boundary_vertices_[(i + 1) % m];
            const Edge& e = edges_[boundary_edges_[i]];
            if (e.tile_count() != 1) fail("interior edge on the perimeter cycle");
            if (!((e.ends[0] == v && e.ends[1] == w) || (e.ends[0] == w && e.ends[1] == v))) {
                fail("perimeter cycle is not connected");
            }
            if (seen_vertex[v]++ || seen_edge[boundary_edges_[i]]++) fail("perimeter cycle is not simple");
        }

        for (Index v = 0; v < vertices_.size(); ++v) {
            const Vertex& vx = vertices_[v];
            if (tile_degree[v] != vx.tile_degree) fail("stored tile degree is stale at vertex " + std::to_string(v));
            if (edge_degree[v] != vx.edge_degree) fail("stored edge degree is stale");
            if (static_cast<bool>(seen_vertex[v]) != vx.on_boundary) fail("boundary flag disagrees with cycle");
            if (vx.on_boundary) {
                if (vx.tile_degree >= q) fail("saturated vertex on the perimeter");
                if (vx.edge_degree != vx.tile_degree + 1) fail("boundary vertex fan is not contiguous");
            } else if (vx.tile_degree != q || vx.edge_degree != q) {
                fail("interior vertex " + std::to_string(v) + " has degree " + std::to_string(vx.tile_degree));
            }
        }

        if (euler_characteristic() != 1) fail("Euler characteristic is not 1");
    }

private:
    struct LayerPlan {
        std::vector<std::uint32_t> deficit;    // per boundary position
        std::vector<std::size_t> anchors;      // positions with deficit >= 2, in walk order
        std::vector<std::size_t> run_dangling; // dangling edges of the tile covering run k
    };

    explicit CombinatorialMap(const SchlafliPair& pq)
        : pq_(pq), p_(static_cast<std::size_t>(pq.p())) {}

    [[noreturn]] static void fail(const std::string& what) { throw InternalError("combinatorial map: " + what); }

    static Index shared_vertex(const Edge& a, const Edge& b) {
        for (Index x : a.ends)
            for (Index y : b.ends)
                if (x == y) return x;
        return none;
    }

    static Index checked_index(std::size_t n) {
        if (n >= none) throw std::length_error("combinatorial map exceeds 32-bit indexing");
        return static_cast<Index>(n);
    }

    LayerPlan plan_layer() const {
        const auto q = static_cast<std::uint32_t>(pq_.q());
        const std::size_t m = boundary_vertices_.size();
        LayerPlan plan;
        plan.deficit.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            const std::uint32_t deg = vertices_[boundary_vertices_[i]].tile_degree;
            if (deg >= q) throw InternalError("grow: over-saturated boundary vertex");
            plan.deficit[i] = q - deg;
            if (plan.deficit[i] >= 2) plan.anchors.push_back(i);
        }
        if (plan.anchors.size() < 2) throw InternalError("grow: perimeter has fewer than two anchors");

        const auto first = std::min_element(plan.anchors.begin(), plan.anchors.end(), [&](std::size_t x, std::size_t y) {
            return boundary_vertices_[x] < boundary_vertices_[y];
        });
        std::rotate(plan.anchors.begin(), first, plan.anchors.end());

        const std::size_t K = plan.anchors.size();
        for (std::size_t k = 0; k < K; ++k) {
            const std::size_t run = (plan.anchors[(k + 1) % K] + m - plan.anchors[k]) % m;
            if (run + 2 > p_) throw InternalError("grow: run longer than a tile can cover");
            plan.run_dangling.push_back(p_ - run - 2);
        }
        return plan;
    }

    Index add_vertex() {
        vertices_.push_back({});
        return checked_index(vertices_.size() - 1);
    }

    Index add_edge(Index a, Index b) {
        edges_.push_back(Edge{{a, b}});
        ++vertices_[a].edge_degree;
        ++vertices_[b].edge_degree;
        return checked_index(edges_.size() - 1);
    }

    // Path of n >= 1 fresh edges from `from` to `to` through n-1 fresh
    // vertices; out_v receives the n+1 path vertices.
    void make_chain(Index from, Index to, std::size_t n, std::vector<Index>& out_v, std::vector<Index>& out_e) {
        out_v.assign({from});
        out_e.clear();
        for (std::size_t i = 1; i < n; ++i) out_v.push_back(add_vertex());
        out_v.push_back(to);
        for (std::size_t i = 0; i < n; ++i) out_e.push_back(add_edge(out_v[i], out_v[i + 1]));
    }

    // verts[k] and verts[k+1] are the ends of edges[k], cyclically.
    void add_tile(std::span<const Index> verts, std::span<const Index> edges, std::uint32_t layer) {
        if (verts.size() != p_ || edges.size() != p_) fail("tile does not have p sides");
        const Index t = checked_index(tile_count());
        for (std::size_t k = 0; k < p_; ++k) {
            Edge& e = edges_[edges[k]];
            const Index a = verts[k];
            const Index b = verts[(k + 1) % p_];
            if (!((e.ends[0] == a && e.ends[1] == b) || (e.ends[0] == b && e.ends[1] == a))) {
                fail("tile edge does not join consecutive tile vertices");
            }
            if (e.tiles[0] == none) {
                e.tiles[0] = t;
            } else if (e.tiles[1] == none) {
                e.tiles[1] = t;
            } else {
                fail("edge glued to a third tile");
            }
            ++vertices_[a].tile_degree;
        }
        tile_edges_.insert(tile_edges_.end(), edges.begin(), edges.end());
        tile_layer_.push_back(layer);
    }

    void seed_single_tile() {
        std::vector<Index> verts;
        std::vector<Index> edges;
        for (std::size_t k = 0; k < p_; ++k) verts.push_back(add_vertex());
        for (std::size_t k = 0; k < p_; ++k) edges.push_back(add_edge(verts[k], verts[(k + 1) % p_]));
        add_tile(verts, edges, 0);
        boundary_vertices_ = verts;
        boundary_edges_ = edges;
        finish_seed();
    }

    void seed_edge_pair() {
        std::vector<Index> a_verts;
        std::vector<Index> a_edges;
        for (std::size_t k = 0; k < p_; ++k) a_verts.push_back(add_vertex());
        for (std::size_t k = 0; k < p_; ++k) a_edges.push_back(add_edge(a_verts[k], a_verts[(k + 1) % p_]));
        add_tile(a_verts, a_edges, 0);

        // Second tile glued along a0-a1, walked a1 -> a0 -> new ... -> a1.
        std::vector<Index> chain_v;
        std::vector<Index> chain_e;
        make_chain(a_verts[0], a_verts[1], p_ - 1, chain_v, chain_e);
        std::vector<Index> b_verts{a_verts[1]};
        b_verts.insert(b_verts.end(), chain_v.begin(), chain_v.end() - 1);
        std::vector<Index> b_edges{a_edges[0]};
        b_edges.insert(b_edges.end(), chain_e.begin(), chain_e.end());
        add_tile(b_verts, b_edges, 0);

        for (std::size_t k = 1; k < p_; ++k) {
            boundary_vertices_.push_back(a_verts[k]);
            boundary_edges_.push_back(a_edges[k]);
        }
        boundary_vertices_.insert(boundary_vertices_.end(), chain_v.begin(), chain_v.end() - 1);
        boundary_edges_.insert(boundary_edges_.end(), chain_e.begin(), chain_e.end());
        finish_seed();
    }

    void seed_vertex_star() {
        const auto q = static_cast<std::size_t>(pq_.q());
        const Index centre = add_vertex();
        std::vector<Index> tips;
        std::vector<Index> spokes;
        for (std::size_t i = 0; i < q; ++i) tips.push_back(add_vertex());
        for (std::size_t i = 0; i < q; ++i) spokes.push_back(add_edge(centre, tips[i]));

        std::vector<Index> chain_v;
        std::vector<Index> chain_e;
        for (std::size_t i = 0; i < q; ++i) {
            const std::size_t j = (i + 1) % q;
            make_chain(tips[i], tips[j], p_ - 2, chain_v, chain_e);
            std::vector<Index> verts{centre};
            verts.insert(verts.end(), chain_v.begin(), chain_v.end());
            std::vector<Index> edges{spokes[i]};
            edges.insert(edges.end(), chain_e.begin(), chain_e.end());
            edges.push_back(spokes[j]);
            add_tile(verts, edges, 0);
            boundary_vertices_.insert(boundary_vertices_.end(), chain_v.begin(), chain_v.end() - 1);
            boundary_edges_.insert(boundary_edges_.end(), chain_e.begin(), chain_e.end());
        }
        finish_seed();
    }

    void finish_seed() {
        for (Index v : boundary_vertices_) vertices_[v].on_boundary = true;
    }

    SchlafliPair pq_;
    std::size_t p_;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<Index> tile_edges_;  // p entries per tile
    std::vector<std::uint32_t> tile_layer_;
    std::vector<Index> layer_begin_;
    std::vector<Index> boundary_vertices_;
    std::vector<Index> boundary_edges_;  // boundary_edges_[i] joins vertex i and i+1
};

}  // namespace holocode
