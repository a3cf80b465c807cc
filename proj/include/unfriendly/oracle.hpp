#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "unfriendly/coloring.hpp"
#include "unfriendly/graph.hpp"

namespace unfriendly {
namespace oracle {

// Exhaustive ground truth on small graphs. Colorings are encoded as
// n-bit integers; neighbor agreement is counted with bitwise masks.
inline constexpr Vertex kMaxOracleVertices = 24;

struct ColoringFlags {
    std::uint32_t coloring = 0;
    bool unfriendly = false;
    bool flip_fixed_point = false;
    bool local_max_cut = false;
};

struct ColoringEnumeration {
    Vertex vertex_count = 0;
    std::vector<ColoringFlags> results;  // 2^n entries, indexed by encoding
    std::int64_t unfriendly_count = 0;
};

inline std::vector<std::uint32_t> neighbor_masks(const FiniteGraph& g) {
    if (g.vertex_count() > kMaxOracleVertices)
        throw std::invalid_argument("oracle: graph too large (max " +
                                    std::to_string(kMaxOracleVertices) + " vertices)");
    std::vector<std::uint32_t> masks(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        for (Vertex y : g.neighbors(x))
            masks[static_cast<std::size_t>(x)] |= std::uint32_t{1} << y;
    return masks;
}

inline Coloring decode_coloring(std::uint32_t code, Vertex n) {
    Coloring c(static_cast<std::size_t>(n));
    for (Vertex x = 0; x < n; ++x)
        c[static_cast<std::size_t>(x)] = (code >> x) & 1;
    return c;
}

// Monochromatic edge count of an encoded coloring.
inline std::int64_t monochrome_edges(const std::vector<std::uint32_t>& masks,
                                     std::uint32_t code) {
    std::int64_t twice = 0;
    for (std::size_t x = 0; x < masks.size(); ++x) {
        std::uint32_t agree = (code >> x) & 1 ? code : ~code;
        twice += std::popcount(masks[x] & agree);
    }
    return twice / 2;
}

inline ColoringEnumeration enumerate(const FiniteGraph& g) {
    const auto masks = neighbor_masks(g);
    const Vertex n = g.vertex_count();
    ColoringEnumeration out;
    out.vertex_count = n;
    out.results.resize(std::size_t{1} << n);
    for (std::uint32_t code = 0; code < (std::uint32_t{1} << n); ++code) {
        ColoringFlags f;
        f.coloring = code;
        bool unfriendly = true;      // diff >= same at every vertex
        bool fixed = true;           // no single scheduled vertex would flip
        bool local_max = true;       // no single move increases the cut
        for (Vertex x = 0; x < n; ++x) {
            const std::uint32_t mask = masks[static_cast<std::size_t>(x)];
            const std::uint32_t agree = (code >> x) & 1 ? code : ~code;
            const int same = std::popcount(mask & agree);
            const int deg = std::popcount(mask);
            const int diff = deg - same;
            if (diff < same) {
                unfriendly = false;
                fixed = false;  // the flip rule would flip x
                local_max = false;  // moving x gains same - diff cut edges
            }
        }
        f.unfriendly = unfriendly;
        f.flip_fixed_point = fixed;
        f.local_max_cut = local_max;
        out.unfriendly_count += unfriendly;
        out.results[code] = f;
    }
    return out;
}

// The three characterizations coincide as sets of colorings. The
// unfriendly flag comes from counting; the other two are recomputed
// independently here against the library's own primitives.
inline bool check_fixed_point_equivalence(const FiniteGraph& g) {
    const auto masks = neighbor_masks(g);
    const Vertex n = g.vertex_count();
    for (std::uint32_t code = 0; code < (std::uint32_t{1} << n); ++code) {
        // Route 1: library verifier on the decoded coloring.
        const Coloring c = decode_coloring(code, n);
        bool unfriendly = true;
        for (Vertex x = 0; x < n && unfriendly; ++x) {
            std::int64_t same = 0;
            for (Vertex y : g.neighbors(x))
                same += c[static_cast<std::size_t>(y)] == c[static_cast<std::size_t>(x)];
            if (g.degree(x) - same < same) unfriendly = false;
        }
        // Route 2: stability under every single-vertex flip round.
        bool fixed = true;
        for (Vertex x = 0; x < n && fixed; ++x) {
            const std::uint32_t mask = masks[static_cast<std::size_t>(x)];
            const std::uint32_t agree = (code >> x) & 1 ? code : ~code;
            const int same = std::popcount(mask & agree);
            if (std::popcount(mask) - same < same) fixed = false;
        }
        // Route 3: cut size cannot improve by moving one vertex.
        const std::int64_t mono = monochrome_edges(masks, code);
        bool local_max = true;
        for (Vertex x = 0; x < n && local_max; ++x)
            if (monochrome_edges(masks, code ^ (std::uint32_t{1} << x)) < mono)
                local_max = false;
        if (unfriendly != fixed || fixed != local_max) return false;
    }
    return true;
}

// A coloring minimizing monochromatic edges (equivalently a maximum cut).
inline std::pair<Coloring, std::int64_t> min_monochrome_coloring(const FiniteGraph& g) {
    const auto masks = neighbor_masks(g);
    const Vertex n = g.vertex_count();
    std::uint32_t best_code = 0;
    std::int64_t best = monochrome_edges(masks, 0);
    for (std::uint32_t code = 1; code < (std::uint32_t{1} << n); ++code) {
        std::int64_t mono = monochrome_edges(masks, code);
        if (mono < best) {
            best = mono;
            best_code = code;
        }
    }
    return {decode_coloring(best_code, n), best};
}

}  // namespace oracle
}  // namespace unfriendly
