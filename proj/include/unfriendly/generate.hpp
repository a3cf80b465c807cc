#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "unfriendly/graph.hpp"

namespace unfriendly {

// Deterministic cross-platform PRNG: splitmix64 (Steele, Lea, Flood 2014).
// Bounded draws use rejection from the top of the range, so the stream of
// outputs is identical on every platform for a given seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("rng: zero bound");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(next_below(i))]);
    }

private:
    std::uint64_t state_;
};

enum class GraphFamily {
    Grid,
    Torus,
    Cycle,
    Path,
    Complete,
    RandomRegular,
    RegularTreeTruncation,
    ErdosRenyiCapped,
};

struct GeneratorSpec {
    GraphFamily family = GraphFamily::Grid;
    std::vector<std::int64_t> parameters;
    std::uint64_t seed = 0;
};

inline FiniteGraph make_grid(std::int64_t w, std::int64_t h, bool wrap) {
    if (w < 1 || h < 1) throw std::invalid_argument("grid: dimensions must be >= 1");
    auto id = [w](std::int64_t r, std::int64_t c) { return r * w + c; };
    std::vector<Edge> edges;
    for (std::int64_t r = 0; r < h; ++r) {
        for (std::int64_t c = 0; c < w; ++c) {
            if (c + 1 < w) edges.emplace_back(id(r, c), id(r, c + 1));
            else if (wrap && w > 2) edges.emplace_back(id(r, c), id(r, 0));
            if (r + 1 < h) edges.emplace_back(id(r, c), id(r + 1, c));
            else if (wrap && h > 2) edges.emplace_back(id(r, c), id(0, c));
        }
    }
    return validate_graph(w * h, edges);
}

inline FiniteGraph make_cycle(std::int64_t n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> edges;
    for (std::int64_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return validate_graph(n, edges);
}

inline FiniteGraph make_path(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<Edge> edges;
    for (std::int64_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return validate_graph(n, edges);
}

inline FiniteGraph make_complete(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    std::vector<Edge> edges;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return validate_graph(n, edges);
}

// Pairing model with rejection of loops and repeated edges. Invalid
// stub pairs are re-drawn in place (Steger-Wormald style); a full
// restart happens only when the remaining stubs dead-end.
inline FiniteGraph make_random_regular(std::int64_t n, std::int64_t d,
                                       std::uint64_t seed) {
    if (n < 1 || d < 0 || d >= n || (n * d) % 2 != 0)
        throw std::invalid_argument("random_regular: need 0 <= d < n with n*d even");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Vertex> stubs(static_cast<std::size_t>(n * d));
        for (std::size_t i = 0; i < stubs.size(); ++i)
            stubs[i] = static_cast<Vertex>(static_cast<std::int64_t>(i) / d);
        std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        bool stuck = false;
        while (!stubs.empty() && !stuck) {
            int tries = 0;
            for (;; ++tries) {
                if (tries > 500) {
                    stuck = true;
                    break;
                }
                std::size_t i = static_cast<std::size_t>(rng.next_below(stubs.size()));
                std::size_t j = static_cast<std::size_t>(rng.next_below(stubs.size()));
                if (i == j) continue;
                Vertex u = stubs[i], v = stubs[j];
                if (u == v) continue;
                auto& au = adj[static_cast<std::size_t>(u)];
                if (std::find(au.begin(), au.end(), v) != au.end()) continue;
                au.push_back(v);
                adj[static_cast<std::size_t>(v)].push_back(u);
                edges.emplace_back(u, v);
                if (i < j) std::swap(i, j);
                stubs[i] = stubs.back();
                stubs.pop_back();
                stubs[j] = stubs.back();
                stubs.pop_back();
                break;
            }
        }
        if (!stuck) return validate_graph(n, edges);
    }
    throw std::runtime_error("random_regular: pairing model failed to produce a simple graph");
}

// d-regular tree truncated at the given depth: the root has d children,
// every other internal vertex d-1. Breadth-first vertex numbering.
inline FiniteGraph make_regular_tree(std::int64_t d, std::int64_t depth) {
    if (d < 1 || depth < 0)
        throw std::invalid_argument("regular_tree: need d >= 1, depth >= 0");
    std::vector<Edge> edges;
    std::vector<Vertex> level{0};
    Vertex next_id = 1;
    for (std::int64_t ell = 0; ell < depth; ++ell) {
        std::vector<Vertex> next_level;
        for (Vertex parent : level) {
            std::int64_t children = (ell == 0) ? d : d - 1;
            for (std::int64_t k = 0; k < children; ++k) {
                edges.emplace_back(parent, next_id);
                next_level.push_back(next_id++);
            }
        }
        level = std::move(next_level);
    }
    return validate_graph(next_id, edges);
}

// Uniform random edges with per-vertex degree cap; stops after m accepted
// edges or when the rejection budget runs out.
inline FiniteGraph make_erdos_renyi_capped(std::int64_t n, std::int64_t m,
                                           std::int64_t cap, std::uint64_t seed) {
    if (n < 2 || m < 0 || cap < 1)
        throw std::invalid_argument("erdos_renyi_capped: need n >= 2, m >= 0, cap >= 1");
    SplitMix64 rng(seed);
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edges;
    std::int64_t budget = 50 * (m + 1);
    while (static_cast<std::int64_t>(edges.size()) < m && budget-- > 0) {
        Vertex u = static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(n)));
        Vertex v = static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (deg[static_cast<std::size_t>(u)] >= cap ||
            deg[static_cast<std::size_t>(v)] >= cap)
            continue;
        if (std::find(edges.begin(), edges.end(), Edge{u, v}) != edges.end()) continue;
        edges.emplace_back(u, v);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return validate_graph(n, edges);
}

inline FiniteGraph generate(const GeneratorSpec& spec) {
    const auto& p = spec.parameters;
    auto need = [&](std::size_t k, const char* what) {
        if (p.size() != k)
            throw std::invalid_argument(std::string("generate: ") + what);
    };
    switch (spec.family) {
        case GraphFamily::Grid:
            need(2, "grid expects W:H");
            return make_grid(p[0], p[1], false);
        case GraphFamily::Torus:
            need(2, "torus expects W:H");
            return make_grid(p[0], p[1], true);
        case GraphFamily::Cycle:
            need(1, "cycle expects N");
            return make_cycle(p[0]);
        case GraphFamily::Path:
            need(1, "path expects N");
            return make_path(p[0]);
        case GraphFamily::Complete:
            need(1, "complete expects N");
            return make_complete(p[0]);
        case GraphFamily::RandomRegular:
            need(2, "random_regular expects N:D");
            return make_random_regular(p[0], p[1], spec.seed);
        case GraphFamily::RegularTreeTruncation:
            need(2, "tree expects D:DEPTH");
            return make_regular_tree(p[0], p[1]);
        case GraphFamily::ErdosRenyiCapped:
            need(3, "erdos_renyi expects N:M:CAP");
            return make_erdos_renyi_capped(p[0], p[1], p[2], spec.seed);
    }
    throw std::invalid_argument("generate: unknown family");
}

// Parses "family:p1:p2:..." as used by the CLI --gen flag.
inline GeneratorSpec parse_generator_spec(const std::string& text, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.seed = seed;
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t colon = text.find(':', start);
        if (colon == std::string::npos) colon = text.size();
        parts.push_back(text.substr(start, colon - start));
        start = colon + 1;
    }
    if (parts.empty()) throw std::invalid_argument("generate: empty spec");
    const std::string& fam = parts[0];
    if (fam == "grid") spec.family = GraphFamily::Grid;
    else if (fam == "torus") spec.family = GraphFamily::Torus;
    else if (fam == "cycle") spec.family = GraphFamily::Cycle;
    else if (fam == "path") spec.family = GraphFamily::Path;
    else if (fam == "complete") spec.family = GraphFamily::Complete;
    else if (fam == "random_regular") spec.family = GraphFamily::RandomRegular;
    else if (fam == "tree") spec.family = GraphFamily::RegularTreeTruncation;
    else if (fam == "erdos_renyi") spec.family = GraphFamily::ErdosRenyiCapped;
    else throw std::invalid_argument("generate: unknown family '" + fam + "'");
    for (std::size_t i = 1; i < parts.size(); ++i)
        spec.parameters.push_back(std::stoll(parts[i]));
    return spec;
}

}  // namespace unfriendly
