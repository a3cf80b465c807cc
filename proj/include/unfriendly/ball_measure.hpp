#pragma once

#include <stdexcept>
#include <vector>

#include "unfriendly/graph.hpp"
#include "unfriendly/measure.hpp"
#include "unfriendly/rational.hpp"

namespace unfriendly {

// Normalized geometric measure centered at a vertex: weight
// (1+eps)^{-delta(x,y)} / K on the component of x, zero elsewhere.
struct BallMeasure {
    Vertex center = 0;
    Rational epsilon;
    Rational normalizer;              // K = sum of (1+eps)^{-delta}
    std::vector<Rational> weights;    // normalized; zero off-component
    std::vector<Vertex> component;    // vertices of the component of center

    // Restriction to the component of the center, as a full-support
    // measure on the induced vertex numbering (component order).
    VertexMeasure component_measure() const {
        std::vector<Rational> w;
        w.reserve(component.size());
        for (Vertex v : component) w.push_back(weights[static_cast<std::size_t>(v)]);
        return VertexMeasure(std::move(w));
    }
};

// eps = 1/d for the given degree bound; isolated-vertex graphs (d = 0)
// have no meaningful geometry, so callers use eps = 1 by convention.
inline Rational epsilon_for_degree(std::int64_t d) {
    if (d < 1)
        throw std::invalid_argument("epsilon_for_degree: need degree bound >= 1");
    return make_rational(1, static_cast<long>(d));
}

inline BallMeasure ball_measure(const FiniteGraph& g, Vertex x, const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("ball_measure: epsilon must be positive");
    const auto dist = graph_distance(g, x);
    // decay ratio (1+eps)^{-1}
    const Rational ratio = 1 / (1 + eps);
    BallMeasure bm;
    bm.center = x;
    bm.epsilon = eps;
    bm.weights.assign(static_cast<std::size_t>(g.vertex_count()), Rational(0));
    Rational k = 0;
    for (Vertex y = 0; y < g.vertex_count(); ++y) {
        Vertex d = dist[static_cast<std::size_t>(y)];
        if (d == kUnreachable) continue;
        bm.weights[static_cast<std::size_t>(y)] =
            pow_rational(ratio, static_cast<unsigned long>(d));
        k += bm.weights[static_cast<std::size_t>(y)];
        bm.component.push_back(y);
    }
    bm.normalizer = k;
    for (Vertex y : bm.component) bm.weights[static_cast<std::size_t>(y)] /= k;
    return bm;
}

// Ball sizes |B(x, r)| for r = 0..r_max; nondecreasing, starts at 1.
inline std::vector<std::int64_t> growth_profile(const FiniteGraph& g, Vertex x,
                                                std::int64_t r_max) {
    if (r_max < 0) throw std::invalid_argument("growth_profile: negative radius");
    const auto dist = graph_distance(g, x);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(r_max) + 1, 0);
    for (Vertex d : dist)
        if (d != kUnreachable && d <= r_max) ++counts[static_cast<std::size_t>(d)];
    for (std::size_t r = 1; r < counts.size(); ++r) counts[r] += counts[r - 1];
    return counts;
}

}  // namespace unfriendly
