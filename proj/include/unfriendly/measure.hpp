#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "unfriendly/graph.hpp"
#include "unfriendly/rational.hpp"

namespace unfriendly {

// Atomic vertex measure with strictly positive exact rational weights.
class VertexMeasure {
public:
    explicit VertexMeasure(std::vector<Rational> weights)
        : weights_(std::move(weights)) {
        total_ = 0;
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (weights_[i] <= 0)
                throw std::invalid_argument("measure: nonpositive weight at vertex " +
                                            std::to_string(i));
            total_ += weights_[i];
        }
    }

    static VertexMeasure uniform(Vertex n) {
        if (n <= 0) throw std::invalid_argument("measure: need at least one vertex");
        return VertexMeasure(std::vector<Rational>(
            static_cast<std::size_t>(n), make_rational(1, static_cast<long>(n))));
    }

    Vertex vertex_count() const { return static_cast<Vertex>(weights_.size()); }
    const Rational& weight(Vertex x) const {
        if (x < 0 || x >= vertex_count())
            throw std::out_of_range("measure: vertex id out of range");
        return weights_[static_cast<std::size_t>(x)];
    }
    const Rational& total() const { return total_; }
    bool is_probability() const { return total_ == 1; }

    VertexMeasure normalized() const {
        std::vector<Rational> w(weights_);
        for (auto& q : w) q /= total_;
        return VertexMeasure(std::move(w));
    }

    // Mass of a vertex set.
    Rational mass(const std::vector<Vertex>& vs) const {
        Rational out = 0;
        for (Vertex v : vs) out += weight(v);
        return out;
    }

private:
    std::vector<Rational> weights_;
    Rational total_;
};

// Radon-Nikodym cocycle of an atomic full-support measure: mu(y)/mu(x).
inline Rational cocycle(const VertexMeasure& mu, Vertex x, Vertex y) {
    return mu.weight(y) / mu.weight(x);
}

// Checks 1 - 1/d <= mu(y)/mu(x) <= 1 + 1/d on every edge, d = max degree.
// Returns the first violating edge if any.
inline std::optional<Edge> cocycle_bound_violation(const FiniteGraph& g,
                                                   const VertexMeasure& mu) {
    if (g.vertex_count() != mu.vertex_count())
        throw std::invalid_argument("cocycle bound: measure/graph size mismatch");
    if (g.max_degree() == 0) return std::nullopt;
    const Rational eps = make_rational(1, static_cast<long>(g.max_degree()));
    const Rational lo = 1 - eps;
    const Rational hi = 1 + eps;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        for (Vertex y : g.neighbors(x)) {
            if (y < x) continue;
            Rational rho = cocycle(mu, x, y);
            if (rho < lo || rho > hi) return Edge{x, y};
            Rational inv = 1 / rho;
            if (inv < lo || inv > hi) return Edge{y, x};
        }
    }
    return std::nullopt;
}

inline bool cocycle_bound_ok(const FiniteGraph& g, const VertexMeasure& mu) {
    return !cocycle_bound_violation(g, mu).has_value();
}

// File format: one rational per line, lowest terms.
inline void write_measure(std::ostream& os, const VertexMeasure& mu) {
    for (Vertex x = 0; x < mu.vertex_count(); ++x)
        os << to_string(mu.weight(x)) << '\n';
}

inline VertexMeasure read_measure(std::istream& is) {
    std::vector<Rational> weights;
    std::string line;
    while (is >> line) weights.push_back(parse_rational(line));
    if (weights.empty()) throw std::runtime_error("measure file: empty");
    return VertexMeasure(std::move(weights));
}

}  // namespace unfriendly
