#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "unfriendly/graph.hpp"

namespace unfriendly {

// Total 2-coloring, one value in {0,1} per vertex.
using Coloring = std::vector<std::uint8_t>;

inline Coloring zeros_coloring(Vertex n) {
    return Coloring(static_cast<std::size_t>(n), 0);
}

inline void write_coloring(std::ostream& os, const Coloring& c) {
    for (auto v : c) os << int(v) << '\n';
}

inline Coloring read_coloring(std::istream& is) {
    Coloring c;
    int v;
    while (is >> v) {
        if (v != 0 && v != 1)
            throw std::runtime_error("coloring file: values must be 0 or 1");
        c.push_back(static_cast<std::uint8_t>(v));
    }
    return c;
}

}  // namespace unfriendly
