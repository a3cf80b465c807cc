#pragma once

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "unfriendly/graph.hpp"

namespace unfriendly {

enum class ScheduleMode { Cyclic, FrozenBoundary };

// A finite cyclic sequence of G-independent vertex sets. Cycling the
// classes schedules every non-frozen vertex once per period, so each is
// scheduled infinitely often.
class Schedule {
public:
    Schedule(const FiniteGraph& g, std::vector<std::vector<Vertex>> classes,
             ScheduleMode mode = ScheduleMode::Cyclic,
             std::vector<Vertex> frozen = {})
        : classes_(std::move(classes)), mode_(mode), frozen_(std::move(frozen)) {
        std::sort(frozen_.begin(), frozen_.end());
        std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
        for (auto& cls : classes_) {
            std::sort(cls.begin(), cls.end());
            for (Vertex x : cls) {
                g.check_vertex(x);
                if (seen[static_cast<std::size_t>(x)])
                    throw std::invalid_argument(
                        "schedule: vertex " + std::to_string(x) +
                        " appears in more than one class");
                seen[static_cast<std::size_t>(x)] = 1;
                for (Vertex y : g.neighbors(x)) {
                    if (std::binary_search(cls.begin(), cls.end(), y))
                        throw std::invalid_argument(
                            "schedule: class not independent, edge (" +
                            std::to_string(x) + "," + std::to_string(y) + ")");
                }
            }
        }
        for (Vertex f : frozen_) {
            g.check_vertex(f);
            if (seen[static_cast<std::size_t>(f)])
                throw std::invalid_argument("schedule: frozen vertex " +
                                            std::to_string(f) + " is scheduled");
            seen[static_cast<std::size_t>(f)] = 1;
        }
        for (Vertex x = 0; x < g.vertex_count(); ++x)
            if (!seen[static_cast<std::size_t>(x)])
                throw std::invalid_argument("schedule: vertex " + std::to_string(x) +
                                            " is never scheduled");
        if (mode_ == ScheduleMode::Cyclic && !frozen_.empty())
            throw std::invalid_argument("schedule: cyclic mode cannot freeze vertices");
    }

    std::size_t period() const { return classes_.size(); }
    ScheduleMode mode() const { return mode_; }
    const std::vector<Vertex>& frozen() const { return frozen_; }
    const std::vector<std::vector<Vertex>>& classes() const { return classes_; }

    const std::vector<Vertex>& nth_class(std::uint64_t n) const {
        return classes_[n % classes_.size()];
    }

private:
    std::vector<std::vector<Vertex>> classes_;
    ScheduleMode mode_;
    std::vector<Vertex> frozen_;
};

// Proper greedy coloring in ascending vertex-id order; color classes
// become the cyclic schedule. Uses at most max_degree + 1 classes.
inline Schedule greedy_schedule(const FiniteGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> color(n, -1);
    std::vector<std::vector<Vertex>> classes;
    std::vector<char> used;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        used.assign(classes.size() + 1, 0);
        for (Vertex y : g.neighbors(x)) {
            int cy = color[static_cast<std::size_t>(y)];
            if (cy >= 0 && static_cast<std::size_t>(cy) < used.size())
                used[static_cast<std::size_t>(cy)] = 1;
        }
        std::size_t c = 0;
        while (used[c]) ++c;
        if (c == classes.size()) classes.emplace_back();
        color[static_cast<std::size_t>(x)] = static_cast<int>(c);
        classes[c].push_back(x);
    }
    if (classes.empty()) classes.emplace_back();  // empty graph still cycles
    return Schedule(g, std::move(classes));
}

// One singleton class per vertex, in the given order.
inline Schedule singleton_schedule(const FiniteGraph& g,
                                   const std::vector<Vertex>& order) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    if (order.size() != n)
        throw std::invalid_argument("schedule: order is not a permutation");
    std::vector<char> seen(n, 0);
    for (Vertex x : order) {
        g.check_vertex(x);
        if (seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("schedule: order is not a permutation");
        seen[static_cast<std::size_t>(x)] = 1;
    }
    std::vector<std::vector<Vertex>> classes;
    classes.reserve(n);
    for (Vertex x : order) classes.push_back({x});
    if (classes.empty()) classes.emplace_back();
    return Schedule(g, std::move(classes));
}

// Serialization: header "period k mode cyclic|frozen", then one line per
// class of space-separated sorted ids. Frozen mode appends a line
// "frozen ..." listing the frozen vertices.
inline void write_schedule(std::ostream& os, const Schedule& s) {
    os << "period " << s.period() << " mode "
       << (s.mode() == ScheduleMode::Cyclic ? "cyclic" : "frozen") << '\n';
    for (const auto& cls : s.classes()) {
        for (std::size_t i = 0; i < cls.size(); ++i)
            os << (i ? " " : "") << cls[i];
        os << '\n';
    }
    if (s.mode() == ScheduleMode::FrozenBoundary) {
        os << "frozen";
        for (Vertex f : s.frozen()) os << ' ' << f;
        os << '\n';
    }
}

inline Schedule read_schedule(std::istream& is, const FiniteGraph& g) {
    std::string kw, modeword;
    std::size_t k = 0;
    if (!(is >> kw >> k) || kw != "period")
        throw std::runtime_error("schedule file: bad header");
    if (!(is >> kw >> modeword) || kw != "mode")
        throw std::runtime_error("schedule file: bad header");
    ScheduleMode mode = modeword == "cyclic" ? ScheduleMode::Cyclic
                      : modeword == "frozen" ? ScheduleMode::FrozenBoundary
                      : throw std::runtime_error("schedule file: unknown mode");
    is.ignore();
    std::vector<std::vector<Vertex>> classes(k);
    std::string line;
    for (auto& cls : classes) {
        if (!std::getline(is, line))
            throw std::runtime_error("schedule file: truncated");
        std::istringstream ls(line);
        Vertex v;
        while (ls >> v) cls.push_back(v);
    }
    std::vector<Vertex> frozen;
    if (mode == ScheduleMode::FrozenBoundary) {
        if (!std::getline(is, line))
            throw std::runtime_error("schedule file: missing frozen line");
        std::istringstream ls(line);
        ls >> kw;
        if (kw != "frozen") throw std::runtime_error("schedule file: missing frozen line");
        Vertex v;
        while (ls >> v) frozen.push_back(v);
    }
    return Schedule(g, std::move(classes), mode, std::move(frozen));
}

}  // namespace unfriendly
