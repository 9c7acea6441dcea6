#pragma once

// Seeded input generators shared by the unit tests and the acceptance run.

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "nodalpart/errors.hpp"
#include "nodalpart/partition.hpp"
#include "nodalpart/surgery.hpp"

namespace generators {

using namespace nodalpart;

// A straight segment along a random grid row or column whose ends lie on
// the boundary set or the surface boundary and which avoids singular
// vertices. It may cross the boundary set on the way. Returns nothing
// when the drawn line has no admissible segment.
inline std::optional<CutPath> random_cut(const Partition& p, std::mt19937_64& rng) {
    const auto& c = p.complex();
    const auto g = boundary_graph(p);
    std::vector<std::uint8_t> singular(c.num_vertices(), 0);
    for (const auto& s : g.singular) singular[s.vertex] = 1;

    const bool horizontal = rng() & 1;
    const int len = horizontal ? c.width() : c.height();
    const int across = horizontal ? c.height() : c.width();
    const int line = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(across - 1));
    const auto point = [&](int t) { return horizontal ? std::array<int, 2>{t, line} : std::array<int, 2>{line, t}; };
    const auto vertex = [&](int t) { return c.vertex_at(point(t)[0], point(t)[1]); };
    const auto edge = [&](int t) {  // from t to t + 1
        return horizontal ? c.horizontal_edge(t, line) : c.vertical_edge(line, t);
    };
    const auto endpoint_ok = [&](int t) {
        const int v = vertex(t);
        return !singular[v] && (c.vertex_on_boundary(v) || g.valence[v] > 0);
    };

    std::vector<int> starts;
    for (int t = 0; t <= len; ++t)
        if (endpoint_ok(t)) starts.push_back(t);
    if (starts.empty()) return std::nullopt;
    const int a = starts[rng() % starts.size()];
    const int dir = (a == len || (a > 0 && (rng() & 1))) ? -1 : 1;

    std::vector<std::array<int, 2>> pts{point(a)};
    for (int t = a + dir; t >= 0 && t <= len; t += dir) {
        const int e = edge(dir > 0 ? t - 1 : t);
        if (p.in_boundary_set(e) || c.edge_on_boundary(e)) return std::nullopt;
        if (singular[vertex(t)]) return std::nullopt;
        pts.push_back(point(t));
        if (endpoint_ok(t)) {
            // Interior crossings of the boundary set are allowed; stop at
            // the surface boundary or, now and then, at a crossing.
            if (c.vertex_on_boundary(vertex(t)) || (rng() % 3) == 0) break;
        }
        if (t == 0 || t == len) {
            if (!endpoint_ok(t)) return std::nullopt;
        }
    }
    if (!endpoint_ok(pts.back()[horizontal ? 0 : 1])) return std::nullopt;
    try {
        return classify_path(p, edges_from_points(c, pts));
    } catch (const InvalidInput&) {
        return std::nullopt;
    }
}

}  // namespace generators
