#include "nodalpart/surgery.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "nodalpart/errors.hpp"

namespace nodalpart {

Partition refine(const Partition& p, int factor) {
    if (factor < 1) throw InvalidInput("refine factor must be positive");
    if (factor == 1) return p;
    const CellComplex& c = p.complex();
    SurfaceSpec spec = c.spec();
    spec.width *= factor;
    spec.height *= factor;
    auto fine = build_complex(spec);

    std::vector<int> labels(fine->num_faces());
    for (int j = 0; j < spec.height; ++j) {
        for (int i = 0; i < spec.width; ++i) {
            labels[fine->face(i, j)] = p.domain_of(c.face(i / factor, j / factor));
        }
    }
    std::vector<int> walls;
    for (int e : p.walls()) {
        const RawEdge& r = c.edge_representative(e);
        for (int a = 0; a < factor; ++a) {
            walls.push_back(r.horizontal ? fine->horizontal_edge(r.i * factor + a, r.j * factor)
                                         : fine->vertical_edge(r.i * factor, r.j * factor + a));
        }
    }
    return Partition::from_labels(fine, labels, walls);
}

namespace {

// Faces incident to each vertex.
std::vector<std::vector<int>> vertex_stars(const CellComplex& c) {
    std::vector<std::vector<int>> stars(c.num_vertices());
    for (int f = 0; f < c.num_faces(); ++f) {
        for (int v : c.face_vertices(f)) {
            if (stars[v].empty() || stars[v].back() != f) stars[v].push_back(f);
        }
    }
    return stars;
}

}  // namespace

Partition normalize(const Partition& p, int refine_factor) {
    if (p.has_walls()) throw InvalidInput("normalize expects a partition without walls");
    if (is_normal(p)) return p;

    const auto before = invariants(p);
    Partition q = refine(p, refine_factor);
    for (int pass = 0;; ++pass) {
        const auto bad = non_normal_vertices(q);
        if (bad.empty()) break;
        if (pass > 8) throw InvariantViolation("normalization did not converge");

        const CellComplex& c = q.complex();
        const auto g = boundary_graph(q);
        const auto stars = vertex_stars(c);
        const auto singular = [&](int v) {
            return c.vertex_on_boundary(v) ? g.valence[v] >= 1 : g.valence[v] >= 3;
        };

        std::vector<int> labels = q.domains();
        int fresh = q.num_domains();
        for (int v : bad) {
            for (int f : stars[v]) {
                for (int u : c.face_vertices(f)) {
                    if (u != v && singular(u)) {
                        throw InvalidInput("refine factor " + std::to_string(refine_factor) +
                                           " too small: non-normal vertex " + std::to_string(v) +
                                           " sits next to another singular vertex");
                    }
                }
                labels[f] = fresh;
            }
            ++fresh;
        }
        q = Partition::from_labels(q.complex_ptr(), labels);
    }

    const auto after = invariants(q);
    if (after.delta != before.delta || after.omega != before.omega) {
        throw InvariantViolation("normalization changed (delta, omega) from (" + std::to_string(before.delta) + ", " +
                                 std::to_string(before.omega) + ") to (" + std::to_string(after.delta) + ", " +
                                 std::to_string(after.omega) + ")");
    }
    return q;
}

std::string_view to_string(PathEnd e) {
    switch (e) {
        case PathEnd::surface_boundary: return "surface-boundary";
        case PathEnd::partition_boundary: return "partition-boundary";
        case PathEnd::cycle: return "cycle";
    }
    return "?";
}

std::vector<int> edges_from_points(const CellComplex& c, std::span<const std::array<int, 2>> points) {
    const int W = c.width();
    const int H = c.height();
    for (const auto& [i, j] : points) {
        if (i < 0 || i > W || j < 0 || j > H) {
            throw InvalidInput("grid point (" + std::to_string(i) + ", " + std::to_string(j) + ") outside the chart");
        }
    }
    std::vector<int> edges;
    for (std::size_t k = 1; k < points.size(); ++k) {
        const auto [i0, j0] = points[k - 1];
        const auto [i1, j1] = points[k];
        if (c.vertex_at(i0, j0) == c.vertex_at(i1, j1)) continue;
        if (j0 == j1 && std::abs(i1 - i0) == 1) {
            edges.push_back(c.horizontal_edge(std::min(i0, i1), j0));
        } else if (i0 == i1 && std::abs(j1 - j0) == 1) {
            edges.push_back(c.vertical_edge(i0, std::min(j0, j1)));
        } else {
            throw InvalidInput("points (" + std::to_string(i0) + ", " + std::to_string(j0) + ") and (" +
                               std::to_string(i1) + ", " + std::to_string(j1) + ") are not grid neighbours");
        }
    }
    return edges;
}

namespace {

// Walks the edge list from `start`; empty result if the edges do not chain.
std::vector<int> chain_vertices(const CellComplex& c, std::span<const int> edges, int start) {
    std::vector<int> verts{start};
    int cur = start;
    for (int e : edges) {
        const auto [a, b] = c.edge_vertices(e);
        if (a == cur) {
            cur = b;
        } else if (b == cur) {
            cur = a;
        } else {
            return {};
        }
        verts.push_back(cur);
    }
    return verts;
}

}  // namespace

CutPath classify_path(const Partition& p, std::span<const int> edges) {
    const CellComplex& c = p.complex();
    if (edges.empty()) throw PathError("cut path is empty");
    std::vector<int> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw PathError("cut path repeats an edge");
    }
    for (int e : edges) {
        if (e < 0 || e >= c.num_edges()) throw PathError("edge id out of range: " + std::to_string(e));
        if (c.edge_on_boundary(e)) throw PathError("cut path runs along the surface boundary at edge " + std::to_string(e));
        if (p.in_boundary_set(e)) throw PathError("cut path runs along the boundary set at edge " + std::to_string(e));
    }

    CutPath path;
    path.edges.assign(edges.begin(), edges.end());
    const auto [a0, b0] = c.edge_vertices(edges.front());
    path.vertices = chain_vertices(c, edges, a0);
    if (path.vertices.empty()) path.vertices = chain_vertices(c, edges, b0);
    if (path.vertices.empty()) throw PathError("cut path edges are not consecutive");

    const bool closed = path.vertices.front() == path.vertices.back();
    std::vector<int> distinct(path.vertices.begin(), path.vertices.end() - (closed ? 1 : 0));
    std::sort(distinct.begin(), distinct.end());
    if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end()) {
        throw PathError("cut path is not simple");
    }

    const auto g = boundary_graph(p);
    for (int v : path.vertices) {
        const bool singular = c.vertex_on_boundary(v) ? g.valence[v] >= 1 : g.valence[v] >= 3;
        if (singular) throw PathError("cut path touches singular vertex " + std::to_string(v));
    }

    const std::size_t n = path.vertices.size();
    // For a cycle every vertex is interior; the last entry repeats the first.
    for (std::size_t k = closed ? 0 : 1; k + 1 < n; ++k) {
        const int v = path.vertices[k];
        if (c.vertex_on_boundary(v)) {
            throw PathError("cut path passes through the surface boundary at vertex " + std::to_string(v));
        }
        if (g.valence[v] > 0) ++path.crossings;
    }

    if (closed) {
        path.start = path.end = PathEnd::cycle;
        return path;
    }
    const auto end_kind = [&](int v) {
        if (c.vertex_on_boundary(v)) return PathEnd::surface_boundary;
        if (g.valence[v] > 0) return PathEnd::partition_boundary;
        throw PathError("cut path dangles at vertex " + std::to_string(v) +
                        " (ends must lie on the surface boundary or the boundary set)");
    };
    path.start = end_kind(path.vertices.front());
    path.end = end_kind(path.vertices.back());
    return path;
}

Partition cut(const Partition& p, const CutPath& path) {
    const CutPath checked = classify_path(p, path.edges);
    std::vector<int> walls = p.walls();
    walls.insert(walls.end(), checked.edges.begin(), checked.edges.end());
    Partition q = Partition::from_labels(p.complex_ptr(), p.domains(), walls);

    const SurfaceKind kind = p.complex().kind();
    if (kind == SurfaceKind::rectangle || kind == SurfaceKind::moebius) {
        const int before = invariants(p).delta;
        const int after = invariants(q).delta;
        if (before != after) {
            throw InvariantViolation("cut changed delta from " + std::to_string(before) + " to " +
                                     std::to_string(after));
        }
    }
    return q;
}

CutReport cut_report(const Partition& p, const Partition& result, const CutPath& path) {
    CutReport r;
    r.path = path;
    r.before = invariants(p);
    r.after = invariants(result);
    const auto domains = domain_reports(p);
    r.all_simply_connected_before = std::all_of(domains.begin(), domains.end(), [](const DomainReport& d) {
        return d.orientable && d.genus == 0 && d.boundary_circles == 1;
    });
    return r;
}

bool ComplementClass::disk_and_moebius() const {
    if (pieces.size() != 2) return false;
    return (pieces[0].is_disk() && pieces[1].is_moebius_band()) ||
           (pieces[1].is_disk() && pieces[0].is_moebius_band());
}

ComplementClass classify_circle_complement(const ComplexPtr& c, std::span<const int> cycle) {
    if (!c || c->kind() != SurfaceKind::projective) {
        throw InvalidInput("circle complements are classified on the projective plane only");
    }
    if (cycle.empty()) throw InvalidInput("cycle is empty");

    std::vector<int> degree(c->num_vertices(), 0);
    std::vector<int> sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidInput("cycle repeats an edge");
    }
    for (int e : cycle) {
        if (e < 0 || e >= c->num_edges()) throw InvalidInput("edge id out of range: " + std::to_string(e));
        ++degree[c->edge_vertices(e)[0]];
        ++degree[c->edge_vertices(e)[1]];
    }
    for (int v = 0; v < c->num_vertices(); ++v) {
        if (degree[v] != 0 && degree[v] != 2) throw InvalidInput("edge set is not a simple cycle");
    }
    // Connectedness: walking from the first edge must reach every edge.
    {
        std::vector<std::uint8_t> used(cycle.size(), 0);
        int cur = c->edge_vertices(cycle[0])[1];
        const int start = c->edge_vertices(cycle[0])[0];
        used[0] = 1;
        std::size_t walked = 1;
        while (cur != start) {
            bool moved = false;
            for (std::size_t k = 0; k < cycle.size(); ++k) {
                if (used[k]) continue;
                const auto [a, b] = c->edge_vertices(cycle[k]);
                if (a == cur || b == cur) {
                    cur = (a == cur) ? b : a;
                    used[k] = 1;
                    ++walked;
                    moved = true;
                    break;
                }
            }
            if (!moved) break;
        }
        if (cur != start || walked != cycle.size()) throw InvalidInput("edge set is not a single simple cycle");
    }

    const std::vector<int> labels(c->num_faces(), 0);
    const auto p = Partition::from_labels(c, labels, cycle);
    ComplementClass out;
    for (const auto& d : domain_reports(p)) {
        out.pieces.push_back({d.faces, d.chi, d.orientable, d.boundary_circles});
    }
    if (!(out.one_disk() || out.disk_and_moebius())) {
        std::string desc;
        for (const auto& piece : out.pieces) {
            desc += " (chi=" + std::to_string(piece.chi) + ", orientable=" + (piece.orientable ? "1" : "0") +
                    ", q=" + std::to_string(piece.boundary_circles) + ")";
        }
        throw InvariantViolation("circle complement is neither a disk nor a disk and a Moebius band:" + desc);
    }
    return out;
}

}  // namespace nodalpart
