#include "nodalpart/complex.hpp"

#include <string>

#include "nodalpart/errors.hpp"
#include "nodalpart/union_find.hpp"

namespace nodalpart {

std::string_view to_string(Gluing g) {
    switch (g) {
        case Gluing::open: return "open";
        case Gluing::periodic: return "periodic";
        case Gluing::reversed: return "reversed";
    }
    return "?";
}

std::string_view to_string(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::rectangle: return "rectangle";
        case SurfaceKind::cylinder: return "cylinder";
        case SurfaceKind::moebius: return "moebius";
        case SurfaceKind::torus: return "torus";
        case SurfaceKind::klein: return "klein";
        case SurfaceKind::projective: return "projective";
    }
    return "?";
}

SurfaceKind surface_kind_from_string(std::string_view name) {
    for (auto k : {SurfaceKind::rectangle, SurfaceKind::cylinder, SurfaceKind::moebius,
                   SurfaceKind::torus, SurfaceKind::klein, SurfaceKind::projective}) {
        if (to_string(k) == name) return k;
    }
    throw InvalidInput("unknown surface '" + std::string(name) + "'");
}

bool is_orientable(SurfaceKind k) {
    return k == SurfaceKind::rectangle || k == SurfaceKind::cylinder || k == SurfaceKind::torus;
}

int expected_euler_characteristic(SurfaceKind k) {
    return (k == SurfaceKind::rectangle || k == SurfaceKind::projective) ? 1 : 0;
}

int expected_boundary_components(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::rectangle:
        case SurfaceKind::moebius: return 1;
        case SurfaceKind::cylinder: return 2;
        default: return 0;
    }
}

SurfaceSpec SurfaceSpec::preset(SurfaceKind kind, int width, int height) {
    SurfaceSpec s;
    s.width = width;
    s.height = height;
    switch (kind) {
        case SurfaceKind::rectangle: s.x_gluing = Gluing::open; s.y_gluing = Gluing::open; break;
        case SurfaceKind::cylinder: s.x_gluing = Gluing::open; s.y_gluing = Gluing::periodic; break;
        case SurfaceKind::moebius: s.x_gluing = Gluing::open; s.y_gluing = Gluing::reversed; break;
        case SurfaceKind::torus: s.x_gluing = Gluing::periodic; s.y_gluing = Gluing::periodic; break;
        case SurfaceKind::klein: s.x_gluing = Gluing::periodic; s.y_gluing = Gluing::reversed; break;
        case SurfaceKind::projective: s.x_gluing = Gluing::reversed; s.y_gluing = Gluing::reversed; break;
    }
    return s;
}

SurfaceSpec SurfaceSpec::preset(std::string_view name, int width, int height) {
    return preset(surface_kind_from_string(name), width, height);
}

SurfaceKind SurfaceSpec::kind() const {
    const int open = (x_gluing == Gluing::open) + (y_gluing == Gluing::open);
    const int rev = (x_gluing == Gluing::reversed) + (y_gluing == Gluing::reversed);
    if (open == 2) return SurfaceKind::rectangle;
    if (open == 1) return rev == 1 ? SurfaceKind::moebius : SurfaceKind::cylinder;
    if (rev == 0) return SurfaceKind::torus;
    if (rev == 1) return SurfaceKind::klein;
    return SurfaceKind::projective;
}

void SurfaceSpec::validate() const {
    if (width < 2 || height < 2) {
        throw InvalidInput("surface grid must be at least 2x2, got " + std::to_string(width) + "x" +
                           std::to_string(height));
    }
}

int CellComplex::neighbor(int f, Side s) const {
    const int e = face_edges_[f][s];
    if (edge_face_count_[e] < 2) return -1;
    const auto& inc = edge_faces_[e];
    // An edge can join a face to itself only on degenerate grids, which
    // validate() rules out.
    return (inc[0].face == f && inc[0].side == s) ? inc[1].face : inc[0].face;
}

int CellComplex::vertex_at(int i, int j) const {
    return raw_vertex_to_canon_[j * (spec_.width + 1) + i];
}

int CellComplex::horizontal_edge(int i, int j) const {
    return raw_edge_to_canon_[j * spec_.width + i];
}

int CellComplex::vertical_edge(int i, int j) const {
    return raw_edge_to_canon_[spec_.width * (spec_.height + 1) + j * (spec_.width + 1) + i];
}

namespace {

// Relabels union-find roots to 0..n-1 in first-seen scan order.
std::vector<int> canonical_ids(UnionFind& uf, int& count) {
    const int n = static_cast<int>(uf.size());
    std::vector<int> root_id(n, -1);
    std::vector<int> out(n);
    count = 0;
    for (int x = 0; x < n; ++x) {
        const int r = uf.find(x);
        if (root_id[r] < 0) root_id[r] = count++;
        out[x] = root_id[r];
    }
    return out;
}

}  // namespace

ComplexPtr build_complex(const SurfaceSpec& spec) {
    spec.validate();
    const int W = spec.width;
    const int H = spec.height;

    auto c = std::shared_ptr<CellComplex>(new CellComplex());
    c->spec_ = spec;

    const auto rv = [W](int i, int j) { return j * (W + 1) + i; };
    const int n_horizontal = W * (H + 1);
    const auto rh = [W](int i, int j) { return j * W + i; };
    const auto rvert = [W, n_horizontal](int i, int j) { return n_horizontal + j * (W + 1) + i; };
    const int n_raw_edges = n_horizontal + (W + 1) * H;

    UnionFind vuf((W + 1) * (H + 1));
    UnionFind euf(n_raw_edges);
    // Raw edges sitting on a reversed seam, where chart orientation flips.
    std::vector<std::uint8_t> reversed_seam(n_raw_edges, 0);

    switch (spec.x_gluing) {
        case Gluing::open: break;
        case Gluing::periodic:
            for (int j = 0; j <= H; ++j) vuf.unite(rv(0, j), rv(W, j));
            for (int j = 0; j < H; ++j) euf.unite(rvert(0, j), rvert(W, j));
            break;
        case Gluing::reversed:
            for (int j = 0; j <= H; ++j) vuf.unite(rv(0, j), rv(W, H - j));
            for (int j = 0; j < H; ++j) {
                euf.unite(rvert(0, j), rvert(W, H - 1 - j));
                reversed_seam[rvert(0, j)] = reversed_seam[rvert(W, j)] = 1;
            }
            break;
    }
    switch (spec.y_gluing) {
        case Gluing::open: break;
        case Gluing::periodic:
            for (int i = 0; i <= W; ++i) vuf.unite(rv(i, 0), rv(i, H));
            for (int i = 0; i < W; ++i) euf.unite(rh(i, 0), rh(i, H));
            break;
        case Gluing::reversed:
            for (int i = 0; i <= W; ++i) vuf.unite(rv(i, 0), rv(W - i, H));
            for (int i = 0; i < W; ++i) {
                euf.unite(rh(i, 0), rh(W - 1 - i, H));
                reversed_seam[rh(i, 0)] = reversed_seam[rh(i, H)] = 1;
            }
            break;
    }

    int nv = 0;
    int ne = 0;
    c->raw_vertex_to_canon_ = canonical_ids(vuf, nv);
    c->raw_edge_to_canon_ = canonical_ids(euf, ne);
    const auto& vmap = c->raw_vertex_to_canon_;
    const auto& emap = c->raw_edge_to_canon_;

    c->vertex_rep_.assign(nv, {-1, -1});
    for (int j = 0; j <= H; ++j) {
        for (int i = 0; i <= W; ++i) {
            auto& rep = c->vertex_rep_[vmap[rv(i, j)]];
            if (rep[0] < 0) rep = {i, j};
        }
    }

    c->edge_rep_.resize(ne);
    c->edge_vertices_.resize(ne);
    std::vector<std::uint8_t> seen(ne, 0);
    std::vector<std::uint8_t> edge_reversed(ne, 0);
    for (int j = 0; j <= H; ++j) {
        for (int i = 0; i < W; ++i) {
            const int e = emap[rh(i, j)];
            edge_reversed[e] |= reversed_seam[rh(i, j)];
            if (seen[e]) continue;
            seen[e] = 1;
            c->edge_rep_[e] = RawEdge{true, i, j};
            c->edge_vertices_[e] = {vmap[rv(i, j)], vmap[rv(i + 1, j)]};
        }
    }
    for (int j = 0; j < H; ++j) {
        for (int i = 0; i <= W; ++i) {
            const int e = emap[rvert(i, j)];
            edge_reversed[e] |= reversed_seam[rvert(i, j)];
            if (seen[e]) continue;
            seen[e] = 1;
            c->edge_rep_[e] = RawEdge{false, i, j};
            c->edge_vertices_[e] = {vmap[rv(i, j)], vmap[rv(i, j + 1)]};
        }
    }
    for (int e = 0; e < ne; ++e) {
        if (c->edge_vertices_[e][0] == c->edge_vertices_[e][1]) {
            throw InvariantViolation("edge " + std::to_string(e) + " is a loop");
        }
    }

    const int nf = W * H;
    c->face_edges_.resize(nf);
    c->face_vertices_.resize(nf);
    c->edge_faces_.assign(ne, {});
    c->edge_face_count_.assign(ne, 0);
    for (int j = 0; j < H; ++j) {
        for (int i = 0; i < W; ++i) {
            const int f = j * W + i;
            c->face_edges_[f] = {emap[rh(i, j)], emap[rvert(i + 1, j)], emap[rh(i, j + 1)],
                                 emap[rvert(i, j)]};
            c->face_vertices_[f] = {vmap[rv(i, j)], vmap[rv(i + 1, j)], vmap[rv(i + 1, j + 1)],
                                    vmap[rv(i, j + 1)]};
            for (int s = 0; s < 4; ++s) {
                const int e = c->face_edges_[f][s];
                auto& count = c->edge_face_count_[e];
                if (count >= 2) {
                    throw InvariantViolation("edge " + std::to_string(e) + " has more than two faces");
                }
                c->edge_faces_[e][count++] = FaceSide{f, static_cast<Side>(s)};
            }
        }
    }

    c->edge_parity_.assign(ne, 0);
    c->vertex_on_boundary_.assign(nv, 0);
    for (int e = 0; e < ne; ++e) {
        if (c->edge_face_count_[e] == 2) {
            c->edge_parity_[e] = edge_reversed[e] ? -1 : 1;
        } else {
            c->vertex_on_boundary_[c->edge_vertices_[e][0]] = 1;
            c->vertex_on_boundary_[c->edge_vertices_[e][1]] = 1;
        }
    }
    return c;
}

int euler_characteristic(const CellComplex& c) {
    return c.num_vertices() - c.num_edges() + c.num_faces();
}

int boundary_components(const CellComplex& c) {
    UnionFind uf(c.num_vertices());
    std::vector<std::uint8_t> touched(c.num_vertices(), 0);
    for (int e = 0; e < c.num_edges(); ++e) {
        if (!c.edge_on_boundary(e)) continue;
        const auto [a, b] = c.edge_vertices(e);
        uf.unite(a, b);
        touched[a] = touched[b] = 1;
    }
    int count = 0;
    for (int v = 0; v < c.num_vertices(); ++v) {
        if (touched[v] && uf.find(v) == v) ++count;
    }
    return count;
}

}  // namespace nodalpart
