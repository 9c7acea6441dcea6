#include "nodalpart/partition.hpp"

#include <algorithm>
#include <string>

#include "nodalpart/errors.hpp"
#include "nodalpart/union_find.hpp"
#include "partition_detail.hpp"

namespace nodalpart {

namespace detail {

std::array<std::array<int, 2>, 2> matched_corners(const CellComplex& c, int e) {
    const auto& inc = c.edge_faces(e);
    const auto& ca = kSideCorners[inc[0].side];
    const auto& cb = kSideCorners[inc[1].side];
    const auto& va = c.face_vertices(inc[0].face);
    const auto& vb = c.face_vertices(inc[1].face);
    const int fa = inc[0].face * 4;
    const int fb = inc[1].face * 4;
    if (va[ca[0]] == vb[cb[0]]) {
        return {{{fa + ca[0], fb + cb[0]}, {fa + ca[1], fb + cb[1]}}};
    }
    return {{{fa + ca[0], fb + cb[1]}, {fa + ca[1], fb + cb[0]}}};
}

SectorClasses sector_classes(const Partition& p) {
    const CellComplex& c = p.complex();
    UnionFind uf(static_cast<std::size_t>(c.num_faces()) * 4);
    for (int e = 0; e < c.num_edges(); ++e) {
        if (c.edge_face_count(e) != 2 || p.in_boundary_set(e)) continue;
        for (const auto& [a, b] : matched_corners(c, e)) uf.unite(a, b);
    }
    SectorClasses out;
    const int n = c.num_faces() * 4;
    out.corner_class.assign(n, -1);
    std::vector<int> root_class(n, -1);
    for (int k = 0; k < n; ++k) {
        const int r = uf.find(k);
        if (root_class[r] < 0) {
            root_class[r] = out.count++;
            out.class_vertex.push_back(c.face_vertices(k / 4)[k % 4]);
            out.class_domain.push_back(p.domain_of(k / 4));
        }
        out.corner_class[k] = root_class[r];
    }
    return out;
}

}  // namespace detail

Partition Partition::from_labels(ComplexPtr complex, std::span<const int> labels,
                                 std::span<const int> wall_edges) {
    if (!complex) throw InvalidInput("partition needs a complex");
    const CellComplex& c = *complex;
    if (static_cast<int>(labels.size()) != c.num_faces()) {
        throw InvalidInput("expected " + std::to_string(c.num_faces()) + " face labels, got " +
                           std::to_string(labels.size()));
    }

    Partition p;
    p.complex_ = std::move(complex);
    p.wall_flag_.assign(c.num_edges(), 0);
    for (int e : wall_edges) {
        if (e < 0 || e >= c.num_edges()) throw InvalidInput("wall edge id out of range: " + std::to_string(e));
        if (c.edge_on_boundary(e)) throw InvalidInput("wall edge lies on the surface boundary: " + std::to_string(e));
        p.wall_flag_[e] = 1;
    }
    for (int e = 0; e < c.num_edges(); ++e) {
        if (p.wall_flag_[e]) p.walls_.push_back(e);
    }

    UnionFind uf(c.num_faces());
    for (int e = 0; e < c.num_edges(); ++e) {
        if (c.edge_face_count(e) != 2 || p.wall_flag_[e]) continue;
        const auto& inc = c.edge_faces(e);
        if (labels[inc[0].face] == labels[inc[1].face]) uf.unite(inc[0].face, inc[1].face);
    }
    p.domain_.assign(c.num_faces(), -1);
    std::vector<int> root_id(c.num_faces(), -1);
    for (int f = 0; f < c.num_faces(); ++f) {
        const int r = uf.find(f);
        if (root_id[r] < 0) root_id[r] = p.num_domains_++;
        p.domain_[f] = root_id[r];
    }

    if (!p.walls_.empty()) {
        std::vector<int> valence(c.num_vertices(), 0);
        for (int e = 0; e < c.num_edges(); ++e) {
            if (!p.in_boundary_set(e)) continue;
            ++valence[c.edge_vertices(e)[0]];
            ++valence[c.edge_vertices(e)[1]];
        }
        for (int v = 0; v < c.num_vertices(); ++v) {
            if (valence[v] == 1 && !c.vertex_on_boundary(v)) {
                throw InvalidInput("wall dangles at vertex " + std::to_string(v) +
                                   " (a crack must end on the surface boundary or the boundary set)");
            }
        }
    }
    return p;
}

std::vector<int> Partition::domain_faces(int id) const {
    std::vector<int> out;
    for (int f = 0; f < static_cast<int>(domain_.size()); ++f) {
        if (domain_[f] == id) out.push_back(f);
    }
    return out;
}

bool Partition::is_wall(int edge) const { return wall_flag_[edge] != 0; }

bool Partition::in_boundary_set(int edge) const {
    if (wall_flag_[edge]) return true;
    const CellComplex& c = *complex_;
    if (c.edge_face_count(edge) != 2) return false;
    const auto& inc = c.edge_faces(edge);
    return domain_[inc[0].face] != domain_[inc[1].face];
}

int BoundaryGraph::interior_singular_with_valence(int nu) const {
    return static_cast<int>(std::count_if(singular.begin(), singular.end(), [nu](const SingularVertex& s) {
        return !s.on_surface_boundary && s.valence == nu;
    }));
}

int BoundaryGraph::boundary_singular_with_valence(int rho) const {
    return static_cast<int>(std::count_if(singular.begin(), singular.end(), [rho](const SingularVertex& s) {
        return s.on_surface_boundary && s.valence == rho;
    }));
}

BoundaryGraph boundary_graph(const Partition& p) {
    const CellComplex& c = p.complex();
    BoundaryGraph g;
    g.valence.assign(c.num_vertices(), 0);

    UnionFind uf(c.num_vertices());
    std::vector<std::uint8_t> touched(c.num_vertices(), 0);
    for (int e = 0; e < c.num_edges(); ++e) {
        const bool in_set = p.in_boundary_set(e);
        if (!in_set && !c.edge_on_boundary(e)) continue;
        const auto [a, b] = c.edge_vertices(e);
        uf.unite(a, b);
        touched[a] = touched[b] = 1;
        if (in_set) {
            g.edges.push_back(e);
            ++g.valence[a];
            ++g.valence[b];
        }
    }

    std::vector<std::uint8_t> root_on_boundary(c.num_vertices(), 0);
    for (int v = 0; v < c.num_vertices(); ++v) {
        if (touched[v] && c.vertex_on_boundary(v)) root_on_boundary[uf.find(v)] = 1;
    }
    for (int v = 0; v < c.num_vertices(); ++v) {
        if (!touched[v] || uf.find(v) != v) continue;
        ++g.components_with_surface_boundary;
        if (!root_on_boundary[v]) ++g.interior_components;
    }
    g.surface_boundary_components = boundary_components(c);

    for (int v = 0; v < c.num_vertices(); ++v) {
        const int nu = g.valence[v];
        if (c.vertex_on_boundary(v)) {
            if (nu >= 1) g.singular.push_back({v, true, nu, nu});
        } else if (nu >= 3) {
            g.singular.push_back({v, false, nu, nu - 2});
        }
    }
    for (const auto& s : g.singular) g.index_sum += s.index;
    return g;
}

std::vector<bool> domain_orientability(const Partition& p) {
    const CellComplex& c = p.complex();
    ParityUnionFind puf(c.num_faces());
    std::vector<bool> orientable(p.num_domains(), true);
    for (int e = 0; e < c.num_edges(); ++e) {
        if (c.edge_face_count(e) != 2 || p.in_boundary_set(e)) continue;
        const auto& inc = c.edge_faces(e);
        if (!puf.unite(inc[0].face, inc[1].face, c.edge_parity(e) < 0)) {
            orientable[p.domain_of(inc[0].face)] = false;
        }
    }
    return orientable;
}

InvariantReport invariants(const Partition& p) { return invariants(p, boundary_graph(p)); }

InvariantReport invariants(const Partition& p, const BoundaryGraph& g) {
    const CellComplex& c = p.complex();
    InvariantReport r;
    r.kappa = p.num_domains();
    r.beta = g.components_with_surface_boundary - g.surface_boundary_components;
    r.beta_interior = g.interior_components;
    if (g.index_sum % 2 != 0) {
        throw InvariantViolation("singular index sum is odd (" + std::to_string(g.index_sum) + ")");
    }
    r.sigma = g.sigma();
    r.domain_orientable = domain_orientability(p);
    r.omega = std::find(r.domain_orientable.begin(), r.domain_orientable.end(), false) !=
                      r.domain_orientable.end()
                  ? 1
                  : 0;
    r.delta = r.omega + r.beta + r.sigma - r.kappa;

    if (r.kappa < 1) throw InvariantViolation("partition has no domains");
    if (r.omega == 1 && is_orientable(c.kind())) {
        throw InvariantViolation("non-orientable domain on an orientable surface");
    }
    // With two boundary circles a wall joining them legitimately makes beta negative.
    if (g.surface_boundary_components <= 1 && r.beta < 0) {
        throw InvariantViolation("beta is negative (" + std::to_string(r.beta) + ")");
    }
    return r;
}

std::string_view to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::pass: return "pass";
        case VerdictStatus::fail: return "fail";
        case VerdictStatus::report_only: return "report-only";
        case VerdictStatus::conjecture: return "conjecture";
    }
    return "?";
}

Verdict verify_euler(SurfaceKind kind, const InvariantReport& r) {
    Verdict v;
    v.kind = kind;
    v.measured_defect = r.defect();
    switch (kind) {
        case SurfaceKind::rectangle: v.expected_defect = 1; break;
        case SurfaceKind::moebius:
        case SurfaceKind::projective:
        case SurfaceKind::klein: v.expected_defect = 0; break;
        case SurfaceKind::cylinder:
        case SurfaceKind::torus: break;
    }
    if (kind == SurfaceKind::projective || kind == SurfaceKind::klein) {
        v.status = VerdictStatus::conjecture;
    } else if (!v.expected_defect) {
        v.status = VerdictStatus::report_only;
    } else {
        v.status = v.matches_expected() ? VerdictStatus::pass : VerdictStatus::fail;
    }
    return v;
}

Verdict verify_euler(const Partition& p) { return verify_euler(p.complex().kind(), invariants(p)); }

std::string DomainReport::classification() const {
    return (orientable ? "S(0," : "S(1,") + std::to_string(genus) + "," + std::to_string(boundary_circles) + ")";
}

std::vector<DomainReport> domain_reports(const Partition& p) {
    const CellComplex& c = p.complex();
    const int k = p.num_domains();
    std::vector<DomainReport> out(k);
    for (int d = 0; d < k; ++d) out[d].id = d;

    const auto sectors = detail::sector_classes(p);
    std::vector<int> chi(k, 0);
    for (int f = 0; f < c.num_faces(); ++f) {
        ++out[p.domain_of(f)].faces;
        ++chi[p.domain_of(f)];
    }
    for (int s = 0; s < sectors.count; ++s) ++chi[sectors.class_domain[s]];

    // Boundary circles of each completion: every boundary edge copy joins
    // the two sector classes at its ends.
    UnionFind circles(sectors.count);
    std::vector<std::uint8_t> on_circle(sectors.count, 0);
    const auto add_boundary_copy = [&](int face, Side side) {
        const auto& corners = kSideCorners[side];
        const int a = sectors.corner_class[face * 4 + corners[0]];
        const int b = sectors.corner_class[face * 4 + corners[1]];
        circles.unite(a, b);
        on_circle[a] = on_circle[b] = 1;
    };
    for (int e = 0; e < c.num_edges(); ++e) {
        const auto& inc = c.edge_faces(e);
        if (c.edge_face_count(e) == 1) {
            --chi[p.domain_of(inc[0].face)];
            add_boundary_copy(inc[0].face, inc[0].side);
        } else if (p.in_boundary_set(e)) {
            --chi[p.domain_of(inc[0].face)];
            --chi[p.domain_of(inc[1].face)];
            add_boundary_copy(inc[0].face, inc[0].side);
            add_boundary_copy(inc[1].face, inc[1].side);
        } else {
            --chi[p.domain_of(inc[0].face)];
        }
    }
    for (int s = 0; s < sectors.count; ++s) {
        if (on_circle[s] && circles.find(s) == s) ++out[sectors.class_domain[s]].boundary_circles;
    }

    const auto orientable = domain_orientability(p);
    for (int d = 0; d < k; ++d) {
        auto& r = out[d];
        r.chi = chi[d];
        r.orientable = orientable[d];
        const int defect = 2 - r.boundary_circles - r.chi;
        if (r.orientable) {
            if (defect < 0 || defect % 2 != 0) {
                throw InvariantViolation("domain " + std::to_string(d) + ": orientable with chi=" +
                                         std::to_string(r.chi) + ", q=" + std::to_string(r.boundary_circles) +
                                         " has no integral genus");
            }
            r.genus = defect / 2;
        } else {
            if (defect < 1) {
                throw InvariantViolation("domain " + std::to_string(d) + ": non-orientable with chi=" +
                                         std::to_string(r.chi) + ", q=" + std::to_string(r.boundary_circles) +
                                         " has no cross-cap");
            }
            r.genus = defect;
        }
        if (c.kind() == SurfaceKind::moebius && ((r.orientable && r.genus != 0) || (!r.orientable && r.genus != 1))) {
            throw InvariantViolation("domain " + std::to_string(d) + " on the Moebius strip classifies as " +
                                     r.classification());
        }
    }
    return out;
}

DomainReport domain_report(const Partition& p, int id) {
    if (id < 0 || id >= p.num_domains()) throw InvalidInput("unknown domain id " + std::to_string(id));
    return domain_reports(p)[id];
}

ChiSigmaReport check_chi_sigma(const Partition& p) {
    ChiSigmaReport r;
    r.chi_surface = euler_characteristic(p.complex());
    r.sigma = boundary_graph(p).sigma();
    for (const auto& d : domain_reports(p)) r.chi_domains += d.chi;
    return r;
}

std::vector<int> non_normal_vertices(const Partition& p) {
    const CellComplex& c = p.complex();
    const auto sectors = detail::sector_classes(p);
    // Sector classes per vertex; a vertex carries at most 4.
    std::vector<std::array<int, 4>> at_vertex(c.num_vertices());
    std::vector<std::uint8_t> fill(c.num_vertices(), 0);
    std::vector<std::uint8_t> bad(c.num_vertices(), 0);
    for (int s = 0; s < sectors.count; ++s) {
        const int v = sectors.class_vertex[s];
        const int d = sectors.class_domain[s];
        for (int i = 0; i < fill[v]; ++i) {
            if (at_vertex[v][i] == d) bad[v] = 1;
        }
        if (fill[v] < 4) at_vertex[v][fill[v]++] = d;
    }
    std::vector<int> out;
    for (int v = 0; v < c.num_vertices(); ++v) {
        if (bad[v]) out.push_back(v);
    }
    return out;
}

bool is_normal(const Partition& p) { return non_normal_vertices(p).empty(); }

}  // namespace nodalpart
