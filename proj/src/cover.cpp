#include "nodalpart/cover.hpp"

#include <algorithm>
#include <string>

#include "nodalpart/errors.hpp"

namespace nodalpart {

bool CoverReport::orientable_case_applicable() const {
    return has_boundary && n_nonorientable == 0 && !boundary_circles_joined;
}

CoverStructure double_cover(const ComplexPtr& base) {
    if (!base) throw InvalidInput("double cover needs a base complex");
    const SurfaceSpec& bs = base->spec();
    if (bs.y_gluing != Gluing::reversed || bs.x_gluing == Gluing::reversed) {
        throw InvalidInput("double cover supports the Moebius strip and the Klein bottle only, got " +
                           std::string(to_string(bs.kind())));
    }
    const int W = bs.width;
    const int H = bs.height;

    SurfaceSpec cs_spec = bs;
    cs_spec.height = 2 * H;
    cs_spec.y_gluing = Gluing::periodic;

    CoverStructure cs;
    cs.base = base;
    cs.cover = build_complex(cs_spec);
    const CellComplex& cover = *cs.cover;

    cs.face_projection.resize(cover.num_faces());
    cs.deck.resize(cover.num_faces());
    cs.edge_projection.assign(cover.num_edges(), -1);
    for (int j = 0; j < 2 * H; ++j) {
        for (int i = 0; i < W; ++i) {
            const int f = cover.face(i, j);
            const bool upper = j >= H;
            const int bf = upper ? base->face(W - 1 - i, j - H) : base->face(i, j);
            cs.face_projection[f] = bf;
            cs.deck[f] = cover.face(W - 1 - i, (j + H) % (2 * H));
            for (int s = 0; s < 4; ++s) {
                // The upper sheet is mirrored in x, so left and right swap.
                int bside = s;
                if (upper && s == Side::left) bside = Side::right;
                if (upper && s == Side::right) bside = Side::left;
                const int ce = cover.face_edges(f)[s];
                const int be = base->face_edges(bf)[bside];
                if (cs.edge_projection[ce] >= 0 && cs.edge_projection[ce] != be) {
                    throw InvariantViolation("inconsistent edge projection at cover edge " + std::to_string(ce));
                }
                cs.edge_projection[ce] = be;
            }
        }
    }
    return cs;
}

Partition lift_partition(const CoverStructure& cs, const Partition& p) {
    if (!(p.complex().spec() == cs.base->spec())) {
        throw InvalidInput("partition does not live on the cover's base surface");
    }
    const CellComplex& cover = *cs.cover;
    std::vector<int> labels(cover.num_faces());
    for (int f = 0; f < cover.num_faces(); ++f) labels[f] = p.domain_of(cs.face_projection[f]);
    std::vector<int> walls;
    for (int e = 0; e < cover.num_edges(); ++e) {
        if (p.is_wall(cs.edge_projection[e])) walls.push_back(e);
    }
    return Partition::from_labels(cs.cover, labels, walls);
}

std::vector<int> preimage_counts(const CoverStructure& cs, const Partition& p, const Partition& lifted) {
    std::vector<std::vector<int>> seen(p.num_domains());
    for (int f = 0; f < cs.cover->num_faces(); ++f) {
        auto& list = seen[p.domain_of(cs.face_projection[f])];
        const int d = lifted.domain_of(f);
        if (std::find(list.begin(), list.end(), d) == list.end()) list.push_back(d);
    }
    std::vector<int> counts(p.num_domains());
    for (int d = 0; d < p.num_domains(); ++d) {
        counts[d] = static_cast<int>(seen[d].size());
        if (counts[d] != 1 && counts[d] != 2) {
            throw InvariantViolation("domain " + std::to_string(d) + " has " + std::to_string(counts[d]) +
                                     " preimage components");
        }
    }
    return counts;
}

std::vector<bool> omega_via_cover(const CoverStructure& cs, const Partition& p) {
    const auto lifted = lift_partition(cs, p);
    const auto counts = preimage_counts(cs, p, lifted);
    std::vector<bool> orientable(counts.size());
    for (std::size_t d = 0; d < counts.size(); ++d) orientable[d] = counts[d] == 2;
    return orientable;
}

CoverReport cover_bookkeeping(const CoverStructure& cs, const Partition& p) {
    const auto lifted = lift_partition(cs, p);
    const auto g = boundary_graph(p);
    const auto g_star = boundary_graph(lifted);
    const auto base_inv = invariants(p, g);
    const auto cover_inv = invariants(lifted, g_star);

    CoverReport r;
    r.kappa = base_inv.kappa;
    r.sigma = base_inv.sigma;
    r.beta = base_inv.beta;
    r.beta_i = base_inv.beta_interior;
    r.kappa_star = cover_inv.kappa;
    r.sigma_star = cover_inv.sigma;
    r.beta_star = cover_inv.beta;
    r.beta_i_star = cover_inv.beta_interior;
    r.preimage_counts = preimage_counts(cs, p, lifted);
    r.n_nonorientable = static_cast<int>(std::count(r.preimage_counts.begin(), r.preimage_counts.end(), 1));
    r.has_boundary = g_star.surface_boundary_components > 0;
    // Both cover boundary circles in one component of (boundary set + boundary).
    r.boundary_circles_joined = r.has_boundary && g_star.surface_boundary_components == 2 &&
                                g_star.components_with_surface_boundary - g_star.interior_components == 1;

    if (r.kappa_star != 2 * r.kappa - r.n_nonorientable) {
        throw InvariantViolation("kappa* = " + std::to_string(r.kappa_star) + " but 2 kappa - n = " +
                                 std::to_string(2 * r.kappa - r.n_nonorientable));
    }
    if (r.sigma_star != 2 * r.sigma) {
        throw InvariantViolation("sigma* = " + std::to_string(r.sigma_star) + " but 2 sigma = " +
                                 std::to_string(2 * r.sigma));
    }
    if (p.complex().kind() == SurfaceKind::moebius && r.n_nonorientable > 1) {
        throw InvariantViolation(std::to_string(r.n_nonorientable) + " non-orientable domains on the Moebius strip");
    }
    return r;
}

}  // namespace nodalpart
