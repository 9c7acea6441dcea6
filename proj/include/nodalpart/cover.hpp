#pragma once

#include <vector>

#include "nodalpart/partition.hpp"

namespace nodalpart {

// Orientation double cover of a Moebius strip (by a cylinder) or of a
// Klein bottle (by a torus). The cover doubles the height and glues its
// top to its bottom periodically; cover face (i, j) with j >= H lies over
// base face (W - 1 - i, j - H).
struct CoverStructure {
    ComplexPtr base;
    ComplexPtr cover;
    std::vector<int> face_projection;  // cover face -> base face
    std::vector<int> deck;             // cover face -> cover face, (i, j) -> (W-1-i, (j+H) mod 2H)
    std::vector<int> edge_projection;  // cover edge -> base edge
};

// Throws InvalidInput unless the base is a Moebius strip or Klein bottle
// with the reversed gluing on the y sides.
CoverStructure double_cover(const ComplexPtr& base);

// Pull back a partition: each cover face takes the domain of the face
// below it, walls lift to both preimages, then domains are re-split.
Partition lift_partition(const CoverStructure& cs, const Partition& p);

// Per base domain: how many lifted domains sit over it. Always 1 or 2.
std::vector<int> preimage_counts(const CoverStructure& cs, const Partition& p, const Partition& lifted);

// Per base domain: orientable iff its preimage has two components.
std::vector<bool> omega_via_cover(const CoverStructure& cs, const Partition& p);

struct CoverReport {
    int kappa = 0;
    int sigma = 0;
    int beta = 0;
    int kappa_star = 0;
    int sigma_star = 0;
    int beta_star = 0;
    int n_nonorientable = 0;
    int beta_i = 0;
    int beta_i_star = 0;
    std::vector<int> preimage_counts;

    // The two cover boundary circles lie in one component of the lifted
    // boundary set together with the cover boundary.
    bool boundary_circles_joined = false;

    // Relations from the covering argument that are reported, not enforced.
    bool orientable_case_applicable() const;  // n = 0, cover boundary circles not joined
    bool orientable_case_holds() const { return beta_star == 2 * beta_i - 1; }
    bool nonorientable_case_applicable() const { return n_nonorientable == 1; }
    bool nonorientable_case_holds() const { return beta_star == 2 * beta; }

    bool has_boundary = false;
};

// Throws InvariantViolation unless kappa* = 2 kappa - n, sigma* = 2 sigma,
// every preimage count is 1 or 2, and (on the Moebius strip) n <= 1.
CoverReport cover_bookkeeping(const CoverStructure& cs, const Partition& p);

}  // namespace nodalpart
