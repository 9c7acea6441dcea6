#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "nodalpart/partition.hpp"

namespace nodalpart {

// Subdivide every face into factor x factor faces. Labels and walls are
// carried over, so all invariants are unchanged.
Partition refine(const Partition& p, int factor);

// Replace every non-normal vertex by a small disk domain after refining by
// `refine_factor`, repeating until the partition is normal. Throws
// InvariantViolation if delta or omega move, InvalidInput on walls or when
// the factor is too small to keep the inserted disks apart.
Partition normalize(const Partition& p, int refine_factor = 3);

enum class PathEnd { surface_boundary, partition_boundary, cycle };
std::string_view to_string(PathEnd e);

struct CutPath {
    std::vector<int> edges;
    std::vector<int> vertices;  // edges.size() + 1 entries; first == last for cycles
    PathEnd start = PathEnd::cycle;
    PathEnd end = PathEnd::cycle;
    int crossings = 0;  // interior path vertices already on the boundary set

    bool closed() const { return start == PathEnd::cycle; }
};

// Grid points (i, j) in the unglued chart, consecutive points one unit
// apart. A repeated point, or two chart points glued to the same vertex,
// is skipped so a path can step across a seam.
std::vector<int> edges_from_points(const CellComplex& c, std::span<const std::array<int, 2>> points);

// Orders and checks a cut path against the partition. Throws PathError if
// the path is not simple, dangles, touches a singular vertex, runs along
// the boundary set or the surface boundary, or passes through the surface
// boundary in its interior.
CutPath classify_path(const Partition& p, std::span<const int> edges);

// Adds the path as walls. Throws InvariantViolation if delta changes on a
// surface where the Euler-type formula is a theorem (rectangle, Moebius).
Partition cut(const Partition& p, const CutPath& path);

struct CutReport {
    CutPath path;
    InvariantReport before;
    InvariantReport after;
    bool all_simply_connected_before = false;
    bool delta_preserved() const { return before.delta == after.delta; }
    // kappa grows by N + 1 when every domain was a disk before the cut.
    bool kappa_bookkeeping_holds() const { return after.kappa == before.kappa + path.crossings + 1; }
};

CutReport cut_report(const Partition& p, const Partition& result, const CutPath& path);

struct ComplementPiece {
    int faces = 0;
    int chi = 0;
    bool orientable = true;
    int boundary_circles = 0;

    bool is_disk() const { return chi == 1 && orientable && boundary_circles == 1; }
    bool is_moebius_band() const { return chi == 0 && !orientable && boundary_circles == 1; }
};

struct ComplementClass {
    std::vector<ComplementPiece> pieces;  // in face-scan order

    int components() const { return static_cast<int>(pieces.size()); }
    bool one_disk() const { return pieces.size() == 1 && pieces[0].is_disk(); }
    bool disk_and_moebius() const;
};

// Cuts the projective plane along a simple closed edge cycle. The result
// is either a single disk or a disk and a Moebius band; anything else
// throws InvariantViolation.
ComplementClass classify_circle_complement(const ComplexPtr& c, std::span<const int> cycle);

}  // namespace nodalpart
