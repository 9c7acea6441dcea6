#pragma once

#include <array>
#include <vector>

#include "nodalpart/partition.hpp"

namespace nodalpart::detail {

// Corner ids are 4 * face + corner. For an interior edge, the two pairs
// of corners (one from each incident face) that sit at the same vertex.
std::array<std::array<int, 2>, 2> matched_corners(const CellComplex& c, int e);

// Face corners grouped into sectors: corners around a vertex joined
// through edges that are not in the boundary set. Each sector class is
// one vertex of some domain's completion.
struct SectorClasses {
    std::vector<int> corner_class;  // per corner
    std::vector<int> class_vertex;
    std::vector<int> class_domain;
    int count = 0;
};

SectorClasses sector_classes(const Partition& p);

}  // namespace nodalpart::detail
