#pragma once

#include <functional>
#include <numbers>
#include <vector>

#include "nodalpart/partition.hpp"
#include "oracle.hpp"

namespace testsupport {

using namespace nodalpart;
using std::numbers::pi;

inline Partition labelled(const SurfaceSpec& s, const std::function<int(int, int)>& label,
                          const std::vector<int>& walls = {}) {
    auto c = build_complex(s);
    std::vector<int> labels(c->num_faces());
    for (int j = 0; j < s.height; ++j)
        for (int i = 0; i < s.width; ++i) labels[c->face(i, j)] = label(i, j);
    return Partition::from_labels(c, labels, walls);
}

// Sign of f at face centers of [0, pi]^2, no symmetry requirement.
inline Partition sign_of(const SurfaceSpec& s, const std::function<double(double, double)>& f) {
    const double hx = pi / s.width, hy = pi / s.height;
    return labelled(s, [&](int i, int j) { return f((i + 0.5) * hx, (j + 0.5) * hy) > 0 ? 1 : 0; });
}

inline oracle::Surface to_oracle(const SurfaceSpec& s) {
    const auto g = [](Gluing x) {
        return x == Gluing::open ? oracle::Glue::open : x == Gluing::periodic ? oracle::Glue::periodic : oracle::Glue::reversed;
    };
    return {s.width, s.height, g(s.x_gluing), g(s.y_gluing)};
}

inline const std::vector<SurfaceKind>& all_kinds() {
    static const std::vector<SurfaceKind> k{SurfaceKind::rectangle, SurfaceKind::cylinder, SurfaceKind::moebius,
                                            SurfaceKind::torus,     SurfaceKind::klein,    SurfaceKind::projective};
    return k;
}

}  // namespace testsupport
