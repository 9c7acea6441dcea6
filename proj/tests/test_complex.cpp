#include <gtest/gtest.h>

#include <set>

#include "nodalpart/complex.hpp"
#include "nodalpart/errors.hpp"
#include "support.hpp"

using namespace nodalpart;
using testsupport::all_kinds;
using testsupport::to_oracle;

TEST(Complex, RectangleTwoByTwoCounts) {
    auto c = build_complex(SurfaceSpec::preset(SurfaceKind::rectangle, 2, 2));
    EXPECT_EQ(c->num_vertices(), 9);
    EXPECT_EQ(c->num_edges(), 12);
    EXPECT_EQ(c->num_faces(), 4);
    EXPECT_EQ(euler_characteristic(*c), 1);
}

TEST(Complex, ProjectiveIsClosedWithChiOne) {
    auto c = build_complex(SurfaceSpec::preset(SurfaceKind::projective, 4, 4));
    EXPECT_EQ(euler_characteristic(*c), 1);
    for (int e = 0; e < c->num_edges(); ++e) EXPECT_FALSE(c->edge_on_boundary(e));
    EXPECT_EQ(boundary_components(*c), 0);
}

TEST(Complex, MoebiusBoundaryIsOneCycle) {
    for (int n : {2, 3, 8, 16}) {
        auto c = build_complex(SurfaceSpec::preset(SurfaceKind::moebius, n, n));
        int boundary_edges = 0;
        std::vector<int> degree(c->num_vertices(), 0);
        for (int e = 0; e < c->num_edges(); ++e) {
            if (!c->edge_on_boundary(e)) continue;
            ++boundary_edges;
            ++degree[c->edge_vertices(e)[0]];
            ++degree[c->edge_vertices(e)[1]];
        }
        EXPECT_EQ(boundary_edges, 2 * n);
        for (int v = 0; v < c->num_vertices(); ++v) EXPECT_TRUE(degree[v] == 0 || degree[v] == 2);
        EXPECT_EQ(boundary_components(*c), 1);
        EXPECT_EQ(euler_characteristic(*c), 0);
    }
}

TEST(Complex, MoebiusBoundaryLengthFollowsHeight) {
    // The open sides are x = 0 and x = W, each H edges long.
    auto c = build_complex(SurfaceSpec::preset(SurfaceKind::moebius, 6, 10));
    int boundary_edges = 0;
    for (int e = 0; e < c->num_edges(); ++e) boundary_edges += c->edge_on_boundary(e);
    EXPECT_EQ(boundary_edges, 20);
}

TEST(Complex, EulerCharacteristicTable) {
    for (auto k : all_kinds()) {
        for (auto [w, h] : {std::pair{2, 2}, {3, 5}, {7, 4}, {16, 16}}) {
            auto c = build_complex(SurfaceSpec::preset(k, w, h));
            EXPECT_EQ(euler_characteristic(*c), expected_euler_characteristic(k)) << to_string(k) << " " << w << "x" << h;
            EXPECT_EQ(boundary_components(*c), expected_boundary_components(k)) << to_string(k);
        }
    }
}

TEST(Complex, CountsMatchOracle) {
    for (auto k : all_kinds()) {
        for (auto [w, h] : {std::pair{2, 2}, {2, 3}, {3, 2}, {5, 6}}) {
            const auto spec = SurfaceSpec::preset(k, w, h);
            auto c = build_complex(spec);
            const auto ref = oracle::evaluate(to_oracle(spec), std::vector<int>(w * h, 0));
            EXPECT_EQ(c->num_vertices(), ref.V) << to_string(k) << " " << w << "x" << h;
            EXPECT_EQ(c->num_edges(), ref.E) << to_string(k) << " " << w << "x" << h;
            EXPECT_EQ(boundary_components(*c), ref.boundary_components);
        }
    }
}

TEST(Complex, EdgeFaceCounts) {
    for (auto k : all_kinds()) {
        auto c = build_complex(SurfaceSpec::preset(k, 5, 4));
        std::vector<int> seen(c->num_edges(), 0);
        for (int f = 0; f < c->num_faces(); ++f)
            for (int e : c->face_edges(f)) ++seen[e];
        for (int e = 0; e < c->num_edges(); ++e) {
            EXPECT_EQ(seen[e], c->edge_face_count(e));
            EXPECT_TRUE(c->edge_face_count(e) == 1 || c->edge_face_count(e) == 2);
            EXPECT_NE(c->edge_vertices(e)[0], c->edge_vertices(e)[1]);
        }
    }
}

TEST(Complex, ParityIsNegativeExactlyOnReversedSeams) {
    for (auto k : all_kinds()) {
        const auto spec = SurfaceSpec::preset(k, 6, 5);
        auto c = build_complex(spec);
        for (int e = 0; e < c->num_edges(); ++e) {
            if (c->edge_on_boundary(e)) continue;
            const auto r = c->edge_representative(e);
            bool seam_x = !r.horizontal && (r.i == 0 || r.i == spec.width);
            bool seam_y = r.horizontal && (r.j == 0 || r.j == spec.height);
            bool reversed = (seam_x && spec.x_gluing == Gluing::reversed) || (seam_y && spec.y_gluing == Gluing::reversed);
            EXPECT_EQ(c->edge_parity(e), reversed ? -1 : 1) << to_string(k) << " edge " << e;
        }
    }
}

TEST(Complex, ReversedYGluesColumnToMirror) {
    const int W = 6, H = 4;
    auto c = build_complex(SurfaceSpec::preset(SurfaceKind::moebius, W, H));
    for (int i = 0; i < W; ++i) {
        EXPECT_EQ(c->neighbor(c->face(i, H - 1), Side::top), c->face(W - 1 - i, 0));
        EXPECT_EQ(c->neighbor(c->face(i, 0), Side::bottom), c->face(W - 1 - i, H - 1));
        EXPECT_EQ(c->horizontal_edge(i, H), c->horizontal_edge(W - 1 - i, 0));
    }
    EXPECT_EQ(c->neighbor(c->face(0, 2), Side::left), -1);
}

TEST(Complex, ProjectiveCornersCollapse) {
    // (0,0) ~ (W,H) and (W,0) ~ (0,H) on the projective model.
    auto c = build_complex(SurfaceSpec::preset(SurfaceKind::projective, 4, 4));
    EXPECT_EQ(c->vertex_at(0, 0), c->vertex_at(4, 4));
    EXPECT_EQ(c->vertex_at(4, 0), c->vertex_at(0, 4));
}

TEST(Complex, ParitySoundAwayFromSeams) {
    // Around an interior vertex of the chart all four adjacencies carry +1.
    for (auto k : all_kinds()) {
        auto c = build_complex(SurfaceSpec::preset(k, 5, 5));
        for (int j = 1; j < 5; ++j) {
            for (int i = 1; i < 5; ++i) {
                int product = c->edge_parity(c->horizontal_edge(i - 1, j)) * c->edge_parity(c->horizontal_edge(i, j)) *
                              c->edge_parity(c->vertical_edge(i, j - 1)) * c->edge_parity(c->vertical_edge(i, j));
                EXPECT_EQ(product, 1);
            }
        }
    }
}

TEST(Complex, RejectsDegenerateGrids) {
    EXPECT_THROW(build_complex(SurfaceSpec::preset(SurfaceKind::torus, 1, 4)), InvalidInput);
    EXPECT_THROW(build_complex(SurfaceSpec::preset(SurfaceKind::rectangle, 3, 0)), InvalidInput);
    EXPECT_THROW(SurfaceSpec::preset("sphere", 4, 4), InvalidInput);
}

TEST(Complex, PresetKindsRoundTrip) {
    for (auto k : all_kinds()) {
        EXPECT_EQ(SurfaceSpec::preset(k, 3, 3).kind(), k);
        EXPECT_EQ(surface_kind_from_string(to_string(k)), k);
    }
}
