#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "generators.hpp"
#include "nodalpart/errors.hpp"
#include "nodalpart/explore.hpp"
#include "nodalpart/nodal.hpp"
#include "nodalpart/surgery.hpp"
#include "support.hpp"

using namespace nodalpart;
using namespace testsupport;

namespace {

SurfaceSpec moebius(int n) { return SurfaceSpec::preset(SurfaceKind::moebius, n, n); }
SurfaceSpec rect(int w, int h) { return SurfaceSpec::preset(SurfaceKind::rectangle, w, h); }

std::vector<std::array<int, 2>> row(int j, int from, int to) {
    std::vector<std::array<int, 2>> pts;
    for (int i = from; i <= to; ++i) pts.push_back({i, j});
    return pts;
}

std::vector<std::array<int, 2>> column(int i, int from, int to) {
    std::vector<std::array<int, 2>> pts;
    for (int j = from; j <= to; ++j) pts.push_back({i, j});
    return pts;
}

CutPath path_of(const Partition& p, const std::vector<std::array<int, 2>>& pts) {
    return classify_path(p, edges_from_points(p.complex(), pts));
}

// Two corner-touching squares inside one surrounding domain.
Partition saddle() {
    return labelled(rect(4, 4), [](int i, int j) { return (i == 2 && j == 1) || (i == 1 && j == 2); });
}

}  // namespace

TEST(Refine, KeepsInvariants) {
    std::mt19937_64 rng(3);
    for (auto k : all_kinds()) {
        auto c = build_complex(SurfaceSpec::preset(k, 6, 5));
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto p = random_partition(c, {seed, 4});
            const auto q = refine(p, 3);
            EXPECT_EQ(q.complex().width(), 18);
            EXPECT_TRUE(invariants(p).same_invariants(invariants(q))) << to_string(k);
        }
    }
}

TEST(Normalize, NormalInputIsUnchanged) {
    const auto p = sign_of(moebius(60), [](double x, double) { return std::sin(3 * x); });
    const auto q = normalize(p);
    EXPECT_TRUE(invariants(p).same_invariants(invariants(q)));
    EXPECT_TRUE(is_normal(q));
}

TEST(Normalize, SaddleGainsADiskDomain) {
    const auto p = saddle();
    const auto before = invariants(p);
    const auto q = normalize(p);
    const auto after = invariants(q);
    EXPECT_TRUE(is_normal(q));
    EXPECT_EQ(after.kappa, before.kappa + 1);
    EXPECT_EQ(after.sigma, before.sigma + 1);
    EXPECT_EQ(after.beta, before.beta);
    EXPECT_EQ(after.delta, before.delta);
    EXPECT_EQ(after.omega, before.omega);
}

TEST(Normalize, NodalFixtureBecomesClassifiable) {
    NodalConfig cfg;
    cfg.resolution = 128;
    const auto p = rasterize(Eigenfunction::phi(pi / 3, 0.4 * pi), SurfaceKind::moebius, cfg);
    EXPECT_FALSE(is_normal(p));
    const auto q = normalize(p);
    EXPECT_TRUE(is_normal(q));
    EXPECT_EQ(invariants(q).delta, invariants(p).delta);
    EXPECT_EQ(invariants(q).omega, invariants(p).omega);
    for (const auto& d : domain_reports(q)) EXPECT_GE(d.genus, 0);
}

TEST(Normalize, RandomNoisyPartitions) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const auto kind = trial % 2 ? SurfaceKind::moebius : SurfaceKind::rectangle;
        const auto spec = SurfaceSpec::preset(kind, 6, 6);
        std::vector<int> labels(36);
        for (auto& l : labels) l = static_cast<int>(rng() % 3);
        const auto p = Partition::from_labels(build_complex(spec), labels);
        const auto q = normalize(p);
        EXPECT_TRUE(is_normal(q));
        EXPECT_EQ(invariants(q).delta, invariants(p).delta);
        EXPECT_EQ(invariants(q).omega, invariants(p).omega);
    }
}

TEST(Normalize, RejectsWalls) {
    auto c = build_complex(rect(4, 4));
    std::vector<int> labels(16, 0);
    std::vector<int> walls;
    for (int j = 0; j < 4; ++j) walls.push_back(c->vertical_edge(2, j));
    const auto p = Partition::from_labels(c, labels, walls);
    EXPECT_THROW(normalize(p), InvalidInput);
}

TEST(Cut, RowAcrossOneDomainMoebius) {
    const auto p = labelled(moebius(8), [](int, int) { return 0; });
    const auto path = path_of(p, row(3, 0, 8));
    EXPECT_EQ(path.start, PathEnd::surface_boundary);
    EXPECT_EQ(path.end, PathEnd::surface_boundary);
    EXPECT_EQ(path.crossings, 0);
    const auto q = cut(p, path);
    const auto before = invariants(p);
    const auto after = invariants(q);
    EXPECT_EQ(before.omega, 1);
    EXPECT_EQ(after.kappa, 1);
    EXPECT_EQ(after.beta, 0);
    EXPECT_EQ(after.sigma, 1);
    EXPECT_EQ(after.omega, 0);
    EXPECT_EQ(after.delta, before.delta);
}

TEST(Cut, RowAcrossBandsCountsCrossings) {
    const auto p = sign_of(moebius(60), [](double x, double) { return std::sin(3 * x); });
    const auto path = path_of(p, row(30, 0, 60));
    EXPECT_EQ(path.crossings, 2);
    const auto q = cut(p, path);
    const auto rep = cut_report(p, q, path);
    EXPECT_TRUE(rep.delta_preserved());
    EXPECT_FALSE(rep.all_simply_connected_before);
    EXPECT_EQ(rep.after.kappa, 3);
    EXPECT_EQ(rep.after.omega, 0);
}

TEST(Cut, KappaBookkeepingOnDisks) {
    // Left and right halves of a rectangle, cut straight across.
    const auto p = labelled(rect(8, 6), [](int i, int) { return i < 4; });
    const auto path = path_of(p, row(3, 0, 8));
    EXPECT_EQ(path.crossings, 1);
    const auto rep = cut_report(p, cut(p, path), path);
    EXPECT_TRUE(rep.all_simply_connected_before);
    EXPECT_TRUE(rep.kappa_bookkeeping_holds());
    EXPECT_EQ(rep.after.kappa, 4);
    EXPECT_TRUE(rep.delta_preserved());
}

TEST(Cut, JoiningTheCirclesOfAnAnnulus) {
    // ring: faces in [1,7)^2 minus [3,5)^2; its boundary circles are y = 1 and y = 3 at x = 4.
    const auto p = labelled(rect(8, 8), [](int i, int j) {
        const bool outer = i >= 1 && i < 7 && j >= 1 && j < 7;
        const bool inner = i >= 3 && i < 5 && j >= 3 && j < 5;
        return outer && !inner ? 1 : inner ? 2 : 0;
    });
    const auto path = path_of(p, column(4, 1, 3));
    EXPECT_EQ(path.start, PathEnd::partition_boundary);
    EXPECT_EQ(path.end, PathEnd::partition_boundary);
    const auto before = invariants(p);
    const auto after = invariants(cut(p, path));
    EXPECT_EQ(after.kappa, before.kappa);
    EXPECT_EQ(after.beta, before.beta - 1);
    EXPECT_EQ(after.sigma, before.sigma + 1);
    EXPECT_EQ(after.delta, before.delta);
}

TEST(Cut, ClosedCycleCutsOutADisk) {
    const auto p = labelled(rect(6, 6), [](int, int) { return 0; });
    std::vector<std::array<int, 2>> pts{{2, 2}, {3, 2}, {4, 2}, {4, 3}, {4, 4}, {3, 4}, {2, 4}, {2, 3}, {2, 2}};
    const auto path = path_of(p, pts);
    EXPECT_TRUE(path.closed());
    const auto after = invariants(cut(p, path));
    EXPECT_EQ(after.kappa, 2);
    EXPECT_EQ(after.beta, 1);
    EXPECT_EQ(after.defect(), 1);
}

TEST(Cut, RejectsBadPaths) {
    const auto one = labelled(rect(6, 6), [](int, int) { return 0; });
    EXPECT_THROW(path_of(one, row(3, 0, 3)), PathError);  // dangles inside the domain
    EXPECT_THROW(path_of(one, row(0, 0, 3)), PathError);  // along the surface boundary
    EXPECT_THROW(classify_path(one, std::vector<int>{}), PathError);

    const auto halves = labelled(rect(6, 6), [](int i, int) { return i < 3; });
    EXPECT_THROW(path_of(halves, column(3, 1, 3)), PathError);  // along the boundary set

    const auto grid = sign_of(rect(60, 60), [](double x, double y) { return std::sin(2 * x) * std::sin(3 * y); });
    EXPECT_THROW(path_of(grid, row(20, 0, 60)), PathError);  // through two nu = 4 vertices

    // Visits (2,2) twice.
    std::vector<std::array<int, 2>> loop{{0, 2}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 2}, {2, 2}, {2, 1}, {2, 0}};
    EXPECT_THROW(path_of(one, loop), PathError);
}

TEST(Cut, RandomAdmissibleCutsPreserveDelta) {
    std::mt19937_64 rng(2024);
    int done = 0;
    for (int attempt = 0; attempt < 20000 && done < 100; ++attempt) {
        const auto kind = attempt % 2 ? SurfaceKind::moebius : SurfaceKind::rectangle;
        auto c = build_complex(SurfaceSpec::preset(kind, 16, 16));
        const auto p = random_partition(c, {rng(), 1 + static_cast<int>(rng() % 6)});
        const auto path = generators::random_cut(p, rng);
        if (!path) continue;
        const auto q = cut(p, *path);
        const auto rep = cut_report(p, q, *path);
        EXPECT_TRUE(rep.delta_preserved());
        if (rep.all_simply_connected_before) {
            EXPECT_TRUE(rep.kappa_bookkeeping_holds());
        }
        ++done;
    }
    EXPECT_EQ(done, 100);
}

TEST(CircleComplement, SmallSquareLeavesDiskAndBand) {
    auto c = build_complex(SurfaceSpec::preset(SurfaceKind::projective, 6, 6));
    std::vector<std::array<int, 2>> pts{{2, 2}, {3, 2}, {3, 3}, {2, 3}, {2, 2}};
    const auto cls = classify_circle_complement(c, edges_from_points(*c, pts));
    EXPECT_EQ(cls.components(), 2);
    EXPECT_TRUE(cls.disk_and_moebius());
}

TEST(CircleComplement, MidlineLeavesOneDisk) {
    auto c = build_complex(SurfaceSpec::preset(SurfaceKind::projective, 6, 6));
    const auto cls = classify_circle_complement(c, edges_from_points(*c, row(3, 0, 6)));
    EXPECT_EQ(cls.components(), 1);
    EXPECT_TRUE(cls.one_disk());
}

TEST(CircleComplement, RandomBlocks) {
    auto c = build_complex(SurfaceSpec::preset(SurfaceKind::projective, 12, 10));
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto cls = classify_circle_complement(c, random_block_cycle(*c, seed));
        EXPECT_TRUE(cls.disk_and_moebius()) << "seed " << seed;
    }
}

TEST(CircleComplement, RejectsBadCycles) {
    auto c = build_complex(SurfaceSpec::preset(SurfaceKind::projective, 6, 6));
    EXPECT_THROW(classify_circle_complement(c, edges_from_points(*c, row(2, 1, 4))), InvalidInput);  // open
    std::vector<std::array<int, 2>> eight{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {2, 3}, {2, 2}, {1, 2}, {1, 1}};
    EXPECT_THROW(classify_circle_complement(c, edges_from_points(*c, eight)), InvalidInput);
    auto m = build_complex(moebius(6));
    std::vector<std::array<int, 2>> sq{{2, 2}, {3, 2}, {3, 3}, {2, 3}, {2, 2}};
    EXPECT_THROW(classify_circle_complement(m, edges_from_points(*m, sq)), InvalidInput);
}
