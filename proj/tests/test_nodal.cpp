#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "nodalpart/errors.hpp"
#include "nodalpart/nodal.hpp"
#include "support.hpp"

using namespace nodalpart;
using testsupport::pi;

namespace {

NodalConfig at(int n, int max_refine = 5) {
    NodalConfig cfg;
    cfg.resolution = n;
    cfg.max_refine = max_refine;
    return cfg;
}

Eigenfunction product(int a, int b) { return {{{1.0, {Trig::sin, a, 0.0}, {Trig::sin, b, 0.0}}}}; }

}  // namespace

TEST(Evaluate, Examples) {
    EXPECT_DOUBLE_EQ(evaluate(Eigenfunction::bands(3), pi / 2, 0.7), -1.0);
    for (double x : {0.1, 0.9, 2.3})
        for (double y : {0.2, 1.4, 2.9})
            EXPECT_NEAR(evaluate(Eigenfunction::phi(0.4, 0.0), x, y), std::sin(2 * x) * std::sin(3 * y), 1e-15);
}

TEST(Evaluate, PhiIsDeckInvariant) {
    for (double beta : {0.1, pi / 6, pi / 3})
        for (double theta : {0.2, 0.7, 1.3})
            for (double x : {0.05, 1.0, 2.0, 3.0})
                for (double y : {0.3, 1.7, 2.8}) {
                    const auto f = Eigenfunction::phi(beta, theta);
                    EXPECT_NEAR(f(x, y), f(pi - x, y + pi), 1e-12);
                }
}

TEST(Symmetry, NamedFamiliesPass) {
    EXPECT_TRUE(check_symmetry(Eigenfunction::phi(pi / 6, 1.0), SurfaceKind::moebius).pass);
    EXPECT_TRUE(check_symmetry(Eigenfunction::ex3b(0.4 * pi), SurfaceKind::moebius).pass);
    EXPECT_TRUE(check_symmetry(Eigenfunction::bands(5), SurfaceKind::moebius).pass);
    EXPECT_TRUE(check_symmetry(product(2, 3), SurfaceKind::rectangle).pass);
    const auto s = check_symmetry(Eigenfunction::phi(pi / 3, 0.4 * pi), SurfaceKind::moebius);
    EXPECT_LE(s.deck_residual, 1e-9);
}

TEST(Symmetry, BrokenDeckInvarianceFails) {
    Eigenfunction f = product(2, 3);
    f.terms.push_back({0.1, {Trig::sin, 1, 0.0}, {Trig::sin, 1, 0.0}});
    const auto s = check_symmetry(f, SurfaceKind::moebius);
    EXPECT_FALSE(s.pass);
    EXPECT_GT(s.deck_residual, 0.1);
    EXPECT_THROW(rasterize(f, SurfaceKind::moebius, at(32)), InvalidInput);
}

TEST(Symmetry, UnsupportedSurface) {
    EXPECT_THROW(check_symmetry(Eigenfunction::bands(3), SurfaceKind::torus), InvalidInput);
}

TEST(Rasterize, BandsThree) {
    const auto p = rasterize(Eigenfunction::bands(3), SurfaceKind::moebius, at(60));
    EXPECT_EQ(p.num_domains(), 2);
    const auto r = invariants(p);
    EXPECT_EQ(r.omega, 1);
}

TEST(Rasterize, OddMoebiusResolutionRejected) {
    EXPECT_THROW(rasterize(Eigenfunction::bands(3), SurfaceKind::moebius, at(61)), InvalidInput);
}

TEST(Rasterize, ZeroSampleIsAResolutionError) {
    // sin(4x) vanishes at x = pi/4, a face center when N = 2.
    Eigenfunction f{{{1.0, {Trig::sin, 4, 0.0}, {Trig::sin, 1, 0.0}}}};
    EXPECT_THROW(rasterize(f, SurfaceKind::rectangle, at(2)), ResolutionError);
    // With N divisible by four no center lands on a zero.
    EXPECT_NO_THROW(rasterize(f, SurfaceKind::rectangle, at(8)));
}

TEST(Rasterize, NodalVerticesHaveEvenValence) {
    for (double theta : {0.2, 0.6, 1.0, 1.4}) {
        const auto p = rasterize(Eigenfunction::phi(pi / 6, theta), SurfaceKind::moebius, at(96));
        const auto g = boundary_graph(p);
        for (int v = 0; v < p.complex().num_vertices(); ++v) {
            if (!p.complex().vertex_on_boundary(v)) EXPECT_TRUE(g.valence[v] == 0 || g.valence[v] == 2 || g.valence[v] == 4);
        }
    }
}

TEST(Rasterize, PhiFigureFixture) {
    const auto p = rasterize(Eigenfunction::phi(pi / 3, 0.4 * pi), SurfaceKind::moebius, at(128));
    const auto g = boundary_graph(p);
    EXPECT_EQ(g.interior_singular_with_valence(4), 2);
    EXPECT_EQ(g.boundary_singular_with_valence(1), 4);
    EXPECT_EQ(g.singular.size(), 6u);
    EXPECT_EQ(g.sigma(), 4);
}

TEST(Rasterize, Ex3bFixture) {
    const auto r = invariants(rasterize(Eigenfunction::ex3b(0.4 * pi), SurfaceKind::moebius, at(128)));
    EXPECT_EQ(r.kappa, 4);
    EXPECT_EQ(r.omega, 1);
}

TEST(Stable, BandsFive) {
    const auto st = stable_invariants(Eigenfunction::bands(5), SurfaceKind::moebius, at(16));
    EXPECT_EQ(st.report.kappa, 3);
    EXPECT_EQ(st.report.omega, 1);
    EXPECT_EQ(st.report.beta, 2);
    EXPECT_EQ(st.report.sigma, 0);
    EXPECT_EQ(st.resolutions.back(), st.resolution);
}

TEST(Stable, SmallThetaIsOrientable) {
    const auto st = stable_invariants(Eigenfunction::phi(pi / 6, 0.1), SurfaceKind::moebius, at(64));
    EXPECT_EQ(st.report.omega, 0);
    EXPECT_EQ(st.report.defect(), 0);
}

TEST(Stable, IdempotentUnderDoubling) {
    const auto f = Eigenfunction::phi(pi / 6, 1.2);
    const auto st = stable_invariants(f, SurfaceKind::moebius, at(64));
    const auto finer = invariants(rasterize(f, SurfaceKind::moebius, at(2 * st.resolution)));
    EXPECT_TRUE(st.report.same_invariants(finer));
}

TEST(Stable, UnderResolvedIsUnstable) {
    // Seven bands on a 4 and 8 grid: each level sees a different pattern.
    EXPECT_THROW(stable_invariants(Eigenfunction::bands(7), SurfaceKind::moebius, at(4, 1)), InstabilityError);
    const auto st = stable_invariants(Eigenfunction::bands(7), SurfaceKind::moebius, at(4, 5));
    EXPECT_EQ(st.report.kappa, 4);
    EXPECT_GT(st.resolutions.size(), 2u);
}

TEST(Stable, RectangleSaddleGrid) {
    const auto st = stable_invariants(product(2, 3), SurfaceKind::rectangle, at(30));
    EXPECT_EQ(st.report.kappa, 6);
    EXPECT_EQ(st.report.sigma, 5);
    EXPECT_EQ(st.report.defect(), 1);
}

TEST(Config, MaxRefineFromEnvironment) {
    ::setenv("NODAL_MAX_REFINE", "3", 1);
    EXPECT_EQ(max_refine_from_env(), 3);
    ::setenv("NODAL_MAX_REFINE", "zero", 1);
    EXPECT_THROW(max_refine_from_env(), InvalidInput);
    ::setenv("NODAL_MAX_REFINE", "40", 1);
    EXPECT_THROW(max_refine_from_env(), InvalidInput);
    ::unsetenv("NODAL_MAX_REFINE");
    EXPECT_EQ(max_refine_from_env(), 5);
    EXPECT_EQ(max_refine_from_env(7), 7);
}

TEST(Config, Validation) {
    NodalConfig cfg;
    cfg.zero_tol = 0.0;
    EXPECT_THROW(cfg.validate(SurfaceKind::rectangle), InvalidInput);
    cfg = NodalConfig{};
    cfg.resolution = 1;
    EXPECT_THROW(cfg.validate(SurfaceKind::rectangle), InvalidInput);
}

TEST(Family, Names) {
    EXPECT_EQ(family_from_string("phi"), Family::phi);
    EXPECT_EQ(to_string(Family::ex3b), "ex3b");
    EXPECT_THROW(family_from_string("psi"), InvalidInput);
    EXPECT_DOUBLE_EQ(family_member(Family::bands, 0.0, 5.0)(0.3, 0.0), std::sin(1.5));
}
