#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nodalpart/partition.hpp"

namespace nodalpart {

enum class Trig { sin, cos };

struct TrigFactor {
    Trig kind = Trig::sin;
    int freq = 1;
    double phase = 0.0;

    double operator()(double t) const;
};

struct TrigTerm {
    double coeff = 1.0;
    TrigFactor fx;
    TrigFactor fy;
};

// A finite sum of separable trigonometric products c * fx(x) * fy(y).
struct Eigenfunction {
    std::vector<TrigTerm> terms;

    double operator()(double x, double y) const;

    // cos(theta) sin(2x) sin(3y) + sin(theta) sin(3x) sin(2y + beta)
    static Eigenfunction phi(double beta, double theta);
    // sin(m x)
    static Eigenfunction bands(int m);
    // cos(theta) sin(x) cos(6y) + sin(theta) sin(6x) cos(y)
    static Eigenfunction ex3b(double theta);
};

double evaluate(const Eigenfunction& f, double x, double y);

enum class Family { phi, bands, ex3b };
Family family_from_string(std::string_view name);
std::string_view to_string(Family f);

// One member of a named family: `param` is theta for phi and ex3b, and
// the frequency m for bands.
Eigenfunction family_member(Family family, double beta, double param);

struct NodalConfig {
    int resolution = 64;         // faces per side of the fundamental domain
    double zero_tol = 1e-12;     // face-center samples this small are rejected
    double symmetry_tol = 1e-9;
    int max_refine = 5;          // stable_invariants tries resolution * 2^0 .. 2^max_refine

    // Throws InvalidInput on non-positive tolerances or resolution, and on
    // an odd resolution for the Moebius strip.
    void validate(SurfaceKind surface) const;
};

// Reads NODAL_MAX_REFINE when set.
int max_refine_from_env(int fallback = 5);

struct SymmetryCheck {
    bool pass = false;
    double deck_residual = 0.0;       // max |f(x, y) - f(pi - x, y + pi)| (Moebius only)
    double dirichlet_residual = 0.0;  // max |f| on the Dirichlet sides
};

// Moebius: deck invariance on a 101 x 101 lattice of [0, pi]^2 and zero
// values on x = 0, pi. Rectangle: zero values on all four sides of
// [0, pi]^2. Other surfaces throw InvalidInput.
SymmetryCheck check_symmetry(const Eigenfunction& f, SurfaceKind surface, double tol = 1e-9);

// Sign of f at face centers of an N x N grid on [0, pi] x [0, pi) (Moebius)
// or [0, pi]^2 (rectangle). Throws InvalidInput if the symmetry check
// fails and ResolutionError if a sample is within zero_tol of zero.
Partition rasterize(const Eigenfunction& f, SurfaceKind surface, const NodalConfig& config);

struct StableReport {
    InvariantReport report;
    int resolution = 0;               // the finer of the two agreeing levels
    std::vector<int> resolutions;     // every level tried, in order
};

// Invariants at N, 2N, 4N, ... until two consecutive levels agree on
// (kappa, beta, sigma, omega). A level whose samples hit zero is retried
// at N + 2. Throws InstabilityError if no two levels agree.
StableReport stable_invariants(const Eigenfunction& f, SurfaceKind surface, const NodalConfig& config);

}  // namespace nodalpart
