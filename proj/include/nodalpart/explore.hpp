#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nodalpart/nodal.hpp"
#include "nodalpart/partition.hpp"

namespace nodalpart {

struct RandomSpec {
    std::uint64_t seed = 0;
    int k = 1;  // number of flood-fill seeds; at most the face count
};

// k distinct seed faces, then a randomized multi-source flood fill. The
// result has no walls and is a pure function of (complex, spec).
Partition random_partition(const ComplexPtr& c, const RandomSpec& spec);

// Boundary of a random axis-aligned block of faces inside the chart,
// away from the seams. Always a contractible simple cycle.
std::vector<int> random_block_cycle(const CellComplex& c, std::uint64_t seed);

struct SweepRow {
    double param = 0.0;
    std::optional<StableReport> stable;  // empty when the point is unstable
    std::string error;
};

// One stabilized report per parameter value. `params` must be strictly
// increasing; they are thetas for phi/ex3b and frequencies for bands.
std::vector<SweepRow> sweep(Family family, double beta, const std::vector<double>& params,
                            SurfaceKind surface, const NodalConfig& config);

// Number of times omega changes between consecutive stable rows.
int omega_steps(const std::vector<SweepRow>& rows);

struct TransitionEstimate {
    double beta = 0.0;
    double theta_low = 0.0;   // omega = 0 here
    double theta_high = 0.0;  // omega = 1 here
    int resolution_low = 0;
    int resolution_high = 0;
    int iterations = 0;
    int skipped_unstable = 0;

    double width() const { return theta_high - theta_low; }
};

// Bisection on omega for phi(beta, .) starting from [0.05, pi/2 - 0.05].
// Unstable midpoints are replaced by nearby probes inside the bracket.
// Throws InvalidInput if omega does not go 0 -> 1 across the initial
// bracket and InstabilityError if no stable probe is found.
TransitionEstimate bisect_transition(Family family, double beta, double tol, const NodalConfig& config);

struct BatchStats {
    SurfaceSpec surface;
    int runs = 0;
    int pass = 0;
    int fail = 0;
    int report_only = 0;
    int conjecture = 0;
    int conjecture_matches = 0;
    int chi_sigma_ok = 0;
    int cover_checked = 0;
    int cover_agree = 0;  // orientability and bookkeeping both agree
    int max_nonorientable = 0;
    std::map<int, int> defect_histogram;
    std::vector<Partition> counterexamples;
    std::vector<std::string> failures;  // one message per counterexample

    bool all_passed() const { return fail == 0 && failures.empty(); }
};

// Random partitions with k drawn uniformly from [k_min, k_max], each run
// through verify_euler, check_chi_sigma and (where a cover exists) the
// cover cross-checks. Failures are returned, not thrown.
BatchStats batch_verify(const SurfaceSpec& surface, int count, std::uint64_t seed, int k_min, int k_max);

}  // namespace nodalpart
