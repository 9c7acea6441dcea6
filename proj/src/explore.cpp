#include "nodalpart/explore.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "nodalpart/cover.hpp"
#include "nodalpart/errors.hpp"
#include "nodalpart/rng.hpp"
#include "nodalpart/surgery.hpp"

namespace nodalpart {

Partition random_partition(const ComplexPtr& c, const RandomSpec& spec) {
    const int nf = c->num_faces();
    if (spec.k < 1 || spec.k > nf) {
        throw InvalidInput("k must be in [1, " + std::to_string(nf) + "], got " + std::to_string(spec.k));
    }
    Rng rng(spec.seed);

    // Partial Fisher-Yates for k distinct seed faces.
    std::vector<int> order(nf);
    for (int f = 0; f < nf; ++f) order[f] = f;
    for (int t = 0; t < spec.k; ++t) {
        const int pick = t + static_cast<int>(rng.below(static_cast<std::uint64_t>(nf - t)));
        std::swap(order[t], order[pick]);
    }

    std::vector<int> labels(nf, -1);
    std::vector<std::array<int, 2>> frontier;  // (face, label) claims
    const auto push_neighbors = [&](int f, int label) {
        for (int s = 0; s < 4; ++s) {
            const int g = c->neighbor(f, static_cast<Side>(s));
            if (g >= 0 && labels[g] < 0) frontier.push_back({g, label});
        }
    };
    for (int t = 0; t < spec.k; ++t) {
        labels[order[t]] = t;
        push_neighbors(order[t], t);
    }
    while (!frontier.empty()) {
        const std::size_t idx = rng.below(frontier.size());
        const auto [f, label] = frontier[idx];
        frontier[idx] = frontier.back();
        frontier.pop_back();
        if (labels[f] >= 0) continue;
        labels[f] = label;
        push_neighbors(f, label);
    }
    return Partition::from_labels(c, labels);
}

std::vector<int> random_block_cycle(const CellComplex& c, std::uint64_t seed) {
    const int W = c.width();
    const int H = c.height();
    if (W < 3 || H < 3) throw InvalidInput("block cycles need a grid of at least 3x3");
    Rng rng(seed);
    const int i0 = rng.between(1, W - 2);
    const int j0 = rng.between(1, H - 2);
    const int i1 = rng.between(i0 + 1, W - 1);
    const int j1 = rng.between(j0 + 1, H - 1);
    std::vector<std::array<int, 2>> pts;
    for (int i = i0; i <= i1; ++i) pts.push_back({i, j0});
    for (int j = j0 + 1; j <= j1; ++j) pts.push_back({i1, j});
    for (int i = i1 - 1; i >= i0; --i) pts.push_back({i, j1});
    for (int j = j1 - 1; j >= j0; --j) pts.push_back({i0, j});
    return edges_from_points(c, pts);
}

std::vector<SweepRow> sweep(Family family, double beta, const std::vector<double>& params, SurfaceKind surface,
                            const NodalConfig& config) {
    for (std::size_t k = 1; k < params.size(); ++k) {
        if (!(params[k] > params[k - 1])) throw InvalidInput("sweep parameters must be strictly increasing");
    }
    std::vector<SweepRow> rows;
    rows.reserve(params.size());
    for (double param : params) {
        SweepRow row;
        row.param = param;
        try {
            row.stable = stable_invariants(family_member(family, beta, param), surface, config);
        } catch (const InstabilityError& e) {
            row.error = e.what();
        } catch (const ResolutionError& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int omega_steps(const std::vector<SweepRow>& rows) {
    int steps = 0;
    std::optional<int> last;
    for (const auto& row : rows) {
        if (!row.stable) continue;
        const int w = row.stable->report.omega;
        if (last && *last != w) ++steps;
        last = w;
    }
    return steps;
}

TransitionEstimate bisect_transition(Family family, double beta, double tol, const NodalConfig& config) {
    using std::numbers::pi;
    if (!(tol > 0.0)) throw InvalidInput("bisection tolerance must be positive");
    const auto probe = [&](double theta) { return stable_invariants(family_member(family, beta, theta), SurfaceKind::moebius, config); };

    TransitionEstimate est;
    est.beta = beta;
    est.theta_low = 0.05;
    est.theta_high = pi / 2 - 0.05;
    const auto lo = probe(est.theta_low);
    const auto hi = probe(est.theta_high);
    if (lo.report.omega != 0 || hi.report.omega != 1) {
        throw InvalidInput("omega does not rise from 0 to 1 across the initial bracket (got " +
                           std::to_string(lo.report.omega) + " -> " + std::to_string(hi.report.omega) + ")");
    }
    est.resolution_low = lo.resolution;
    est.resolution_high = hi.resolution;

    constexpr std::array<double, 7> offsets{0.0, -0.125, 0.125, -0.25, 0.25, -0.375, 0.375};
    while (est.width() > tol) {
        const double w = est.width();
        const double mid = 0.5 * (est.theta_low + est.theta_high);
        bool moved = false;
        for (double off : offsets) {
            const double theta = mid + off * w;
            try {
                const auto s = probe(theta);
                if (s.report.omega == 0) {
                    est.theta_low = theta;
                    est.resolution_low = s.resolution;
                } else {
                    est.theta_high = theta;
                    est.resolution_high = s.resolution;
                }
                moved = true;
                break;
            } catch (const InstabilityError&) {
                ++est.skipped_unstable;
            } catch (const ResolutionError&) {
                ++est.skipped_unstable;
            }
        }
        if (!moved) {
            throw InstabilityError("no stable probe inside [" + std::to_string(est.theta_low) + ", " +
                                   std::to_string(est.theta_high) + "]");
        }
        ++est.iterations;
    }
    return est;
}

BatchStats batch_verify(const SurfaceSpec& surface, int count, std::uint64_t seed, int k_min, int k_max) {
    if (count < 0) throw InvalidInput("count must be non-negative");
    if (k_min < 1 || k_max < k_min) throw InvalidInput("k range must satisfy 1 <= k_min <= k_max");
    constexpr std::size_t kMaxCounterexamples = 20;

    const auto c = build_complex(surface);
    const SurfaceKind kind = surface.kind();
    std::optional<CoverStructure> cover;
    if (surface.y_gluing == Gluing::reversed && surface.x_gluing != Gluing::reversed) cover = double_cover(c);

    BatchStats stats;
    stats.surface = surface;
    for (int run = 0; run < count; ++run) {
        const std::uint64_t run_seed = mix_seed(seed, static_cast<std::uint64_t>(run));
        Rng pick(run_seed);
        const int k = std::min(pick.between(k_min, k_max), c->num_faces());
        const auto p = random_partition(c, RandomSpec{run_seed ^ 0x5bd1e995ULL, k});
        ++stats.runs;

        std::string problem;
        try {
            const auto inv = invariants(p);
            const auto v = verify_euler(kind, inv);
            ++stats.defect_histogram[v.measured_defect];
            switch (v.status) {
                case VerdictStatus::pass: ++stats.pass; break;
                case VerdictStatus::fail:
                    ++stats.fail;
                    problem = "defect " + std::to_string(v.measured_defect) + ", expected " +
                              std::to_string(*v.expected_defect);
                    break;
                case VerdictStatus::report_only: ++stats.report_only; break;
                case VerdictStatus::conjecture:
                    ++stats.conjecture;
                    if (v.matches_expected()) ++stats.conjecture_matches;
                    break;
            }
            if (check_chi_sigma(p).holds()) {
                ++stats.chi_sigma_ok;
            } else if (problem.empty()) {
                problem = "chi + sigma identity fails";
            }
            if (cover) {
                ++stats.cover_checked;
                const auto via_cover = omega_via_cover(*cover, p);
                const auto book = cover_bookkeeping(*cover, p);
                stats.max_nonorientable = std::max(stats.max_nonorientable, book.n_nonorientable);
                if (via_cover == inv.domain_orientable) {
                    ++stats.cover_agree;
                } else if (problem.empty()) {
                    problem = "orientability disagrees between parity and cover";
                }
            }
        } catch (const InvariantViolation& e) {
            problem = e.what();
        }
        if (!problem.empty()) {
            stats.failures.push_back("run " + std::to_string(run) + ": " + problem);
            if (stats.counterexamples.size() < kMaxCounterexamples) stats.counterexamples.push_back(p);
        }
    }
    return stats;
}

}  // namespace nodalpart
