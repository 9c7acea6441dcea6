#include "nodalpart/nodal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <string>

#include "nodalpart/errors.hpp"

namespace nodalpart {

using std::numbers::pi;

double TrigFactor::operator()(double t) const {
    const double arg = freq * t + phase;
    return kind == Trig::sin ? std::sin(arg) : std::cos(arg);
}

double Eigenfunction::operator()(double x, double y) const {
    double sum = 0.0;
    for (const auto& t : terms) sum += t.coeff * t.fx(x) * t.fy(y);
    return sum;
}

double evaluate(const Eigenfunction& f, double x, double y) { return f(x, y); }

Eigenfunction Eigenfunction::phi(double beta, double theta) {
    return {{{std::cos(theta), {Trig::sin, 2, 0.0}, {Trig::sin, 3, 0.0}},
             {std::sin(theta), {Trig::sin, 3, 0.0}, {Trig::sin, 2, beta}}}};
}

Eigenfunction Eigenfunction::bands(int m) { return {{{1.0, {Trig::sin, m, 0.0}, {Trig::cos, 0, 0.0}}}}; }

Eigenfunction Eigenfunction::ex3b(double theta) {
    return {{{std::cos(theta), {Trig::sin, 1, 0.0}, {Trig::cos, 6, 0.0}},
             {std::sin(theta), {Trig::sin, 6, 0.0}, {Trig::cos, 1, 0.0}}}};
}

Family family_from_string(std::string_view name) {
    if (name == "phi") return Family::phi;
    if (name == "bands") return Family::bands;
    if (name == "ex3b") return Family::ex3b;
    throw InvalidInput("unknown eigenfunction family '" + std::string(name) + "'");
}

std::string_view to_string(Family f) {
    switch (f) {
        case Family::phi: return "phi";
        case Family::bands: return "bands";
        case Family::ex3b: return "ex3b";
    }
    return "?";
}

Eigenfunction family_member(Family family, double beta, double param) {
    switch (family) {
        case Family::phi: return Eigenfunction::phi(beta, param);
        case Family::ex3b: return Eigenfunction::ex3b(param);
        case Family::bands: return Eigenfunction::bands(static_cast<int>(std::lround(param)));
    }
    throw InvalidInput("unknown family");
}

void NodalConfig::validate(SurfaceKind surface) const {
    if (resolution < 2) throw InvalidInput("resolution must be at least 2");
    if (!(zero_tol > 0.0) || !(symmetry_tol > 0.0)) throw InvalidInput("tolerances must be positive");
    if (max_refine < 1) throw InvalidInput("max_refine must be at least 1");
    if (surface == SurfaceKind::moebius && resolution % 2 != 0) {
        throw InvalidInput("Moebius resolution must be even, got " + std::to_string(resolution));
    }
}

int max_refine_from_env(int fallback) {
    const char* raw = std::getenv("NODAL_MAX_REFINE");
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 1 || v > 12) {
        throw InvalidInput(std::string("NODAL_MAX_REFINE must be an integer in [1, 12], got '") + raw + "'");
    }
    return static_cast<int>(v);
}

SymmetryCheck check_symmetry(const Eigenfunction& f, SurfaceKind surface, double tol) {
    if (surface != SurfaceKind::moebius && surface != SurfaceKind::rectangle) {
        throw InvalidInput("nodal partitions are supported on the Moebius strip and the rectangle");
    }
    constexpr int n = 101;
    SymmetryCheck out;
    for (int a = 0; a < n; ++a) {
        const double s = pi * a / (n - 1);
        out.dirichlet_residual = std::max({out.dirichlet_residual, std::abs(f(0.0, s)), std::abs(f(pi, s))});
        if (surface == SurfaceKind::rectangle) {
            out.dirichlet_residual = std::max({out.dirichlet_residual, std::abs(f(s, 0.0)), std::abs(f(s, pi))});
        }
    }
    if (surface == SurfaceKind::moebius) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                const double x = pi * a / (n - 1);
                const double y = pi * b / (n - 1);
                out.deck_residual = std::max(out.deck_residual, std::abs(f(x, y) - f(pi - x, y + pi)));
            }
        }
    }
    out.pass = out.deck_residual <= tol && out.dirichlet_residual <= tol;
    return out;
}

Partition rasterize(const Eigenfunction& f, SurfaceKind surface, const NodalConfig& config) {
    config.validate(surface);
    const auto sym = check_symmetry(f, surface, config.symmetry_tol);
    if (!sym.pass) {
        throw InvalidInput("function fails the symmetry check on " + std::string(to_string(surface)) +
                           " (deck residual " + std::to_string(sym.deck_residual) + ", Dirichlet residual " +
                           std::to_string(sym.dirichlet_residual) + ")");
    }
    const int n = config.resolution;
    auto c = build_complex(SurfaceSpec::preset(surface, n, n));
    const double h = pi / n;
    std::vector<int> labels(c->num_faces());
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double v = f((i + 0.5) * h, (j + 0.5) * h);
            if (std::abs(v) <= config.zero_tol) {
                throw ResolutionError("sample at face (" + std::to_string(i) + ", " + std::to_string(j) +
                                      ") is zero within tolerance at N=" + std::to_string(n));
            }
            labels[c->face(i, j)] = v > 0 ? 1 : 0;
        }
    }
    return Partition::from_labels(c, labels);
}

StableReport stable_invariants(const Eigenfunction& f, SurfaceKind surface, const NodalConfig& config) {
    config.validate(surface);
    StableReport out;
    std::optional<InvariantReport> previous;
    for (int level = 0; level <= config.max_refine; ++level) {
        NodalConfig at = config;
        at.resolution = config.resolution << level;
        InvariantReport current;
        for (int attempt = 0;; ++attempt) {
            try {
                current = invariants(rasterize(f, surface, at));
                break;
            } catch (const ResolutionError&) {
                if (attempt >= 3) throw;
                at.resolution += 2;
            }
        }
        out.resolutions.push_back(at.resolution);
        if (previous && previous->same_invariants(current)) {
            out.report = std::move(current);
            out.resolution = at.resolution;
            return out;
        }
        previous = std::move(current);
    }
    std::string tried;
    for (int r : out.resolutions) tried += " " + std::to_string(r);
    throw InstabilityError("nodal invariants did not stabilise at resolutions" + tried);
}

}  // namespace nodalpart
