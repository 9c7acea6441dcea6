#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nodalpart/complex.hpp"

namespace nodalpart {

// A labelling of the faces of a complex, split into connected domains.
//
// Two faces belong to the same domain when they carry the same label and
// are joined by a chain of interior edges none of which is a wall. Domain
// ids are assigned in order of each domain's lowest face index, so equal
// inputs give byte-identical outputs.
class Partition {
public:
    // Throws InvalidInput on a label vector of the wrong size, unknown or
    // boundary wall edges, or a wall that ends in the interior of a domain.
    static Partition from_labels(ComplexPtr complex, std::span<const int> labels,
                                 std::span<const int> wall_edges = {});

    const CellComplex& complex() const { return *complex_; }
    const ComplexPtr& complex_ptr() const { return complex_; }

    int num_domains() const { return num_domains_; }
    int domain_of(int face) const { return domain_[face]; }
    const std::vector<int>& domains() const { return domain_; }
    std::vector<int> domain_faces(int id) const;

    bool has_walls() const { return !walls_.empty(); }
    bool is_wall(int edge) const;
    const std::vector<int>& walls() const { return walls_; }  // sorted

    // Edge belongs to the boundary set: a wall, or an interior edge
    // between two different domains.
    bool in_boundary_set(int edge) const;

private:
    Partition() = default;

    ComplexPtr complex_;
    std::vector<int> domain_;
    std::vector<int> walls_;
    std::vector<std::uint8_t> wall_flag_;
    int num_domains_ = 0;
};

struct SingularVertex {
    int vertex = -1;
    bool on_surface_boundary = false;
    int valence = 0;  // nu for interior vertices, rho on the surface boundary
    int index = 0;    // nu - 2, or rho
};

struct BoundaryGraph {
    std::vector<int> edges;         // boundary-set edges, ascending
    std::vector<int> valence;       // per vertex, incident boundary-set edges
    std::vector<SingularVertex> singular;
    int index_sum = 0;              // twice sigma
    int components_with_surface_boundary = 0;  // b0 of (boundary set + surface boundary)
    int surface_boundary_components = 0;
    int interior_components = 0;    // components not touching the surface boundary

    int sigma() const { return index_sum / 2; }
    int interior_singular_with_valence(int nu) const;
    int boundary_singular_with_valence(int rho) const;
};

BoundaryGraph boundary_graph(const Partition& p);

struct InvariantReport {
    int kappa = 0;
    int beta = 0;
    int sigma = 0;
    int omega = 0;
    int delta = 0;          // omega + beta + sigma - kappa
    int beta_interior = 0;  // boundary-set components not linked to the surface boundary
    std::vector<bool> domain_orientable;

    int defect() const { return -delta; }
    bool same_invariants(const InvariantReport& o) const {
        return kappa == o.kappa && beta == o.beta && sigma == o.sigma && omega == o.omega;
    }
};

// Orientability of each domain, by propagating chart signs across the
// interior edges inside the domain and looking for a contradiction.
std::vector<bool> domain_orientability(const Partition& p);

InvariantReport invariants(const Partition& p);
InvariantReport invariants(const Partition& p, const BoundaryGraph& g);

enum class VerdictStatus { pass, fail, report_only, conjecture };
std::string_view to_string(VerdictStatus s);

struct Verdict {
    SurfaceKind kind = SurfaceKind::rectangle;
    std::optional<int> expected_defect;  // kappa - (omega + beta + sigma)
    int measured_defect = 0;
    VerdictStatus status = VerdictStatus::report_only;

    // Conjectured formulas never fail, they just record agreement.
    bool matches_expected() const { return expected_defect && *expected_defect == measured_defect; }
};

Verdict verify_euler(const Partition& p);
Verdict verify_euler(SurfaceKind kind, const InvariantReport& r);

// Topology of the completion of one domain: the surface with boundary
// obtained by closing the domain up along its own side of the boundary
// set. Where the domain touches itself at a singular vertex the touching
// sectors are kept apart, so the completion is always a surface.
struct DomainReport {
    int id = -1;
    int faces = 0;
    int chi = 0;
    bool orientable = true;
    int boundary_circles = 0;  // q
    int genus = 0;             // handles g when orientable, cross-caps c otherwise

    std::string classification() const;  // "S(0,g,q)" or "S(1,c,q)"
};

DomainReport domain_report(const Partition& p, int id);
std::vector<DomainReport> domain_reports(const Partition& p);

struct ChiSigmaReport {
    int chi_surface = 0;
    int sigma = 0;
    int chi_domains = 0;  // sum over domain completions
    bool holds() const { return chi_surface + sigma == chi_domains; }
};

ChiSigmaReport check_chi_sigma(const Partition& p);

// Vertices where some domain occupies more than one sector.
std::vector<int> non_normal_vertices(const Partition& p);
bool is_normal(const Partition& p);

}  // namespace nodalpart
