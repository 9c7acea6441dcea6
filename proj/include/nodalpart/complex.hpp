#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nodalpart {

enum class Gluing { open, periodic, reversed };

// Topological type of the quotient, independent of which side carries
// which gluing.
enum class SurfaceKind { rectangle, cylinder, moebius, torus, klein, projective };

std::string_view to_string(Gluing g);
std::string_view to_string(SurfaceKind k);
SurfaceKind surface_kind_from_string(std::string_view name);

bool is_orientable(SurfaceKind k);
int expected_euler_characteristic(SurfaceKind k);
int expected_boundary_components(SurfaceKind k);

// A width x height grid of unit squares with identifications on the
// left/right sides (x_gluing) and bottom/top sides (y_gluing).
//
// periodic: (0, y) ~ (W, y)            reversed: (0, y) ~ (W, H - y)
// periodic: (x, 0) ~ (x, H)            reversed: (x, 0) ~ (W - x, H)
struct SurfaceSpec {
    int width = 2;
    int height = 2;
    Gluing x_gluing = Gluing::open;
    Gluing y_gluing = Gluing::open;

    static SurfaceSpec preset(SurfaceKind kind, int width, int height);
    static SurfaceSpec preset(std::string_view name, int width, int height);

    SurfaceKind kind() const;
    // Throws InvalidInput unless width, height >= 2.
    void validate() const;

    friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

// Sides of a face, in counter-clockwise order starting at the bottom.
enum Side : std::uint8_t { bottom = 0, right = 1, top = 2, left = 3 };

// Corners of a face: 0 = (i, j), 1 = (i+1, j), 2 = (i+1, j+1), 3 = (i, j+1).
// Side s runs from corner s to corner (s + 1) % 4.
inline constexpr std::array<std::array<int, 2>, 4> kSideCorners{{{0, 1}, {1, 2}, {2, 3}, {3, 0}}};

struct FaceSide {
    int face = -1;
    Side side = bottom;
};

// Geometric representative of a canonical edge in the unglued grid.
struct RawEdge {
    bool horizontal = true;  // from (i, j) to (i+1, j); else (i, j) to (i, j+1)
    int i = 0;
    int j = 0;
};

class CellComplex {
public:
    const SurfaceSpec& spec() const { return spec_; }
    SurfaceKind kind() const { return spec_.kind(); }
    int width() const { return spec_.width; }
    int height() const { return spec_.height; }

    int num_faces() const { return static_cast<int>(face_edges_.size()); }
    int num_edges() const { return static_cast<int>(edge_vertices_.size()); }
    int num_vertices() const { return static_cast<int>(vertex_on_boundary_.size()); }

    // Face ids are row-major: face(i, j) = j * width + i.
    int face(int i, int j) const { return j * spec_.width + i; }
    std::array<int, 2> face_coords(int f) const { return {f % spec_.width, f / spec_.width}; }

    const std::array<int, 4>& face_edges(int f) const { return face_edges_[f]; }
    const std::array<int, 4>& face_vertices(int f) const { return face_vertices_[f]; }
    const std::array<int, 2>& edge_vertices(int e) const { return edge_vertices_[e]; }

    int edge_face_count(int e) const { return edge_face_count_[e]; }
    const std::array<FaceSide, 2>& edge_faces(int e) const { return edge_faces_[e]; }

    // +1 if the charts of the two incident faces agree across e, -1 across
    // a reversed seam, 0 for edges on the surface boundary.
    int edge_parity(int e) const { return edge_parity_[e]; }

    bool edge_on_boundary(int e) const { return edge_face_count_[e] == 1; }
    bool vertex_on_boundary(int v) const { return vertex_on_boundary_[v] != 0; }

    // The face across edge `e` from `f`, or -1 on the surface boundary.
    int neighbor(int f, Side s) const;

    // Canonical ids of grid points and unit grid segments.
    int vertex_at(int i, int j) const;
    int horizontal_edge(int i, int j) const;
    int vertical_edge(int i, int j) const;

    const RawEdge& edge_representative(int e) const { return edge_rep_[e]; }
    std::array<int, 2> vertex_representative(int v) const { return vertex_rep_[v]; }

private:
    friend std::shared_ptr<const CellComplex> build_complex(const SurfaceSpec& spec);

    SurfaceSpec spec_;
    std::vector<std::array<int, 4>> face_edges_;
    std::vector<std::array<int, 4>> face_vertices_;
    std::vector<std::array<int, 2>> edge_vertices_;
    std::vector<std::array<FaceSide, 2>> edge_faces_;
    std::vector<std::uint8_t> edge_face_count_;
    std::vector<std::int8_t> edge_parity_;
    std::vector<std::uint8_t> vertex_on_boundary_;
    std::vector<RawEdge> edge_rep_;
    std::vector<std::array<int, 2>> vertex_rep_;
    std::vector<int> raw_vertex_to_canon_;
    std::vector<int> raw_edge_to_canon_;
};

using ComplexPtr = std::shared_ptr<const CellComplex>;

ComplexPtr build_complex(const SurfaceSpec& spec);

int euler_characteristic(const CellComplex& c);

// Connected components of the subgraph formed by boundary edges.
int boundary_components(const CellComplex& c);

}  // namespace nodalpart
