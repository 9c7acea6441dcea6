#include "nodalpart/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include "nodalpart/errors.hpp"

namespace nodalpart {

namespace {

constexpr std::array<Rgb, 12> kPalette{{
    {102, 194, 165}, {252, 141, 98}, {141, 160, 203}, {231, 138, 195},
    {166, 216, 84},  {255, 217, 47}, {229, 196, 148}, {179, 179, 179},
    {141, 211, 199}, {190, 186, 218}, {251, 128, 114}, {128, 177, 211},
}};

constexpr Rgb kBlack{0, 0, 0};
constexpr Rgb kFrame{48, 48, 48};
constexpr Rgb kMark{200, 0, 0};

constexpr std::array<std::array<int, 2>, 4> kCornerOffset{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};

enum class Stroke { frame, boundary, wall };

// Axis-aligned unit segment in chart grid coordinates, (x0, y0) <= (x1, y1).
struct Segment {
    int x0, y0, x1, y1;
    Stroke stroke;
    auto key() const { return std::tie(stroke, x0, y0, x1, y1); }
    bool operator<(const Segment& o) const { return key() < o.key(); }
};

std::set<Segment> collect_segments(const Partition& p, const RenderStyle& style) {
    const auto& c = p.complex();
    std::set<Segment> out;
    for (int f = 0; f < c.num_faces(); ++f) {
        const auto [i, j] = c.face_coords(f);
        for (int s = 0; s < 4; ++s) {
            const int e = c.face_edges(f)[s];
            Stroke stroke;
            if (c.edge_on_boundary(e)) {
                if (!style.surface_boundary) continue;
                stroke = Stroke::frame;
            } else if (p.is_wall(e)) {
                if (!style.walls) continue;
                stroke = Stroke::wall;
            } else if (p.in_boundary_set(e)) {
                if (!style.boundary_set) continue;
                stroke = Stroke::boundary;
            } else {
                continue;
            }
            const auto a = kCornerOffset[kSideCorners[s][0]];
            const auto b = kCornerOffset[kSideCorners[s][1]];
            Segment seg{i + a[0], j + a[1], i + b[0], j + b[1], stroke};
            if (std::tie(seg.x1, seg.y1) < std::tie(seg.x0, seg.y0)) {
                std::swap(seg.x0, seg.x1);
                std::swap(seg.y0, seg.y1);
            }
            out.insert(seg);
        }
    }
    return out;
}

// Chart grid points of singular vertices; a seam vertex shows up at every
// position it is glued from.
std::set<std::array<int, 2>> singular_points(const Partition& p) {
    const auto& c = p.complex();
    const auto g = boundary_graph(p);
    std::vector<std::uint8_t> singular(c.num_vertices(), 0);
    for (const auto& s : g.singular) singular[s.vertex] = 1;
    std::set<std::array<int, 2>> out;
    for (int f = 0; f < c.num_faces(); ++f) {
        const auto [i, j] = c.face_coords(f);
        for (int k = 0; k < 4; ++k) {
            if (singular[c.face_vertices(f)[k]]) out.insert({i + kCornerOffset[k][0], j + kCornerOffset[k][1]});
        }
    }
    return out;
}

class Canvas {
public:
    Canvas(int w, int h) : w_(w), h_(h), px_(static_cast<std::size_t>(w) * h * 3, 255) {}

    void set(int x, int y, Rgb c) {
        if (x < 0 || y < 0 || x >= w_ || y >= h_) return;
        auto* d = &px_[(static_cast<std::size_t>(y) * w_ + x) * 3];
        d[0] = c[0];
        d[1] = c[1];
        d[2] = c[2];
    }

    void fill(int x0, int y0, int x1, int y1, Rgb c) {
        for (int y = y0; y < y1; ++y)
            for (int x = x0; x < x1; ++x) set(x, y, c);
    }

    std::string ppm() const {
        std::string out = "P6\n" + std::to_string(w_) + " " + std::to_string(h_) + "\n255\n";
        out.append(px_.begin(), px_.end());
        return out;
    }

private:
    int w_, h_;
    std::vector<std::uint8_t> px_;
};

void check_style(const RenderStyle& style) {
    if (style.cell < 1 || style.cell > 256) throw InvalidInput("cell size must be in [1, 256]");
}

std::string hex(Rgb c) {
    static const char* digits = "0123456789abcdef";
    std::string s = "#";
    for (auto v : c) {
        s += digits[v >> 4];
        s += digits[v & 15];
    }
    return s;
}

}  // namespace

Rgb domain_color(int id) {
    if (id >= 0 && id < static_cast<int>(kPalette.size())) return kPalette[id];
    std::uint32_t h = static_cast<std::uint32_t>(id) * 2654435761u;
    h ^= h >> 15;
    return {static_cast<std::uint8_t>(96 + (h & 127)), static_cast<std::uint8_t>(96 + ((h >> 8) & 127)),
            static_cast<std::uint8_t>(96 + ((h >> 16) & 127))};
}

std::string render_ppm(const Partition& p, const RenderStyle& style) {
    check_style(style);
    const auto& c = p.complex();
    const int W = c.width();
    const int H = c.height();
    const int cell = style.cell;
    Canvas canvas(W * cell + 1, H * cell + 1);
    const auto py = [&](int gy) { return (H - gy) * cell; };

    for (int f = 0; f < c.num_faces(); ++f) {
        const auto [i, j] = c.face_coords(f);
        canvas.fill(i * cell, py(j + 1), (i + 1) * cell + 1, py(j) + 1, domain_color(p.domain_of(f)));
    }

    const auto segments = collect_segments(p, style);
    const int frame_half = cell >= 4 ? 1 : 0;
    const int dash = std::max(2, cell / 2);
    for (const auto& s : segments) {
        const int half = s.stroke == Stroke::frame ? frame_half : 0;
        const Rgb color = s.stroke == Stroke::frame ? kFrame : kBlack;
        const int x0 = s.x0 * cell, x1 = s.x1 * cell;
        const int y0 = py(s.y1), y1 = py(s.y0);
        for (int y = y0; y <= y1; ++y) {
            for (int x = x0; x <= x1; ++x) {
                if (s.stroke == Stroke::wall && ((x - x0 + y - y0) / dash) % 2 == 1) continue;
                for (int d = -half; d <= half; ++d) {
                    if (x0 == x1) {
                        canvas.set(x + d, y, color);
                    } else {
                        canvas.set(x, y + d, color);
                    }
                }
            }
        }
    }

    if (style.singular) {
        const int r = std::clamp(2 * cell, 4, 12);
        for (const auto& [gx, gy] : singular_points(p)) {
            const int cx = gx * cell, cy = py(gy);
            for (int dy = -r - 1; dy <= r + 1; ++dy) {
                for (int dx = -r - 1; dx <= r + 1; ++dx) {
                    const int d2 = dx * dx + dy * dy;
                    if (d2 >= (r - 1) * (r - 1) && d2 <= r * r + r) canvas.set(cx + dx, cy + dy, kMark);
                }
            }
        }
    }
    return canvas.ppm();
}

std::string render_svg(const Partition& p, const RenderStyle& style) {
    check_style(style);
    const auto& c = p.complex();
    const int W = c.width();
    const int H = c.height();
    const int cell = style.cell;
    const int pad = cell;
    const auto px = [&](int gx) { return pad + gx * cell; };
    const auto py = [&](int gy) { return pad + (H - gy) * cell; };

    std::ostringstream out;
    const int w = W * cell + 2 * pad;
    const int h = H * cell + 2 * pad;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
        << w << ' ' << h << "\">\n";
    out << "<g shape-rendering=\"crispEdges\">\n";
    for (int j = H - 1; j >= 0; --j) {
        int start = 0;
        for (int i = 1; i <= W; ++i) {
            if (i < W && p.domain_of(c.face(i, j)) == p.domain_of(c.face(start, j))) continue;
            out << "<rect x=\"" << px(start) << "\" y=\"" << py(j + 1) << "\" width=\"" << (i - start) * cell
                << "\" height=\"" << cell << "\" fill=\"" << hex(domain_color(p.domain_of(c.face(start, j))))
                << "\"/>\n";
            start = i;
        }
    }
    out << "</g>\n";

    const auto segments = collect_segments(p, style);
    const auto group = [&](Stroke stroke, const char* attrs) {
        out << "<g " << attrs << ">\n";
        for (const auto& s : segments) {
            if (s.stroke != stroke) continue;
            out << "<line x1=\"" << px(s.x0) << "\" y1=\"" << py(s.y0) << "\" x2=\"" << px(s.x1) << "\" y2=\""
                << py(s.y1) << "\"/>\n";
        }
        out << "</g>\n";
    };
    group(Stroke::frame, "stroke=\"#303030\" stroke-width=\"3\" stroke-linecap=\"square\"");
    group(Stroke::boundary, "stroke=\"#000000\" stroke-width=\"1\" stroke-linecap=\"square\"");
    group(Stroke::wall, "stroke=\"#000000\" stroke-width=\"1\" stroke-dasharray=\"3 2\"");

    if (style.singular) {
        const int r = std::clamp(2 * cell, 4, 12);
        out << "<g fill=\"none\" stroke=\"#c80000\" stroke-width=\"1\">\n";
        for (const auto& [gx, gy] : singular_points(p)) {
            out << "<circle cx=\"" << px(gx) << "\" cy=\"" << py(gy) << "\" r=\"" << r << "\"/>\n";
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace nodalpart
