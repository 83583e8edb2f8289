#ifndef RCI_PLAQUETTE_HPP
#define RCI_PLAQUETTE_HPP

#include <array>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rci/lattice.hpp"

namespace rci {

enum class PlaquetteOrientation : std::uint8_t { Horizontal, VerticalX, VerticalY };

/// Closed unit square of the dual lattice, identified with the unique
/// edge it is pierced by.  All geometry is carried out in doubled
/// coordinates so that corners and centres stay integral.
struct Plaquette {
    Edge dual;

    PlaquetteOrientation orientation() const {
        switch (dual.axis) {
            case Axis::Z: return PlaquetteOrientation::Horizontal;
            case Axis::X: return PlaquetteOrientation::VerticalX;
            default: return PlaquetteOrientation::VerticalY;
        }
    }
    bool horizontal() const { return dual.axis == Axis::Z; }

    std::array<int, 3> centre2() const { return dual.centre2(); }

    /// Doubled half-extent along each coordinate axis: 1 in the plane of
    /// the square, 0 along its normal (= the dual edge's axis).
    std::array<int, 3> extent2() const {
        std::array<int, 3> s = {1, 1, 1};
        s[static_cast<int>(dual.axis)] = 0;
        return s;
    }

    friend bool operator==(const Plaquette&, const Plaquette&) = default;
    friend bool operator<(const Plaquette& a, const Plaquette& b) { return a.dual < b.dual; }
};

inline Plaquette dual_plaquette(const Edge& e) { return Plaquette{e}; }
inline Edge edge_of(const Plaquette& h) { return h.dual; }

struct PlaquetteHash {
    std::size_t operator()(const Plaquette& h) const { return EdgeHash{}(h.dual); }
};

enum class PlaquetteAdjacency { None, ZeroConnected, OneConnected };

/// Classifies the intersection of two distinct plaquettes: empty, a
/// single point (0-connected only), or a unit segment (1-connected).
PlaquetteAdjacency adjacency(const Plaquette& h1, const Plaquette& h2);

inline bool one_connected(const Plaquette& h1, const Plaquette& h2) {
    return adjacency(h1, h2) == PlaquetteAdjacency::OneConnected;
}
inline bool zero_connected(const Plaquette& h1, const Plaquette& h2) {
    return adjacency(h1, h2) != PlaquetteAdjacency::None;
}

/// The twelve plaquettes sharing a unit segment with h (three per side).
std::array<Plaquette, 12> one_neighbours(const Plaquette& h);

/// L-infinity distance between plaquette centres, doubled.
inline int plaquette_distance2(const Plaquette& a, const Plaquette& b) {
    auto c = a.centre2(), d = b.centre2();
    return std::max({std::abs(c[0] - d[0]), std::abs(c[1] - d[1]), std::abs(c[2] - d[2])});
}

/// Cell (x,y) of the regular interface, i.e. the plaquette dual to the
/// vertical edge (x,y,0)-(x,y,1).
struct Cell {
    int x = 0;
    int y = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct CellHash {
    std::size_t operator()(const Cell& c) const {
        return VertexHash{}(Vertex{c.x, c.y, 0});
    }
};

inline Plaquette cell_plaquette(const Cell& c) { return Plaquette{Edge{{c.x, c.y, 0}, Axis::Z}}; }

/// Projection onto the regular interface: a cell for horizontal
/// plaquettes, a unit segment at height 1/2 between two adjacent cells
/// for vertical ones.
struct Projection {
    bool is_cell = true;
    Cell cell{};            // the cell, when is_cell
    Cell seg_lo{}, seg_hi{};  // flanking cells of the segment, otherwise
    // segment endpoints in doubled coordinates (z-coordinate is 1)
    std::array<int, 3> seg_a2{}, seg_b2{};
};

Projection project(const Plaquette& h);

/// True iff [projection of h] is a subset of the union of closed unit
/// squares of the given cells.
template <typename CellSet>
bool projection_within(const Plaquette& h, const CellSet& cells) {
    Projection pr = project(h);
    if (pr.is_cell) return cells.count(pr.cell) > 0;
    return cells.count(pr.seg_lo) > 0 || cells.count(pr.seg_hi) > 0;
}

using PlaquetteSet = std::unordered_set<Plaquette, PlaquetteHash>;

/// Partitions a finite plaquette set into its 1-connected components.
std::vector<std::vector<Plaquette>> one_connected_components(const std::vector<Plaquette>& set);
bool is_one_connected(const std::vector<Plaquette>& set);

/// Partition into 0-connected components.
std::vector<std::vector<Plaquette>> zero_connected_components(const std::vector<Plaquette>& set);

/// Axis-aligned vertex window used by the voxel labellings below.
struct VertexWindow {
    Vertex lo, hi;
    bool contains(const Vertex& v) const {
        return v.x >= lo.x && v.x <= hi.x && v.y >= lo.y && v.y <= hi.y && v.z >= lo.z &&
               v.z <= hi.z;
    }
    int size() const { return (hi.x - lo.x + 1) * (hi.y - lo.y + 1) * (hi.z - lo.z + 1); }
    int index(const Vertex& v) const {
        return ((v.z - lo.z) * (hi.y - lo.y + 1) + (v.y - lo.y)) * (hi.x - lo.x + 1) +
               (v.x - lo.x);
    }
    Vertex at(int idx) const {
        int wx = hi.x - lo.x + 1, wy = hi.y - lo.y + 1;
        return {lo.x + idx % wx, lo.y + (idx / wx) % wy, lo.z + idx / (wx * wy)};
    }
};

/// Window box strictly containing the plaquettes with `margin` cells to
/// spare (unit cubes are centred at lattice vertices).
VertexWindow bounding_window(const std::vector<Plaquette>& set, int margin);

/// Labels the unit cubes of the window as inside/outside of [H]: two
/// face-adjacent cubes communicate iff the shared face is not in H, and
/// every cube on the window rim is outside.  Returns, per window vertex,
/// true when the cube is inside.  Throws if the window does not contain
/// the surface with one cell of margin.
std::vector<char> inside_outside(const std::vector<Plaquette>& surface, const VertexWindow& window);

/// Vertices of the window whose cube is labelled inside.
std::vector<Vertex> inside_vertices(const std::vector<Plaquette>& surface,
                                    const VertexWindow& window);

/// Splitting set of a finite connected vertex set V: the 1-connected
/// component, of the set of plaquettes dual to edges leaving V, whose
/// inside contains V (the innermost such component).
std::vector<Plaquette> splitting_set(const std::vector<Vertex>& vertices);

/// The boundary graph of a finite complement component.
struct BoundaryGraph {
    std::vector<Vertex> vertices;                    // Delta_v C
    std::vector<std::pair<Vertex, Vertex>> edges;    // Delta_e C
    bool connected = false;
    std::vector<Vertex> component;                   // the component C itself
};

/// Computes C (the component of (Z^3, E \ D) containing `seed`, which
/// must be finite: the search throws if it escapes the safety window)
/// together with its boundary graph against delta / extended delta.
BoundaryGraph boundary_graph(const Vertex& seed, const std::vector<Plaquette>& delta,
                             const VertexWindow& safety);

}  // namespace rci

#endif
