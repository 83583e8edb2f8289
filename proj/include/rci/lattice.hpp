#ifndef RCI_LATTICE_HPP
#define RCI_LATTICE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rci {

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline const char* axis_name(Axis a) {
    switch (a) {
        case Axis::X: return "x";
        case Axis::Y: return "y";
        default: return "z";
    }
}

struct Vertex {
    int x = 0;
    int y = 0;
    int z = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;

    Vertex offset(Axis a, int d) const {
        Vertex v = *this;
        switch (a) {
            case Axis::X: v.x += d; break;
            case Axis::Y: v.y += d; break;
            case Axis::Z: v.z += d; break;
        }
        return v;
    }
};

inline int l1_distance(const Vertex& a, const Vertex& b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z);
}

inline int linf_distance(const Vertex& a, const Vertex& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

/// Nearest-neighbour edge stored in canonical form: `a` is the
/// lexicographically smaller endpoint and the edge runs along `axis`.
struct Edge {
    Vertex a;
    Axis axis = Axis::X;

    Vertex b() const { return a.offset(axis, 1); }

    /// Doubled midpoint, kept integral so edges order and hash exactly.
    std::array<int, 3> centre2() const {
        std::array<int, 3> c = {2 * a.x, 2 * a.y, 2 * a.z};
        c[static_cast<int>(axis)] += 1;
        return c;
    }

    friend bool operator==(const Edge&, const Edge&) = default;

    // Lexicographic order of edge centres, as used for tie-breaking.
    friend bool operator<(const Edge& lhs, const Edge& rhs) {
        return lhs.centre2() < rhs.centre2();
    }
};

/// Builds the canonical edge between two vertices at L1 distance 1.
Edge make_edge(const Vertex& u, const Vertex& v);

inline Edge edge_from(const Vertex& base, Axis axis, int dir = 1) {
    return dir >= 0 ? Edge{base, axis} : Edge{base.offset(axis, -1), axis};
}

/// Mixed boundary field: every edge open except the vertical edges
/// joining height 0 to height 1.
inline bool mu_open(const Edge& e) {
    return !(e.axis == Axis::Z && e.a.z == 0);
}

// L-infinity distance between edge centres (doubled, so integral).
inline int edge_centre_distance2(const Edge& e, const Edge& f) {
    auto c = e.centre2(), d = f.centre2();
    return std::max({std::abs(c[0] - d[0]), std::abs(c[1] - d[1]), std::abs(c[2] - d[2])});
}

struct VertexHash {
    std::size_t operator()(const Vertex& v) const {
        std::uint64_t h = (std::uint64_t)(std::uint32_t)v.x;
        h = h * 0x9e3779b97f4a7c15ull + (std::uint32_t)v.y;
        h = h * 0x9e3779b97f4a7c15ull + (std::uint32_t)v.z;
        h ^= h >> 31;
        return (std::size_t)(h * 0xbf58476d1ce4e5b9ull >> 17);
    }
};

struct EdgeHash {
    std::size_t operator()(const Edge& e) const {
        std::uint64_t h = VertexHash{}(e.a);
        return (std::size_t)((h << 2) ^ (h >> 7) ^ (std::uint64_t)e.axis);
    }
};

/// The box [-L,L]^2 x [-M,M] with its edge set (every edge having at
/// least one endpoint inside), dense edge/vertex indices and the
/// upper/lower outside boundaries.
class BoxGeometry {
  public:
    /// L may be 0 (single-column boxes used by the exact engine); M >= 1.
    BoxGeometry(int L, int M);

    int L() const { return L_; }
    int M() const { return M_; }

    int vertex_count() const { return n_vertices_; }
    int edge_count() const { return (int)edges_.size(); }

    bool vertex_in_box(const Vertex& v) const {
        return std::abs(v.x) <= L_ && std::abs(v.y) <= L_ && std::abs(v.z) <= M_;
    }

    /// Dense index of an in-box vertex.
    int vertex_index(const Vertex& v) const;
    Vertex vertex_at(int idx) const;

    bool edge_in_set(const Edge& e) const { return edge_index_or(e) >= 0; }
    /// Dense index ordered by (axis, a.z, a.y, a.x); -1 if absent.
    int edge_index_or(const Edge& e) const;
    int edge_index(const Edge& e) const;
    const Edge& edge_at(int idx) const { return edges_[idx]; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Slot used by union-find style connectivity sweeps: in-box vertices
    /// map to their dense index, outside vertices collapse to the two
    /// supernodes for the open upper/lower half-spaces under mu.
    int top_slot() const { return n_vertices_; }
    int bottom_slot() const { return n_vertices_ + 1; }
    int slot_count() const { return n_vertices_ + 2; }
    int vertex_slot(const Vertex& v) const {
        if (vertex_in_box(v)) return vertex_index(v);
        return v.z >= 1 ? top_slot() : bottom_slot();
    }

    bool in_upper_boundary(const Vertex& v) const;
    bool in_lower_boundary(const Vertex& v) const;
    /// (upper, lower) outside-neighbour boundaries of the box.
    std::pair<std::vector<Vertex>, std::vector<Vertex>> boundary_partition() const;

  private:
    int L_, M_;
    int n_vertices_;
    std::vector<Edge> edges_;
    // offsets into edges_ for the three axis blocks
    int off_x_, off_y_, off_z_;
};

/// Edge configuration on E_{L,M}; the value off the box is always mu
/// and never stored.
class EdgeConfiguration {
  public:
    explicit EdgeConfiguration(const BoxGeometry& box, bool fill = false)
        : box_(&box), bits_((box.edge_count() + 63) / 64, fill ? ~0ull : 0ull) {
        if (fill) trim();
    }

    const BoxGeometry& box() const { return *box_; }

    bool get(int idx) const { return (bits_[idx >> 6] >> (idx & 63)) & 1; }
    void set(int idx, bool v) {
        std::uint64_t m = 1ull << (idx & 63);
        if (v)
            bits_[idx >> 6] |= m;
        else
            bits_[idx >> 6] &= ~m;
    }

    /// Value of the full configuration: omega inside, mu outside.
    bool value(const Edge& e) const {
        int idx = box_->edge_index_or(e);
        return idx >= 0 ? get(idx) : mu_open(e);
    }

    int open_count() const;

    bool operator==(const EdgeConfiguration& o) const { return bits_ == o.bits_; }

    const std::vector<std::uint64_t>& words() const { return bits_; }
    std::vector<std::uint64_t>& words() { return bits_; }

  private:
    void trim() {
        int n = box_->edge_count();
        if (n & 63) bits_.back() &= (1ull << (n & 63)) - 1;
    }
    const BoxGeometry* box_;
    std::vector<std::uint64_t> bits_;
};

/// True iff some vertex of the upper boundary joins some vertex of the
/// lower boundary by an open path in the full configuration.  Computed
/// on the contracted graph (box vertices plus TOP/BOTTOM supernodes),
/// which agrees with the infinite-lattice answer.
bool crossing_exists(const EdgeConfiguration& omega);

/// Reference oracle: breadth-first search on a padded window of the
/// given radius, no supernode contraction.
bool crossing_exists_bfs(const EdgeConfiguration& omega, int window_radius);

/// Small union-find used across the library.
class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }
    int find(int v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }
    bool connected(int a, int b) { return find(a) == find(b); }
    int component_count() {
        int n = 0;
        for (int i = 0; i < (int)parent_.size(); ++i)
            if (find(i) == i) ++n;
        return n;
    }

  private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

}  // namespace rci

#endif
