#include "rci/lattice.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <unordered_map>

namespace rci {

Edge make_edge(const Vertex& u, const Vertex& v) {
    if (l1_distance(u, v) != 1) throw std::invalid_argument("make_edge: endpoints not adjacent");
    const Vertex& lo = (u < v) ? u : v;
    Axis axis;
    if (std::abs(u.x - v.x) == 1)
        axis = Axis::X;
    else if (std::abs(u.y - v.y) == 1)
        axis = Axis::Y;
    else
        axis = Axis::Z;
    return Edge{lo, axis};
}

BoxGeometry::BoxGeometry(int L, int M) : L_(L), M_(M) {
    if (L < 0 || M < 1) throw std::invalid_argument("BoxGeometry: need L >= 0 and M >= 1");
    const int w = 2 * L + 1;
    const int h = 2 * M + 1;
    n_vertices_ = w * w * h;

    edges_.reserve((std::size_t)w * w * (h + 1) + 2u * w * h * (w + 1));
    // x-edges: a=(x,y,z), b=(x+1,y,z); at least one endpoint in the box.
    off_x_ = 0;
    for (int z = -M; z <= M; ++z)
        for (int y = -L; y <= L; ++y)
            for (int x = -L - 1; x <= L; ++x) edges_.push_back(Edge{{x, y, z}, Axis::X});
    off_y_ = (int)edges_.size();
    for (int z = -M; z <= M; ++z)
        for (int y = -L - 1; y <= L; ++y)
            for (int x = -L; x <= L; ++x) edges_.push_back(Edge{{x, y, z}, Axis::Y});
    off_z_ = (int)edges_.size();
    for (int z = -M - 1; z <= M; ++z)
        for (int y = -L; y <= L; ++y)
            for (int x = -L; x <= L; ++x) edges_.push_back(Edge{{x, y, z}, Axis::Z});
}

int BoxGeometry::vertex_index(const Vertex& v) const {
    if (!vertex_in_box(v)) throw std::out_of_range("vertex_index: vertex outside box");
    const int w = 2 * L_ + 1;
    return ((v.z + M_) * w + (v.y + L_)) * w + (v.x + L_);
}

Vertex BoxGeometry::vertex_at(int idx) const {
    const int w = 2 * L_ + 1;
    Vertex v;
    v.x = idx % w - L_;
    idx /= w;
    v.y = idx % w - L_;
    v.z = idx / w - M_;
    return v;
}

int BoxGeometry::edge_index_or(const Edge& e) const {
    const int L = L_, M = M_;
    const int x = e.a.x, y = e.a.y, z = e.a.z;
    switch (e.axis) {
        case Axis::X: {
            if (x < -L - 1 || x > L || y < -L || y > L || z < -M || z > M) return -1;
            return off_x_ + ((z + M) * (2 * L + 1) + (y + L)) * (2 * L + 2) + (x + L + 1);
        }
        case Axis::Y: {
            if (y < -L - 1 || y > L || x < -L || x > L || z < -M || z > M) return -1;
            return off_y_ + ((z + M) * (2 * L + 2) + (y + L + 1)) * (2 * L + 1) + (x + L);
        }
        default: {
            if (z < -M - 1 || z > M || x < -L || x > L || y < -L || y > L) return -1;
            return off_z_ + ((z + M + 1) * (2 * L + 1) + (y + L)) * (2 * L + 1) + (x + L);
        }
    }
}

int BoxGeometry::edge_index(const Edge& e) const {
    int idx = edge_index_or(e);
    if (idx < 0) throw std::out_of_range("edge_index: edge not in E_{L,M}");
    return idx;
}

bool BoxGeometry::in_upper_boundary(const Vertex& v) const {
    if (vertex_in_box(v) || v.z <= 0) return false;
    for (Axis a : {Axis::X, Axis::Y, Axis::Z})
        for (int d : {-1, 1})
            if (vertex_in_box(v.offset(a, d))) return true;
    return false;
}

bool BoxGeometry::in_lower_boundary(const Vertex& v) const {
    if (vertex_in_box(v) || v.z > 0) return false;
    for (Axis a : {Axis::X, Axis::Y, Axis::Z})
        for (int d : {-1, 1})
            if (vertex_in_box(v.offset(a, d))) return true;
    return false;
}

std::pair<std::vector<Vertex>, std::vector<Vertex>> BoxGeometry::boundary_partition() const {
    std::vector<Vertex> up, down;
    auto consider = [&](const Vertex& v) {
        if (in_upper_boundary(v))
            up.push_back(v);
        else if (in_lower_boundary(v))
            down.push_back(v);
    };
    // Outside neighbours live one step beyond each face of the box.
    for (int z = -M_; z <= M_; ++z)
        for (int y = -L_; y <= L_; ++y) {
            consider({-L_ - 1, y, z});
            consider({L_ + 1, y, z});
        }
    for (int z = -M_; z <= M_; ++z)
        for (int x = -L_; x <= L_; ++x) {
            consider({x, -L_ - 1, z});
            consider({x, L_ + 1, z});
        }
    for (int y = -L_; y <= L_; ++y)
        for (int x = -L_; x <= L_; ++x) {
            consider({x, y, -M_ - 1});
            consider({x, y, M_ + 1});
        }
    std::sort(up.begin(), up.end());
    std::sort(down.begin(), down.end());
    return {up, down};
}

int EdgeConfiguration::open_count() const {
    int n = 0;
    for (auto w : bits_) n += std::popcount(w);
    return n;
}

bool crossing_exists(const EdgeConfiguration& omega) {
    const BoxGeometry& box = omega.box();
    UnionFind uf(box.slot_count());
    const int ne = box.edge_count();
    for (int i = 0; i < ne; ++i) {
        if (!omega.get(i)) continue;
        const Edge& e = box.edge_at(i);
        uf.unite(box.vertex_slot(e.a), box.vertex_slot(e.b()));
    }
    return uf.connected(box.top_slot(), box.bottom_slot());
}

bool crossing_exists_bfs(const EdgeConfiguration& omega, int window_radius) {
    const BoxGeometry& box = omega.box();
    const int R = window_radius;
    const int w = 2 * R + 1;
    auto vid = [&](const Vertex& v) { return ((v.z + R) * w + (v.y + R)) * w + (v.x + R); };
    auto inside = [&](const Vertex& v) {
        return std::abs(v.x) <= R && std::abs(v.y) <= R && std::abs(v.z) <= R;
    };
    auto [up, down] = box.boundary_partition();
    std::vector<char> mark((std::size_t)w * w * w, 0);
    std::queue<Vertex> q;
    for (const Vertex& v : up) {
        q.push(v);
        mark[vid(v)] = 1;
    }
    std::vector<char> is_lower((std::size_t)w * w * w, 0);
    for (const Vertex& v : down) is_lower[vid(v)] = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        if (is_lower[vid(v)]) return true;
        for (Axis a : {Axis::X, Axis::Y, Axis::Z})
            for (int d : {-1, 1}) {
                Vertex u = v.offset(a, d);
                if (!inside(u) || mark[vid(u)]) continue;
                Edge e = d > 0 ? Edge{v, a} : Edge{u, a};
                if (!omega.value(e)) continue;
                mark[vid(u)] = 1;
                q.push(u);
            }
    }
    return false;
}

}  // namespace rci
