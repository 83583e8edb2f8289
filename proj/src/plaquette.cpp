#include "rci/plaquette.hpp"

#include <algorithm>
#include <queue>

namespace rci {

namespace {

Plaquette plaquette_from_centre2(const std::array<int, 3>& c2) {
    int k = (c2[0] & 1) ? 0 : ((c2[1] & 1) ? 1 : 2);
    Vertex a{(c2[0] - (k == 0)) / 2, (c2[1] - (k == 1)) / 2, (c2[2] - (k == 2)) / 2};
    return Plaquette{Edge{a, static_cast<Axis>(k)}};
}

bool valid_centre2(const std::array<int, 3>& c2) {
    return ((c2[0] & 1) + (c2[1] & 1) + (c2[2] & 1)) == 1;
}

// Relative centre offsets at which two plaquettes can intersect,
// precomputed per normal axis of the first plaquette.
const std::vector<std::array<int, 3>>& contact_offsets(int normal) {
    static std::vector<std::array<int, 3>> tables[3];
    static bool built = false;
    if (!built) {
        for (int n1 = 0; n1 < 3; ++n1) {
            std::array<int, 3> base = {0, 0, 0};
            base[n1] = 1;
            Plaquette h1 = plaquette_from_centre2(base);
            for (int dx = -2; dx <= 2; ++dx)
                for (int dy = -2; dy <= 2; ++dy)
                    for (int dz = -2; dz <= 2; ++dz) {
                        if (dx == 0 && dy == 0 && dz == 0) continue;
                        std::array<int, 3> c2 = {base[0] + dx, base[1] + dy, base[2] + dz};
                        if (!valid_centre2(c2)) continue;
                        Plaquette h2 = plaquette_from_centre2(c2);
                        if (adjacency(h1, h2) != PlaquetteAdjacency::None)
                            tables[n1].push_back({dx, dy, dz});
                    }
        }
        built = true;
    }
    return tables[normal];
}

}  // namespace

PlaquetteAdjacency adjacency(const Plaquette& h1, const Plaquette& h2) {
    if (h1 == h2) throw std::invalid_argument("adjacency: plaquettes must be distinct");
    auto c1 = h1.centre2(), c2 = h2.centre2();
    auto s1 = h1.extent2(), s2 = h2.extent2();
    int positive = 0;
    for (int i = 0; i < 3; ++i) {
        int lo = std::max(c1[i] - s1[i], c2[i] - s2[i]);
        int hi = std::min(c1[i] + s1[i], c2[i] + s2[i]);
        if (lo > hi) return PlaquetteAdjacency::None;
        if (hi > lo) ++positive;
    }
    // Distinct closed unit squares meet in a point or a unit segment.
    return positive == 1 ? PlaquetteAdjacency::OneConnected : PlaquetteAdjacency::ZeroConnected;
}

std::array<Plaquette, 12> one_neighbours(const Plaquette& h) {
    std::array<Plaquette, 12> out;
    auto c = h.centre2();
    int n = static_cast<int>(h.dual.axis);
    int u = (n + 1) % 3, v = (n + 2) % 3;
    int k = 0;
    for (int inplane : {u, v}) {
        for (int dir : {-1, 1}) {
            std::array<int, 3> side = c;
            side[inplane] += dir;
            // the three other plaquettes containing this side
            std::array<int, 3> nb = side;
            nb[inplane] += dir;
            out[k++] = plaquette_from_centre2(nb);
            for (int dn : {-1, 1}) {
                nb = side;
                nb[n] += dn;
                out[k++] = plaquette_from_centre2(nb);
            }
        }
    }
    return out;
}

Projection project(const Plaquette& h) {
    Projection pr;
    const Vertex& a = h.dual.a;
    switch (h.dual.axis) {
        case Axis::Z:
            pr.is_cell = true;
            pr.cell = {a.x, a.y};
            return pr;
        case Axis::X:
            pr.is_cell = false;
            pr.seg_lo = {a.x, a.y};
            pr.seg_hi = {a.x + 1, a.y};
            pr.seg_a2 = {2 * a.x + 1, 2 * a.y - 1, 1};
            pr.seg_b2 = {2 * a.x + 1, 2 * a.y + 1, 1};
            return pr;
        default:
            pr.is_cell = false;
            pr.seg_lo = {a.x, a.y};
            pr.seg_hi = {a.x, a.y + 1};
            pr.seg_a2 = {2 * a.x - 1, 2 * a.y + 1, 1};
            pr.seg_b2 = {2 * a.x + 1, 2 * a.y + 1, 1};
            return pr;
    }
}

namespace {

std::vector<std::vector<Plaquette>> components_impl(const std::vector<Plaquette>& set,
                                                    bool one_conn) {
    std::unordered_map<Plaquette, int, PlaquetteHash> index;
    index.reserve(set.size() * 2);
    for (int i = 0; i < (int)set.size(); ++i) index.emplace(set[i], i);
    std::vector<char> seen(set.size(), 0);
    std::vector<std::vector<Plaquette>> comps;
    std::vector<int> stack;
    for (int s = 0; s < (int)set.size(); ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            comps.back().push_back(set[i]);
            if (one_conn) {
                for (const Plaquette& nb : one_neighbours(set[i])) {
                    auto it = index.find(nb);
                    if (it != index.end() && !seen[it->second]) {
                        seen[it->second] = 1;
                        stack.push_back(it->second);
                    }
                }
            } else {
                auto c = set[i].centre2();
                for (const auto& d : contact_offsets((int)set[i].dual.axis)) {
                    Plaquette nb = plaquette_from_centre2({c[0] + d[0], c[1] + d[1], c[2] + d[2]});
                    auto it = index.find(nb);
                    if (it != index.end() && !seen[it->second]) {
                        seen[it->second] = 1;
                        stack.push_back(it->second);
                    }
                }
            }
        }
    }
    return comps;
}

}  // namespace

std::vector<std::vector<Plaquette>> one_connected_components(const std::vector<Plaquette>& set) {
    return components_impl(set, true);
}

bool is_one_connected(const std::vector<Plaquette>& set) {
    return set.empty() || components_impl(set, true).size() == 1;
}

std::vector<std::vector<Plaquette>> zero_connected_components(const std::vector<Plaquette>& set) {
    return components_impl(set, false);
}

VertexWindow bounding_window(const std::vector<Plaquette>& set, int margin) {
    if (set.empty()) throw std::invalid_argument("bounding_window: empty plaquette set");
    Vertex lo = set[0].dual.a, hi = set[0].dual.b();
    for (const Plaquette& h : set) {
        Vertex a = h.dual.a, b = h.dual.b();
        lo.x = std::min(lo.x, a.x);
        lo.y = std::min(lo.y, a.y);
        lo.z = std::min(lo.z, a.z);
        hi.x = std::max(hi.x, b.x);
        hi.y = std::max(hi.y, b.y);
        hi.z = std::max(hi.z, b.z);
    }
    lo = {lo.x - margin, lo.y - margin, lo.z - margin};
    hi = {hi.x + margin, hi.y + margin, hi.z + margin};
    return {lo, hi};
}

std::vector<char> inside_outside(const std::vector<Plaquette>& surface,
                                 const VertexWindow& window) {
    PlaquetteSet faces(surface.begin(), surface.end());
    for (const Plaquette& h : surface) {
        Vertex a = h.dual.a, b = h.dual.b();
        if (!window.contains(a) || !window.contains(b) || a.x == window.lo.x ||
            a.y == window.lo.y || a.z == window.lo.z || b.x == window.hi.x ||
            b.y == window.hi.y || b.z == window.hi.z)
            throw std::invalid_argument("inside_outside: window lacks a cell of margin");
    }
    const int n = window.size();
    std::vector<char> outside(n, 0);
    std::vector<int> stack;
    auto push_if = [&](const Vertex& v) {
        int i = window.index(v);
        if (!outside[i]) {
            outside[i] = 1;
            stack.push_back(i);
        }
    };
    for (int i = 0; i < n; ++i) {
        Vertex v = window.at(i);
        if (v.x == window.lo.x || v.x == window.hi.x || v.y == window.lo.y ||
            v.y == window.hi.y || v.z == window.lo.z || v.z == window.hi.z)
            push_if(v);
    }
    while (!stack.empty()) {
        Vertex v = window.at(stack.back());
        stack.pop_back();
        for (Axis a : {Axis::X, Axis::Y, Axis::Z})
            for (int d : {-1, 1}) {
                Vertex u = v.offset(a, d);
                if (!window.contains(u)) continue;
                Edge shared = d > 0 ? Edge{v, a} : Edge{u, a};
                if (faces.count(Plaquette{shared})) continue;
                push_if(u);
            }
    }
    std::vector<char> inside(n);
    for (int i = 0; i < n; ++i) inside[i] = !outside[i];
    return inside;
}

std::vector<Vertex> inside_vertices(const std::vector<Plaquette>& surface,
                                    const VertexWindow& window) {
    auto inside = inside_outside(surface, window);
    std::vector<Vertex> out;
    for (int i = 0; i < window.size(); ++i)
        if (inside[i]) out.push_back(window.at(i));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Plaquette> splitting_set(const std::vector<Vertex>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("splitting_set: empty vertex set");
    std::unordered_set<Vertex, VertexHash> vset(vertices.begin(), vertices.end());

    // connectivity of V
    {
        std::vector<Vertex> stack = {vertices[0]};
        std::unordered_set<Vertex, VertexHash> seen = {vertices[0]};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Axis a : {Axis::X, Axis::Y, Axis::Z})
                for (int d : {-1, 1}) {
                    Vertex u = v.offset(a, d);
                    if (vset.count(u) && !seen.count(u)) {
                        seen.insert(u);
                        stack.push_back(u);
                    }
                }
        }
        if (seen.size() != vset.size())
            throw std::invalid_argument("splitting_set: vertex set not connected");
    }

    std::vector<Plaquette> boundary;
    for (const Vertex& v : vset)
        for (Axis a : {Axis::X, Axis::Y, Axis::Z})
            for (int d : {-1, 1}) {
                Vertex u = v.offset(a, d);
                if (!vset.count(u)) boundary.push_back(Plaquette{d > 0 ? Edge{v, a} : Edge{u, a}});
            }

    VertexWindow window = bounding_window(boundary, 1);
    auto comps = one_connected_components(boundary);
    const std::vector<Plaquette>* best = nullptr;
    long best_inside = -1;
    for (const auto& comp : comps) {
        auto inside = inside_outside(comp, window);
        bool contains_all = true;
        for (const Vertex& v : vertices)
            if (!inside[window.index(v)]) {
                contains_all = false;
                break;
            }
        if (!contains_all) continue;
        long count = std::count(inside.begin(), inside.end(), (char)1);
        if (best == nullptr || count < best_inside) {
            best = &comp;
            best_inside = count;
        }
    }
    if (!best) throw std::logic_error("splitting_set: no component encloses V");
    return *best;
}

BoundaryGraph boundary_graph(const Vertex& seed, const std::vector<Plaquette>& delta,
                             const VertexWindow& safety) {
    PlaquetteSet dset(delta.begin(), delta.end());
    PlaquetteSet extended = dset;
    for (const Plaquette& h : delta)
        for (const Plaquette& nb : one_neighbours(h)) extended.insert(nb);

    // the component of the complement graph containing the seed
    std::unordered_set<Vertex, VertexHash> comp = {seed};
    std::vector<Vertex> stack = {seed};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        if (!safety.contains(v))
            throw std::invalid_argument("boundary_graph: component escapes safety window");
        for (Axis a : {Axis::X, Axis::Y, Axis::Z})
            for (int d : {-1, 1}) {
                Vertex u = v.offset(a, d);
                Edge e = d > 0 ? Edge{v, a} : Edge{u, a};
                if (dset.count(Plaquette{e})) continue;
                if (!comp.count(u)) {
                    comp.insert(u);
                    stack.push_back(u);
                }
            }
    }

    BoundaryGraph out;
    out.component.assign(comp.begin(), comp.end());
    std::sort(out.component.begin(), out.component.end());
    std::unordered_map<Vertex, int, VertexHash> vid;
    for (const Vertex& v : out.component) {
        bool touches = false;
        for (Axis a : {Axis::X, Axis::Y, Axis::Z})
            for (int d : {-1, 1}) {
                Edge e = d > 0 ? Edge{v, a} : Edge{v.offset(a, d), a};
                if (extended.count(Plaquette{e})) touches = true;
            }
        if (touches) {
            vid.emplace(v, (int)out.vertices.size());
            out.vertices.push_back(v);
        }
    }
    for (const Vertex& v : out.component)
        for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
            Vertex u = v.offset(a, 1);
            if (!comp.count(u)) continue;
            Edge e{v, a};
            if (dset.count(Plaquette{e})) continue;  // not an edge of C
            if (extended.count(Plaquette{e})) out.edges.push_back({v, u});
        }

    if (out.vertices.size() <= 1) {
        out.connected = true;
        return out;
    }
    UnionFind uf((int)out.vertices.size());
    for (const auto& [v, u] : out.edges) uf.unite(vid.at(v), vid.at(u));
    int comps = 0;
    for (int i = 0; i < (int)out.vertices.size(); ++i)
        if (uf.find(i) == i) ++comps;
    out.connected = comps == 1;
    return out;
}

}  // namespace rci
