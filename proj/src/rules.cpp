#include <algorithm>

#include "evaluator.hpp"
#include "rewrite.hpp"

namespace kg {

namespace {

using Slot = RegionBuilder::Slot;

LaurentPoly qmono(int e) { return LaurentPoly::monomial(1, e); }

// Removes one node and wires its four slots pairwise.
Diagram splice_node(const Diagram& d, int node, std::array<std::pair<int, int>, 2> pairs) {
    RegionBuilder b(d);
    b.remove(node);
    for (int p = 0; p < 4; ++p) b.port_at(dart_at(node, p));
    for (auto [a, c] : pairs) b.join(RegionBuilder::port(a), RegionBuilder::port(c));
    return b.build();
}

void require(bool ok, const char* what) {
    if (!ok) throw DiagramError(what);
}

struct Triangle {
    std::array<int, 3> nodes;
    std::array<Dart, 6> ports;
    std::array<Role, 6> roles;
};

Triangle triangle_of(const Diagram& d, const TriangleSite& s) {
    Triangle t{};
    for (int k = 0; k < 3; ++k) {
        Dart a = s.darts[k];
        t.nodes[k] = node_of(a);
        require(d.kind(t.nodes[k]) == NodeKind::VertexIIOO, "triangle vertex is not In-In-Out-Out");
        require(d.partner(s.darts[k]) == ccw(s.darts[(k + 1) % 3]), "darts do not bound a triangular face");
        t.ports[2 * k] = opposite(a);
        t.ports[2 * k + 1] = ccw(opposite(a));
    }
    require(t.nodes[0] != t.nodes[1] && t.nodes[1] != t.nodes[2] && t.nodes[0] != t.nodes[2],
            "triangle vertices are not distinct");
    for (int i = 0; i < 6; ++i) t.roles[i] = d.role(t.ports[i]);
    return t;
}

RegionBuilder open_triangle(const Diagram& d, const Triangle& t) {
    RegionBuilder b(d);
    for (int v : t.nodes) b.remove(v);
    for (Dart x : t.ports) b.port_at(x);
    return b;
}

// Arcs (P_j P_{j+1}) for the given j.
Diagram triangle_arcs(const Diagram& d, const Triangle& t, int first) {
    RegionBuilder b = open_triangle(d, t);
    for (int j = first; j < 6; j += 2) b.join(RegionBuilder::port(j), RegionBuilder::port((j + 1) % 6));
    return b.build();
}

// Arc (P_j P_{j+1}) and one vertex on the other four ports.
Diagram triangle_one_vertex(const Diagram& d, const Triangle& t, int j) {
    RegionBuilder b = open_triangle(d, t);
    b.join(RegionBuilder::port(j), RegionBuilder::port((j + 1) % 6));
    std::array<Role, 4> roles{};
    for (int i = 0; i < 4; ++i) roles[i] = t.roles[(j + 2 + i) % 6];
    int v = b.node(NodeKind::VertexIIOO, roles);
    for (int i = 0; i < 4; ++i) b.join(RegionBuilder::port((j + 2 + i) % 6), RegionBuilder::at(v, i));
    return b.build();
}

// The triangle flipped across to the other three corners.
Diagram triangle_flipped(const Diagram& d, const Triangle& t) {
    RegionBuilder b = open_triangle(d, t);
    std::array<int, 3> v{};
    for (int k = 0; k < 3; ++k) {
        Role r0 = t.roles[(2 * k + 1) % 6], r1 = t.roles[(2 * k + 2) % 6];
        v[k] = b.node(NodeKind::VertexIIOO, {r0, r1, flip(r0), flip(r1)});
    }
    for (int k = 0; k < 3; ++k) {
        b.join(RegionBuilder::port((2 * k + 1) % 6), RegionBuilder::at(v[k], 0));
        b.join(RegionBuilder::port((2 * k + 2) % 6), RegionBuilder::at(v[k], 1));
        b.join(RegionBuilder::at(v[k], 2), RegionBuilder::at(v[(k + 1) % 3], 3));
    }
    return b.build();
}

}  // namespace

std::array<StateTerm, 2> resolve_crossing(const Diagram& d, int node, int n) {
    NodeKind k = d.kind(node);
    require(is_crossing(k), "node is not a crossing");
    if (k == NodeKind::PositiveCrossing) {
        return {StateTerm{qmono(n - 1), splice_node(d, node, {{{0, 1}, {3, 2}}})},
                StateTerm{-qmono(n), retype(d, node, NodeKind::VertexIIOO, 3)}};
    }
    return {StateTerm{qmono(1 - n), splice_node(d, node, {{{0, 3}, {1, 2}}})},
            StateTerm{-qmono(-n), retype(d, node, NodeKind::VertexIIOO, 0)}};
}

std::array<Diagram, 2> smooth_ioio(const Diagram& d, int node) {
    require(d.kind(node) == NodeKind::VertexIOIO, "node is not an In-Out-In-Out vertex");
    return {splice_node(d, node, {{{0, 1}, {2, 3}}}), splice_node(d, node, {{{0, 3}, {2, 1}}})};
}

std::pair<LaurentPoly, Diagram> reduce_circle(const Diagram& d, int n) {
    return {LaurentPoly::quantum(n).pow(static_cast<unsigned>(d.circles())), d.with_circles(0)};
}

std::vector<int> curl_sites(const Diagram& d) {
    std::vector<int> out;
    for (int v = 0; v < d.node_count(); ++v) {
        if (d.kind(v) != NodeKind::VertexIIOO) continue;
        if (d.partner(dart_at(v, 2)) == dart_at(v, 1) || d.partner(dart_at(v, 3)) == dart_at(v, 0)) out.push_back(v);
    }
    return out;
}

std::pair<LaurentPoly, Diagram> reduce_curl(const Diagram& d, int node, int n) {
    require(d.kind(node) == NodeKind::VertexIIOO, "curl vertex is not In-In-Out-Out");
    // the curl edge disappears; the other in-dart and out-dart are spliced
    int in = 0, out = 3;
    if (d.partner(dart_at(node, 3)) == dart_at(node, 0)) {
        in = 1;
        out = 2;
    } else {
        require(d.partner(dart_at(node, 2)) == dart_at(node, 1), "no curl at vertex");
    }
    RegionBuilder b(d);
    b.remove(node);
    int pi = b.port_at(dart_at(node, in));
    int po = b.port_at(dart_at(node, out));
    b.join(RegionBuilder::port(pi), RegionBuilder::port(po));
    return {LaurentPoly::quantum(n - 1), b.build()};
}

std::vector<BigonSite> bigon_sites(const Diagram& d) {
    std::vector<BigonSite> out;
    for (const auto& f : faces(d)) {
        if (f.size() != 2) continue;
        Dart x = f[0], y = f[1];
        if (node_of(x) == node_of(y)) continue;
        if (d.kind(node_of(x)) != NodeKind::VertexIIOO || d.kind(node_of(y)) != NodeKind::VertexIIOO) continue;
        bool parallel = d.role(x) == d.role(ccw(x));
        if (parallel && d.role(x) == Role::In) std::swap(x, y);
        out.push_back({x, y, parallel});
    }
    std::sort(out.begin(), out.end(), [](const BigonSite& a, const BigonSite& b) {
        int la = std::min(node_of(a.x), node_of(a.y)), lb = std::min(node_of(b.x), node_of(b.y));
        return std::tie(la, a.x) < std::tie(lb, b.x);
    });
    return out;
}

std::pair<LaurentPoly, Diagram> reduce_bigon_parallel(const Diagram& d, const BigonSite& s) {
    int u = node_of(s.x), v = node_of(s.y);
    require(s.parallel && u != v && d.kind(u) == NodeKind::VertexIIOO && d.kind(v) == NodeKind::VertexIIOO &&
                pos_of(s.x) == 2 && pos_of(s.y) == 0 && d.partner(s.x) == ccw(s.y) && d.partner(s.y) == ccw(s.x),
            "no parallel bigon at site");
    RegionBuilder b(d);
    b.remove(u);
    b.remove(v);
    const Dart outer[4] = {dart_at(u, 0), dart_at(u, 1), dart_at(v, 2), dart_at(v, 3)};
    int w = b.node_anchored(NodeKind::VertexIIOO);
    for (int i = 0; i < 4; ++i) b.join(RegionBuilder::port(b.port_at(outer[i])), RegionBuilder::at(w, i));
    return {LaurentPoly::quantum(2), b.build()};
}

std::array<StateTerm, 2> reduce_bigon_antiparallel(const Diagram& d, const BigonSite& s, int n) {
    int u = node_of(s.x), v = node_of(s.y);
    require(!s.parallel && u != v && d.kind(u) == NodeKind::VertexIIOO && d.kind(v) == NodeKind::VertexIIOO &&
                d.partner(s.x) == ccw(s.y) && d.partner(s.y) == ccw(s.x) && d.role(s.x) != d.role(ccw(s.x)),
            "no antiparallel bigon at site");
    auto wire = [&](std::array<std::pair<int, int>, 2> pairs) {
        RegionBuilder b(d);
        b.remove(u);
        b.remove(v);
        b.port_at(opposite(s.x));
        b.port_at(ccw(opposite(s.x)));
        b.port_at(opposite(s.y));
        b.port_at(ccw(opposite(s.y)));
        for (auto [a, c] : pairs) b.join(RegionBuilder::port(a), RegionBuilder::port(c));
        return b.build();
    };
    return {StateTerm{LaurentPoly(1), wire({{{1, 2}, {3, 0}}})},
            StateTerm{LaurentPoly::quantum(n - 2), wire({{{0, 1}, {2, 3}}})}};
}

std::vector<TriangleSite> triangle_sites(const Diagram& d) {
    std::vector<TriangleSite> out;
    for (const auto& f : faces(d)) {
        if (f.size() != 3) continue;
        int a = node_of(f[0]), b = node_of(f[1]), c = node_of(f[2]);
        if (a == b || b == c || a == c) continue;
        if (d.kind(a) != NodeKind::VertexIIOO || d.kind(b) != NodeKind::VertexIIOO || d.kind(c) != NodeKind::VertexIIOO)
            continue;
        out.push_back({{f[0], f[1], f[2]}});
    }
    return out;
}

Migration apply_migration(const Diagram& d, const TriangleSite& site, int n) {
    Triangle t = triangle_of(d, site);
    Migration m{Relation::Braid, triangle_flipped(d, t), {}};
    if (t.roles[0] == t.roles[2] && t.roles[2] == t.roles[4]) {
        m.which = Relation::Cyclic;
        LaurentPoly c = LaurentPoly::quantum(n - 3);
        if (!c.is_zero()) {
            m.corrections.push_back({c, triangle_arcs(d, t, 0)});
            m.corrections.push_back({-c, triangle_arcs(d, t, 1)});
        }
        return m;
    }
    // the two places where neighbouring ports have opposite roles sit opposite each other
    for (int j = 0; j < 6; ++j) {
        if (t.roles[j] == t.roles[(j + 1) % 6]) continue;
        m.corrections.push_back({LaurentPoly(j % 2 == 0 ? 1 : -1), triangle_one_vertex(d, t, j)});
    }
    require(m.corrections.size() == 2, "unexpected role pattern around triangle");
    return m;
}

}  // namespace kg
