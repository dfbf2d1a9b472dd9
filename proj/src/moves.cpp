#include "moves.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "rewrite.hpp"

namespace kg {

extern const char* const kMoveData;

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

NodeKind kind_from(const std::string& t, const std::string& where) {
    if (t == "X+") return NodeKind::PositiveCrossing;
    if (t == "X-") return NodeKind::NegativeCrossing;
    if (t == "V=") return NodeKind::VertexIIOO;
    if (t == "Vx") return NodeKind::VertexIOIO;
    throw DiagramError(where + ": unknown node kind " + t);
}

struct RawSide {
    std::vector<std::pair<NodeKind, std::array<int, 4>>> nodes;
    std::vector<std::pair<bool, int>> boundary;
};

Fragment build_fragment(const RawSide& raw, const std::string& where) {
    Fragment f;
    int n = static_cast<int>(raw.nodes.size());
    f.links.assign(4 * n, 0);
    std::map<int, std::vector<Dart>> node_uses;
    std::map<int, std::vector<int>> port_uses;
    for (int v = 0; v < n; ++v) {
        f.kinds.push_back(raw.nodes[v].first);
        for (int p = 0; p < 4; ++p) node_uses[raw.nodes[v].second[p]].push_back(dart_at(v, p));
    }
    f.ports.resize(raw.boundary.size());
    for (size_t k = 0; k < raw.boundary.size(); ++k) {
        f.ports[k].enters = raw.boundary[k].first;
        port_uses[raw.boundary[k].second].push_back(static_cast<int>(k));
    }
    auto role_of = [&](Dart x) { return role_at(f.kinds[node_of(x)], pos_of(x)); };
    for (auto& [lab, ds] : node_uses) {
        auto& ps = port_uses[lab];
        std::string l = where + ": label " + std::to_string(lab);
        if (ds.size() == 2 && ps.empty()) {
            if (role_of(ds[0]) == role_of(ds[1])) throw DiagramError(l + " joins equal roles");
            f.links[ds[0]] = ds[1];
            f.links[ds[1]] = ds[0];
        } else if (ds.size() == 1 && ps.size() == 1) {
            int k = ps[0];
            if (f.ports[k].enters != (role_of(ds[0]) == Role::In)) throw DiagramError(l + " port role mismatch");
            f.ports[k].dart = ds[0];
            f.links[ds[0]] = -(k + 1);
        } else {
            throw DiagramError(l + " has an invalid use count");
        }
    }
    for (auto& [lab, ps] : port_uses) {
        if (node_uses.count(lab)) continue;
        if (ps.size() != 2 || f.ports[ps[0]].enters == f.ports[ps[1]].enters)
            throw DiagramError(where + ": bad arc label " + std::to_string(lab));
        f.ports[ps[0]].arc_to = ps[1];
        f.ports[ps[1]].arc_to = ps[0];
    }
    return f;
}

void check_fragment(const Fragment& f, const std::string& where) {
    int k = static_cast<int>(f.ports.size());
    if (f.node_free()) {
        bool two = k == 2 && f.ports[0].arc_to == 1;
        bool four = k == 4 && f.ports[0].arc_to == 3 && f.ports[1].arc_to == 2;
        if (!two && !four) throw DiagramError(where + ": unsupported arc pattern");
        return;
    }
    for (const auto& p : f.ports)
        if (p.dart < 0) throw DiagramError(where + ": mixed arc and node boundary");
    // connected through internal edges
    int n = static_cast<int>(f.kinds.size());
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int p = 0; p < 4; ++p) {
            int y = f.links[dart_at(v, p)];
            if (y >= 0 && !seen[node_of(y)]) {
                seen[node_of(y)] = 1;
                stack.push_back(node_of(y));
            }
        }
    }
    if (std::count(seen.begin(), seen.end(), 0)) throw DiagramError(where + ": fragment is not connected");
    // boundary order is the counterclockwise walk around the fragment
    for (int i = 0; i < k; ++i) {
        Dart y = ccw(f.ports[i].dart);
        for (int guard = 0; f.links[y] >= 0; ++guard) {
            if (guard > 4 * n) throw DiagramError(where + ": boundary walk does not close");
            y = ccw(f.links[y]);
        }
        if (-f.links[y] - 1 != (i + 1) % k) throw DiagramError(where + ": boundary order disagrees with rotation");
    }
}

bool rot_ok(NodeKind k, int r) { return r == 0 || (k == NodeKind::VertexIOIO && r == 2); }

void match_nodes(const Diagram& d, const Fragment& f, MoveId id, Direction dir, std::vector<MoveSite>& out) {
    int n = static_cast<int>(f.kinds.size());
    // spanning tree over internal edges, in discovery order
    std::vector<std::pair<Dart, Dart>> tree;
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    std::vector<int> order{0};
    for (size_t i = 0; i < order.size(); ++i)
        for (int p = 0; p < 4; ++p) {
            Dart x = dart_at(order[i], p);
            int y = f.links[x];
            if (y >= 0 && !seen[node_of(y)]) {
                seen[node_of(y)] = 1;
                order.push_back(node_of(y));
                tree.emplace_back(x, y);
            }
        }
    std::vector<int> nodes(n), rot(n);
    std::vector<char> used(d.node_count(), 0);
    auto host = [&](Dart x) { return dart_at(nodes[node_of(x)], pos_of(x) + rot[node_of(x)]); };
    for (int h0 = 0; h0 < d.node_count(); ++h0) {
        if (d.kind(h0) != f.kinds[0]) continue;
        for (int r0 = 0; r0 < 4; ++r0) {
            if (!rot_ok(f.kinds[0], r0)) continue;
            std::fill(used.begin(), used.end(), 0);
            nodes[0] = h0;
            rot[0] = r0;
            used[h0] = 1;
            bool ok = true;
            for (auto [x, y] : tree) {
                Dart hy = d.partner(host(x));
                int c = node_of(y), hn = node_of(hy);
                int r = (pos_of(hy) - pos_of(y) + 4) & 3;
                if (used[hn] || d.kind(hn) != f.kinds[c] || !rot_ok(f.kinds[c], r)) {
                    ok = false;
                    break;
                }
                used[hn] = 1;
                nodes[c] = hn;
                rot[c] = r;
            }
            for (Dart x = 0; ok && x < 4 * n; ++x)
                if (f.links[x] >= 0 && d.partner(host(x)) != host(f.links[x])) ok = false;
            if (ok) out.push_back({id, dir, nodes, rot, {}});
        }
    }
}

void match_arcs(const Diagram& d, const Fragment& f, MoveId id, Direction dir, std::vector<MoveSite>& out) {
    auto fits = [&](const std::vector<Dart>& cut) {
        for (size_t k = 0; k < cut.size(); ++k)
            if (cut[k] >= 0 && f.ports[k].enters != (d.role(cut[k]) == Role::Out)) return false;
        return true;
    };
    if (f.ports.size() == 2) {
        for (Dart o = 0; o < d.dart_count(); ++o) {
            if (d.role(o) != Role::Out) continue;
            Dart i = d.partner(o);
            std::vector<Dart> cut = f.ports[0].enters ? std::vector<Dart>{o, i} : std::vector<Dart>{i, o};
            out.push_back({id, dir, {}, {}, cut});
        }
        return;
    }
    for (const auto& face : faces(d))
        for (Dart d1 : face)
            for (Dart d2 : face) {
                if (d2 == d1 || d2 == d.partner(d1)) continue;
                std::vector<Dart> cut{d.partner(d1), d2, d.partner(d2), d1};
                if (fits(cut)) out.push_back({id, dir, {}, {}, cut});
            }
    // both arcs on one edge, joined by a short loop outside (-1 marks a looped port)
    for (Dart d1 = 0; d1 < d.dart_count(); ++d1) {
        for (auto cut : {std::vector<Dart>{d.partner(d1), d1, -1, -1}, std::vector<Dart>{-1, -1, d.partner(d1), d1}})
            if (fits(cut)) out.push_back({id, dir, {}, {}, cut});
    }
}

}  // namespace

std::string MoveId::name() const { return "O" + std::to_string(family) + variant; }

std::optional<MoveId> MoveId::parse(std::string_view t) {
    if (t.rfind("\xce\xa9", 0) == 0) t.remove_prefix(2);
    else if (!t.empty() && (t[0] == 'O' || t[0] == 'o')) t.remove_prefix(1);
    if (t.size() != 2 || t[0] < '1' || t[0] > '5') return std::nullopt;
    MoveId id{t[0] - '0', t[1]};
    for (const auto& m : all_moves())
        if (m == id) return id;
    return std::nullopt;
}

std::vector<MoveTemplate> parse_move_data(std::string_view text) {
    std::vector<MoveTemplate> out;
    std::istringstream is{std::string(text)};
    std::string line;
    std::optional<MoveId> cur;
    RawSide sides[2];
    int side = -1;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        std::string where = "move data line " + std::to_string(lineno);
        if (toks[0] == "MOVE") {
            if (toks.size() != 2) throw DiagramError(where + ": MOVE needs an id");
            cur = MoveId::parse(toks[1]);
            if (!cur) throw DiagramError(where + ": unknown move id " + toks[1]);
            sides[0] = sides[1] = RawSide{};
            side = -1;
        } else if (toks[0] == "LHS" || toks[0] == "RHS") {
            side = toks[0] == "LHS" ? 0 : 1;
        } else if (toks[0] == "BOUNDARY") {
            if (side < 0) throw DiagramError(where + ": BOUNDARY outside a side");
            for (size_t i = 1; i < toks.size(); ++i) {
                const auto& t = toks[i];
                if (t.size() < 2 || (t[0] != '+' && t[0] != '-')) throw DiagramError(where + ": bad port " + t);
                sides[side].boundary.emplace_back(t[0] == '+', std::stoi(t.substr(1)));
            }
        } else if (toks[0] == "END") {
            if (!cur) throw DiagramError(where + ": END without MOVE");
            std::string name = cur->name();
            MoveTemplate m{*cur, build_fragment(sides[0], name + " LHS"), build_fragment(sides[1], name + " RHS")};
            check_fragment(m.lhs, name + " LHS");
            check_fragment(m.rhs, name + " RHS");
            if (m.lhs.ports.size() != m.rhs.ports.size()) throw DiagramError(name + ": port count differs");
            for (size_t k = 0; k < m.lhs.ports.size(); ++k)
                if (m.lhs.ports[k].enters != m.rhs.ports[k].enters) throw DiagramError(name + ": port roles differ");
            out.push_back(std::move(m));
            cur.reset();
        } else {
            if (side < 0 || toks.size() != 5) throw DiagramError(where + ": malformed node line");
            std::array<int, 4> labs{};
            for (int p = 0; p < 4; ++p) labs[p] = std::stoi(toks[p + 1]);
            sides[side].nodes.emplace_back(kind_from(toks[0], where), labs);
        }
    }
    return out;
}

const std::vector<MoveTemplate>& move_templates() {
    static const std::vector<MoveTemplate> all = [] {
        auto t = parse_move_data(kMoveData);
        if (t.size() != all_moves().size()) throw DiagramError("move data does not define all moves");
        return t;
    }();
    return all;
}

const MoveTemplate& move_template(MoveId id) {
    for (const auto& t : move_templates())
        if (t.id == id) return t;
    throw DiagramError("unknown move " + id.name());
}

std::vector<MoveId> all_moves() {
    std::vector<MoveId> out;
    const std::pair<int, const char*> families[] = {{1, "abcd"}, {2, "abcd"}, {3, "abcdefgh"}, {4, "abcdefghijkl"}, {5, "abcdefgh"}};
    for (auto [f, letters] : families)
        for (const char* c = letters; *c; ++c) out.push_back({f, *c});
    return out;
}

std::vector<MoveId> generating_set() {
    return {{1, 'a'}, {1, 'b'}, {2, 'a'}, {3, 'a'}, {4, 'a'}, {4, 'e'}, {5, 'a'}, {4, 'j'}, {4, 'l'}, {5, 'g'}};
}

std::vector<MoveSite> enumerate_sites(const Diagram& d, MoveId id, Direction dir) {
    const MoveTemplate& t = move_template(id);
    const Fragment& f = dir == Direction::LR ? t.lhs : t.rhs;
    std::vector<MoveSite> out;
    if (f.node_free()) match_arcs(d, f, id, dir, out);
    else match_nodes(d, f, id, dir, out);
    std::sort(out.begin(), out.end(), [](const MoveSite& a, const MoveSite& b) {
        return std::tie(a.nodes, a.rot, a.cut) < std::tie(b.nodes, b.rot, b.cut);
    });
    return out;
}

Diagram apply_move(const Diagram& d, const MoveSite& site) {
    const MoveTemplate& t = move_template(site.id);
    const Fragment& src = site.dir == Direction::LR ? t.lhs : t.rhs;
    const Fragment& dst = site.dir == Direction::LR ? t.rhs : t.lhs;
    RegionBuilder b(d);
    int k = static_cast<int>(src.ports.size());
    if (src.node_free()) {
        if (static_cast<int>(site.cut.size()) != k) throw DiagramError("site does not fit move " + t.id.name());
        for (int i = 0; i < k; ++i) {
            if (site.cut[i] >= 0) {
                b.port_outside(site.cut[i]);
            } else {
                if (i + 1 == k || site.cut[i + 1] >= 0) throw DiagramError("site does not fit move " + t.id.name());
                b.port_pair();
                ++i;
            }
        }
    } else {
        if (site.nodes.size() != src.kinds.size()) throw DiagramError("site does not fit move " + t.id.name());
        for (int v : site.nodes) b.remove(v);
        for (int i = 0; i < k; ++i) {
            Dart x = src.ports[i].dart;
            b.port_at(dart_at(site.nodes[node_of(x)], pos_of(x) + site.rot[node_of(x)]));
        }
    }
    for (NodeKind kind : dst.kinds) b.node_anchored(kind);
    for (Dart x = 0; x < static_cast<int>(dst.links.size()); ++x) {
        int y = dst.links[x];
        if (y >= 0 && x < y) b.join(RegionBuilder::at(node_of(x), pos_of(x)), RegionBuilder::at(node_of(y), pos_of(y)));
    }
    for (int i = 0; i < k; ++i) {
        const auto& p = dst.ports[i];
        if (p.dart >= 0) b.join(RegionBuilder::port(i), RegionBuilder::at(node_of(p.dart), pos_of(p.dart)));
        else if (i < p.arc_to) b.join(RegionBuilder::port(i), RegionBuilder::port(p.arc_to));
    }
    try {
        return b.build();
    } catch (const DiagramError& e) {
        throw DiagramError("move " + t.id.name() + " produced an invalid diagram: " + e.what());
    }
}

Diagram close_fragment(const Fragment& f, std::vector<std::pair<int, int>>* wiring) {
    int k = static_cast<int>(f.ports.size());
    std::vector<std::pair<int, int>> pairs;
    for (int s = 0; s < k && pairs.size() * 2 != static_cast<size_t>(k); ++s) {
        pairs.clear();
        std::vector<int> stack;
        for (int j = 0; j < k; ++j) {
            int i = (s + j) % k;
            if (!stack.empty() && f.ports[stack.back()].enters != f.ports[i].enters) {
                pairs.emplace_back(stack.back(), i);
                stack.pop_back();
            } else {
                stack.push_back(i);
            }
        }
        if (!stack.empty()) pairs.clear();
    }
    if (pairs.size() * 2 != static_cast<size_t>(k)) throw DiagramError("fragment boundary cannot be closed");
    Diagram empty;
    RegionBuilder b(empty);
    std::vector<int> port_id(k);
    for (auto [a, c] : pairs) {
        auto [pa, pc] = b.port_pair();
        port_id[a] = pa;
        port_id[c] = pc;
    }
    for (NodeKind kind : f.kinds) b.node_anchored(kind);
    for (Dart x = 0; x < static_cast<int>(f.links.size()); ++x) {
        int y = f.links[x];
        if (y >= 0 && x < y) b.join(RegionBuilder::at(node_of(x), pos_of(x)), RegionBuilder::at(node_of(y), pos_of(y)));
    }
    for (int i = 0; i < k; ++i) {
        const auto& p = f.ports[i];
        if (p.dart >= 0) b.join(RegionBuilder::port(port_id[i]), RegionBuilder::at(node_of(p.dart), pos_of(p.dart)));
        else if (i < p.arc_to) b.join(RegionBuilder::port(port_id[i]), RegionBuilder::port(port_id[p.arc_to]));
    }
    if (wiring) *wiring = pairs;
    return b.build();
}

}  // namespace kg
