#include "rewrite.hpp"

#include <algorithm>

namespace kg {

int anchor_for(NodeKind kind, const std::array<Role, 4>& roles) {
    const auto& pat = role_pattern(kind);
    for (int s = 0; s < 4; ++s) {
        bool ok = true;
        for (int p = 0; p < 4 && ok; ++p) ok = roles[(p + s) & 3] == pat[p];
        if (ok) return s;
    }
    return -1;
}

NodeKind vertex_kind(const std::array<Role, 4>& roles) {
    return roles[0] == roles[2] ? NodeKind::VertexIOIO : NodeKind::VertexIIOO;
}

Diagram retype(const Diagram& d, int node, NodeKind kind, int shift) {
    std::vector<NodeKind> kinds = d.kinds();
    kinds[node] = kind;
    std::vector<Dart> pairing = d.pairing();
    auto to_new = [&](Dart x) {
        return node_of(x) == node ? dart_at(node, pos_of(x) - shift + 4) : x;
    };
    std::vector<Dart> out(pairing.size());
    for (Dart x = 0; x < d.dart_count(); ++x) out[to_new(x)] = to_new(pairing[x]);
    return Diagram(std::move(kinds), std::move(out), d.circles());
}

void RegionBuilder::remove(int node) { removed_.push_back(node); }

int RegionBuilder::port_at(Dart x) {
    ports_.push_back({x, -1, -1});
    return static_cast<int>(ports_.size()) - 1;
}

int RegionBuilder::port_outside(Dart h) {
    ports_.push_back({-1, h, -1});
    return static_cast<int>(ports_.size()) - 1;
}

std::pair<int, int> RegionBuilder::port_pair() {
    int a = static_cast<int>(ports_.size());
    ports_.push_back({-1, -1, a + 1});
    ports_.push_back({-1, -1, a});
    return {a, a + 1};
}

int RegionBuilder::node(NodeKind kind, std::array<Role, 4> roles) {
    int s = anchor_for(kind, roles);
    if (s < 0) throw DiagramError("role pattern does not fit node kind");
    nodes_.push_back({kind, s});
    return static_cast<int>(nodes_.size()) - 1;
}

int RegionBuilder::node_anchored(NodeKind kind) {
    nodes_.push_back({kind, 0});
    return static_cast<int>(nodes_.size()) - 1;
}

void RegionBuilder::join(Slot a, Slot b) { links_.emplace_back(a, b); }

Diagram RegionBuilder::build() const {
    int hn = host_.node_count();
    std::vector<char> gone(hn, 0);
    for (int v : removed_) gone[v] = 1;
    std::vector<int> keep(hn, -1);
    std::vector<NodeKind> kinds;
    for (int v = 0; v < hn; ++v)
        if (!gone[v]) {
            keep[v] = static_cast<int>(kinds.size());
            kinds.push_back(host_.kind(v));
        }
    int base = static_cast<int>(kinds.size());
    for (const auto& nn : nodes_) kinds.push_back(nn.kind);
    int total = static_cast<int>(kinds.size()) * 4;

    auto host_map = [&](Dart h) { return dart_at(keep[node_of(h)], pos_of(h)); };
    auto final_dart = [&](const Slot& s) {
        return dart_at(base + s.index, s.pos - nodes_[s.index].shift + 4);
    };

    int np = static_cast<int>(ports_.size());
    // outer: >= 0 host dart, else -(m + 1) for a straight link to port m
    std::vector<int> outer(np);
    std::vector<int> port_of_dart(host_.dart_count(), -1);
    for (int k = 0; k < np; ++k)
        if (ports_[k].dart >= 0) port_of_dart[ports_[k].dart] = k;
    for (int k = 0; k < np; ++k) {
        if (ports_[k].link >= 0) {
            outer[k] = -(ports_[k].link + 1);
            continue;
        }
        if (ports_[k].dart < 0) {
            outer[k] = ports_[k].outer;
            continue;
        }
        Dart y = host_.partner(ports_[k].dart);
        if (port_of_dart[y] >= 0) outer[k] = -(port_of_dart[y] + 1);
        else if (gone[node_of(y)]) throw DiagramError("region port leads into the removed region");
        else outer[k] = y;
    }

    std::vector<Slot> inner_port(np, Slot{false, -1, 0});
    std::vector<char> port_linked(np, 0);
    std::vector<Slot> inner_new(4 * nodes_.size(), Slot{false, -1, 0});
    std::vector<char> new_linked(4 * nodes_.size(), 0);
    auto attach = [&](const Slot& s, const Slot& t) {
        if (s.is_port) {
            if (port_linked[s.index]++) throw DiagramError("port joined twice");
            inner_port[s.index] = t;
        } else {
            int i = 4 * s.index + s.pos;
            if (new_linked[i]++) throw DiagramError("node slot joined twice");
            inner_new[i] = t;
        }
    };
    for (const auto& [a, b] : links_) {
        attach(a, b);
        attach(b, a);
    }
    if (std::count(port_linked.begin(), port_linked.end(), 0) ||
        std::count(new_linked.begin(), new_linked.end(), 0))
        throw DiagramError("region wiring is incomplete");

    std::vector<char> visited(np, 0);
    std::vector<Dart> pairing(total, -1);

    // Entering the disk at port k: the dart reached.
    auto resolve_in = [&](int k) -> Dart {
        while (true) {
            visited[k] = 1;
            const Slot& s = inner_port[k];
            if (!s.is_port) return final_dart(s);
            visited[s.index] = 1;
            int o = outer[s.index];
            if (o >= 0) return host_map(o);
            k = -o - 1;
        }
    };
    auto resolve_out = [&](int j) -> Dart {
        visited[j] = 1;
        int o = outer[j];
        if (o >= 0) return host_map(o);
        return resolve_in(-o - 1);
    };

    std::vector<char> overridden(host_.dart_count(), 0);
    for (int k = 0; k < np; ++k)
        if (outer[k] >= 0) {
            overridden[outer[k]] = 1;
            pairing[host_map(outer[k])] = resolve_in(k);
        }
    for (int v = 0; v < hn; ++v) {
        if (gone[v]) continue;
        for (int p = 0; p < 4; ++p) {
            Dart h = dart_at(v, p);
            if (overridden[h]) continue;
            Dart y = host_.partner(h);
            if (gone[node_of(y)]) throw DiagramError("host edge enters the removed region without a port");
            pairing[host_map(h)] = host_map(y);
        }
    }
    for (size_t j = 0; j < nodes_.size(); ++j)
        for (int g = 0; g < 4; ++g) {
            Slot s = at(static_cast<int>(j), g);
            const Slot& t = inner_new[4 * j + g];
            pairing[final_dart(s)] = t.is_port ? resolve_out(t.index) : final_dart(t);
        }

    int loops = 0;
    for (int k = 0; k < np; ++k) {
        if (visited[k]) continue;
        ++loops;
        int cur = k;
        while (!visited[cur]) {
            visited[cur] = 1;
            const Slot& s = inner_port[cur];
            if (!s.is_port) throw DiagramError("inconsistent region wiring");
            visited[s.index] = 1;
            int o = outer[s.index];
            if (o >= 0) throw DiagramError("inconsistent region wiring");
            cur = -o - 1;
        }
    }
    return Diagram(std::move(kinds), std::move(pairing), host_.circles() + circles_ + loops);
}

}  // namespace kg
