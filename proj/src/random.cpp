#include <random>

#include "moves.hpp"

namespace kg {

namespace {

const char* kIoioBase = "Vx 1 1 2 2\n";
const char* kBigonBase = "V= 1 2 3 4\nV= 4 3 2 1\n";

Diagram kink(std::mt19937_64& rng) {
    static const char letters[] = "abcd";
    MoveId id{1, letters[std::uniform_int_distribution<int>(0, 3)(rng)]};
    return close_fragment(move_template(id).lhs);
}

}  // namespace

Diagram random_diagram(const RandomConfig& cfg, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Diagram d = Diagram::circles_only(1);
    if (cfg.max_nodes <= 0) return d;
    if (unit(rng) < cfg.vertex_fraction) {
        bool bigon = cfg.max_nodes >= 2 && unit(rng) < 0.5;
        d = parse_kgd(bigon ? kBigonBase : kIoioBase);
    }
    static const std::vector<MoveId> grow = [] {
        std::vector<MoveId> g;
        for (const auto& m : all_moves())
            if (m.family == 1 || m.family == 2 || m.family == 5) g.push_back(m);
        return g;
    }();
    const std::vector<MoveId> every = all_moves();
    for (int step = 0; step < cfg.steps; ++step) {
        if (d.node_count() == 0) {
            // moves need an edge; a free circle gets a kink first
            d = disjoint_union(kink(rng), Diagram::circles_only(d.circles() - 1));
            continue;
        }
        MoveId id;
        Direction dir;
        if (unit(rng) < cfg.grow) {
            id = grow[std::uniform_int_distribution<size_t>(0, grow.size() - 1)(rng)];
            dir = id.family == 5 && unit(rng) < 0.5 ? Direction::LR : Direction::RL;
        } else {
            id = every[std::uniform_int_distribution<size_t>(0, every.size() - 1)(rng)];
            dir = unit(rng) < 0.5 ? Direction::LR : Direction::RL;
        }
        auto sites = enumerate_sites(d, id, dir);
        if (sites.empty()) continue;
        const auto& site = sites[std::uniform_int_distribution<size_t>(0, sites.size() - 1)(rng)];
        Diagram next = apply_move(d, site);
        if (next.node_count() <= cfg.max_nodes) d = std::move(next);
    }
    return d;
}

Diagram random_insertion_diagram(int nodes, double vertex_fraction, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (nodes <= 0) return Diagram::circles_only(1);
    static const char* bases[] = {"X+ 1 1 2 2\n", "X- 1 2 2 1\n", "V= 1 2 2 1\n", "Vx 1 1 2 2\n"};
    int b = unit(rng) < vertex_fraction ? 2 + std::uniform_int_distribution<int>(0, 1)(rng)
                                        : std::uniform_int_distribution<int>(0, 1)(rng);
    Diagram d = parse_kgd(bases[b]);
    int attempts = 0;
    while (d.node_count() < nodes) {
        ++attempts;
        auto fs = faces(d);
        const auto& f = fs[std::uniform_int_distribution<size_t>(0, fs.size() - 1)(rng)];
        std::vector<std::pair<Dart, Dart>> cands;
        for (Dart a : f)
            for (Dart c : f)
                if (c != a && c != d.partner(a)) cands.emplace_back(a, c);
        if (cands.empty()) continue;
        auto [d1, d2] = cands[std::uniform_int_distribution<size_t>(0, cands.size() - 1)(rng)];
        // new node slots 0..3 attach to these host darts
        std::array<Dart, 4> ends{d.partner(d1), d2, d.partner(d2), d1};
        std::array<Role, 4> roles{};
        for (int i = 0; i < 4; ++i) roles[i] = flip(d.role(ends[i]));
        NodeKind kind;
        if (roles[0] == roles[2]) {
            if (unit(rng) >= vertex_fraction && attempts < 50) continue;
            kind = NodeKind::VertexIOIO;
        } else if (unit(rng) < vertex_fraction) {
            kind = NodeKind::VertexIIOO;
        } else {
            kind = unit(rng) < 0.5 ? NodeKind::PositiveCrossing : NodeKind::NegativeCrossing;
        }
        int s = 0;
        while (true) {
            bool ok = true;
            for (int p = 0; p < 4 && ok; ++p) ok = roles[(s + p) & 3] == role_at(kind, p);
            if (ok) break;
            ++s;
        }
        if (kind == NodeKind::VertexIOIO && unit(rng) < 0.5) s = (s + 2) & 3;
        int v = d.node_count();
        std::vector<NodeKind> kinds = d.kinds();
        kinds.push_back(kind);
        std::vector<Dart> pairing = d.pairing();
        pairing.resize(4 * (v + 1));
        for (int p = 0; p < 4; ++p) {
            Dart x = ends[(s + p) & 3];
            pairing[dart_at(v, p)] = x;
            pairing[x] = dart_at(v, p);
        }
        d = Diagram(std::move(kinds), std::move(pairing), 0);
        attempts = 0;
    }
    return d;
}

}  // namespace kg
