#include "checks.hpp"

#include <chrono>
#include <random>
#include <set>

#include <json.hpp>

#include "canonical.hpp"
#include "evaluator.hpp"
#include "rewrite.hpp"

namespace kg {

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a * 0x9E3779B97F4A7C15ULL + b + 0x632BE59BD9B4E019ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

MoveId mv(const char* s) { return *MoveId::parse(s); }

std::string dir_name(Direction d) { return d == Direction::LR ? "LR" : "RL"; }

EvalOptions options_for(const CheckConfig& c) {
    EvalOptions o;
    o.search_cap = c.search_cap;
    return o;
}

CheckItem start_item(int index, const Diagram& d) {
    CheckItem item;
    item.index = index;
    item.key = canonical_key(d).hex();
    return item;
}

void fail(CheckItem& item, const Diagram& d, const std::string& why) {
    item.pass = false;
    if (!item.detail.empty()) item.detail += "; ";
    item.detail += why;
    if (item.diagram.empty()) item.diagram = serialize_kgd(d);
}

Diagram input_diagram(const CheckConfig& c, int index) {
    if (c.kind == CheckKind::Lemmas) return close_fragment(move_template(lemmas()[static_cast<size_t>(index)].target).lhs);
    if (c.kind != CheckKind::Skein) return test_diagram(c.seed, index, c.max_nodes);
    for (int attempt = 0; attempt <= 64; ++attempt) {
        Diagram d = test_diagram(c.seed, index + attempt * 100003, c.max_nodes);
        if (d.count_kind(NodeKind::PositiveCrossing) + d.count_kind(NodeKind::NegativeCrossing) > 0) return d;
    }
    return parse_kgd("X+ 1 1 2 2\n");
}

CheckItem check_moves(const CheckConfig& c, int index) {
    Diagram d = input_diagram(c, index);
    CheckItem item = start_item(index, d);
    item.label = "diagram " + std::to_string(index);
    EvalContext ctx(c.n, options_for(c));
    LaurentPoly p = ctx.evaluate(d);
    item.value = p.to_string();
    CanonicalKey key = canonical_key(d);
    std::vector<MoveId> ids = c.moves.empty() ? all_moves() : c.moves;
    int sites = 0;
    for (MoveId id : ids) {
        for (Direction dir : {Direction::LR, Direction::RL}) {
            Direction back = dir == Direction::LR ? Direction::RL : Direction::LR;
            for (const MoveSite& s : enumerate_sites(d, id, dir)) {
                ++sites;
                std::string tag = id.name() + " " + dir_name(dir) + " site " + std::to_string(sites);
                Diagram e = apply_move(d, s);
                LaurentPoly pe = ctx.evaluate(e);
                if (pe != p) fail(item, d, tag + " gives " + pe.to_string());
                // a bare circle has no sites to undo the move
                if (e.node_count() == 0) continue;
                bool undone = false;
                for (const MoveSite& s2 : enumerate_sites(e, id, back)) {
                    if (canonical_key(apply_move(e, s2)) == key) {
                        undone = true;
                        break;
                    }
                }
                if (!undone) fail(item, d, tag + " cannot be undone");
            }
        }
    }
    if (item.pass) item.detail = std::to_string(sites) + " sites";
    return item;
}

CheckItem check_skein(const CheckConfig& c, int index) {
    Diagram d = input_diagram(c, index);
    std::vector<int> crossings;
    for (int v = 0; v < d.node_count(); ++v)
        if (is_crossing(d.kind(v))) crossings.push_back(v);
    std::mt19937_64 rng(mix(c.seed, static_cast<std::uint64_t>(index)));
    int v = crossings[rng() % crossings.size()];
    Diagram other = switch_crossing(d, v);
    const Diagram& plus = d.kind(v) == NodeKind::PositiveCrossing ? d : other;
    const Diagram& minus = d.kind(v) == NodeKind::PositiveCrossing ? other : d;
    Diagram zero = smooth_crossing(d, v);

    CheckItem item = start_item(index, d);
    item.label = "triple " + std::to_string(index) + " at node " + std::to_string(v);
    EvalContext ctx(c.n, options_for(c));
    LaurentPoly pp = ctx.evaluate(plus), pm = ctx.evaluate(minus), p0 = ctx.evaluate(zero);
    LaurentPoly lhs = LaurentPoly::monomial(1, c.n) * pm - LaurentPoly::monomial(1, -c.n) * pp;
    LaurentPoly rhs = (LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1)) * p0;
    item.value = lhs.to_string();
    item.detail = "q^n P(L-) - q^-n P(L+) vs (q - q^-1) P(L0)";
    if (lhs != rhs) fail(item, d, "right side " + rhs.to_string());
    return item;
}

CheckItem check_mirror(const CheckConfig& c, int index) {
    Diagram d = input_diagram(c, index);
    CheckItem item = start_item(index, d);
    item.label = "diagram " + std::to_string(index);
    EvalContext ctx(c.n, options_for(c));
    LaurentPoly p = ctx.evaluate(d);
    LaurentPoly m = ctx.evaluate(mirror(d));
    item.value = p.to_string();
    item.detail = "P(mirror) vs bar P";
    if (m != p.bar()) fail(item, d, "mirror gives " + m.to_string());
    return item;
}

CheckItem check_order(const CheckConfig& c, int index) {
    Diagram d = input_diagram(c, index);
    CheckItem item = start_item(index, d);
    item.label = "diagram " + std::to_string(index);
    EvalContext ref(c.n, options_for(c));
    LaurentPoly p = ref.evaluate(d);
    item.value = p.to_string();
    item.detail = std::to_string(c.orders) + " shuffled orders";
    for (int k = 0; k < c.orders; ++k) {
        EvalOptions o = options_for(c);
        o.shuffle_seed = mix(mix(c.seed, static_cast<std::uint64_t>(index)), static_cast<std::uint64_t>(k));
        EvalContext ctx(c.n, o);
        LaurentPoly pk = ctx.evaluate(d);
        if (pk != p) fail(item, d, "order " + std::to_string(k) + " gives " + pk.to_string());
    }
    return item;
}

CheckItem check_lemma(int index) {
    const Lemma& l = lemmas()[static_cast<size_t>(index)];
    Diagram start = close_fragment(move_template(l.target).lhs);
    CheckItem item = start_item(index, start);
    item.label = l.name;
    std::size_t states = 0;
    bool ok = derive_lemma(l, &states);
    item.value = ok ? "derived" : "not derived";
    item.detail = std::to_string(states) + " end states";
    if (!ok) fail(item, start, "target right side not reached");
    return item;
}

}  // namespace

std::optional<CheckKind> parse_check_kind(std::string_view t) {
    if (t == "moves") return CheckKind::Moves;
    if (t == "skein") return CheckKind::Skein;
    if (t == "lemmas") return CheckKind::Lemmas;
    if (t == "order") return CheckKind::Order;
    if (t == "mirror") return CheckKind::Mirror;
    return std::nullopt;
}

std::string check_kind_name(CheckKind k) {
    switch (k) {
        case CheckKind::Moves: return "moves";
        case CheckKind::Skein: return "skein";
        case CheckKind::Lemmas: return "lemmas";
        case CheckKind::Order: return "order";
        case CheckKind::Mirror: return "mirror";
    }
    return "?";
}

const std::vector<Lemma>& lemmas() {
    static const std::vector<Lemma> all = [] {
        std::vector<Lemma> v{
            {"", mv("O4i"), {mv("O2d"), mv("O4j"), mv("O2b")}},
            {"", mv("O4k"), {mv("O2d"), mv("O4l"), mv("O2a")}},
            {"", mv("O5h"), {mv("O1c"), mv("O4j"), mv("O5g"), mv("O4k"), mv("O1d")}},
        };
        for (auto& l : v) {
            l.name = l.target.name() + " by";
            for (MoveId m : l.sequence) l.name += " " + m.name();
        }
        return v;
    }();
    return all;
}

bool derive_lemma(const Lemma& l, std::size_t* states) {
    const MoveTemplate& t = move_template(l.target);
    CanonicalKey goal = canonical_key(close_fragment(t.rhs));
    std::vector<Diagram> frontier{close_fragment(t.lhs)};
    for (MoveId id : l.sequence) {
        std::vector<Diagram> next;
        std::set<CanonicalKey> seen;
        for (const Diagram& d : frontier)
            for (Direction dir : {Direction::LR, Direction::RL})
                for (const MoveSite& s : enumerate_sites(d, id, dir)) {
                    Diagram e = apply_move(d, s);
                    if (seen.insert(canonical_key(e)).second) next.push_back(std::move(e));
                }
        frontier = std::move(next);
    }
    if (states) *states = frontier.size();
    for (const Diagram& d : frontier)
        if (canonical_key(d) == goal) return true;
    return false;
}

Diagram test_diagram(std::uint64_t seed, int index, int max_nodes) {
    std::uint64_t s = mix(seed, static_cast<std::uint64_t>(index));
    if (index % 2 == 0) {
        RandomConfig rc;
        rc.max_nodes = max_nodes;
        rc.vertex_fraction = 0.3;
        rc.steps = 14;
        return random_diagram(rc, s);
    }
    int nodes = 1 + static_cast<int>((s >> 11) % static_cast<std::uint64_t>(max_nodes));
    return random_insertion_diagram(nodes, 0.3, s);
}

Diagram switch_crossing(const Diagram& d, int node) {
    if (d.kind(node) == NodeKind::PositiveCrossing) return retype(d, node, NodeKind::NegativeCrossing, 3);
    if (d.kind(node) == NodeKind::NegativeCrossing) return retype(d, node, NodeKind::PositiveCrossing, 1);
    throw DiagramError("node is not a crossing");
}

Diagram smooth_crossing(const Diagram& d, int node) { return resolve_crossing(d, node, 2)[0].graph; }

CheckReport run_check(const CheckConfig& c) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport r;
    r.config = c;
    int count = c.kind == CheckKind::Lemmas ? static_cast<int>(lemmas().size()) : c.count;
    for (int i = 0; i < count; ++i) {
        CheckItem item;
        try {
            switch (c.kind) {
                case CheckKind::Moves: item = check_moves(c, i); break;
                case CheckKind::Skein: item = check_skein(c, i); break;
                case CheckKind::Lemmas: item = check_lemma(i); break;
                case CheckKind::Order: item = check_order(c, i); break;
                case CheckKind::Mirror: item = check_mirror(c, i); break;
            }
        } catch (const std::exception& e) {
            item.index = i;
            item.pass = false;
            item.detail = e.what();
            try {
                item.diagram = serialize_kgd(input_diagram(c, i));
            } catch (const std::exception&) {
            }
        }
        (item.pass ? r.passed : r.failed)++;
        r.items.push_back(std::move(item));
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string report_json(const CheckReport& r, int indent) {
    using nlohmann::json;
    json cmd{{"check", check_kind_name(r.config.kind)},
             {"n", r.config.n},
             {"seed", r.config.seed},
             {"count", r.config.kind == CheckKind::Lemmas ? static_cast<int>(lemmas().size()) : r.config.count}};
    json moves = json::array();
    for (MoveId m : r.config.moves) moves.push_back(m.name());
    cmd["moves"] = moves;
    json items = json::array();
    json failures = json::array();
    for (const CheckItem& it : r.items) {
        json j{{"index", it.index}, {"label", it.label}, {"key", it.key}, {"n", r.config.n},
               {"pass", it.pass},   {"value", it.value}, {"detail", it.detail}};
        if (!it.pass) {
            j["diagram"] = it.diagram;
            failures.push_back(it.index);
        }
        items.push_back(std::move(j));
    }
    json out{{"schema", "kgd-report"},
             {"version", kReportVersion},
             {"command", cmd},
             {"items", items},
             {"counts", {{"total", r.items.size()}, {"passed", r.passed}, {"failed", r.failed}}},
             {"failures", failures},
             {"elapsed_ms", r.elapsed_ms}};
    return out.dump(indent);
}

}  // namespace kg
