#include "evaluator.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace kg {

namespace {

bool has_target(const Diagram& g) { return !curl_sites(g).empty() || !bigon_sites(g).empty(); }

}  // namespace

std::vector<MigrationStep> find_bigon_path(const Diagram& g, int n, std::size_t cap,
                                           std::optional<std::uint64_t> shuffle_seed) {
    if (has_target(g)) return {};
    struct Visit {
        Diagram graph;
        int parent;
        TriangleSite site;
    };
    std::optional<std::mt19937_64> rng;
    if (shuffle_seed) rng.emplace(*shuffle_seed);
    std::vector<Visit> visits{{g, -1, {}}};
    std::unordered_set<CanonicalKey> seen{canonical_key(g)};
    for (std::size_t i = 0; i < visits.size(); ++i) {
        auto sites = triangle_sites(visits[i].graph);
        if (rng) std::shuffle(sites.begin(), sites.end(), *rng);
        for (const auto& s : sites) {
            Migration m = apply_migration(visits[i].graph, s, n);
            if (!seen.insert(canonical_key(m.migrated)).second) continue;
            if (visits.size() >= cap) throw SearchCapExceeded("migration search exceeded its cap of " + std::to_string(cap) + " states");
            bool done = has_target(m.migrated);
            visits.push_back({std::move(m.migrated), static_cast<int>(i), s});
            if (done) {
                std::vector<MigrationStep> path;
                for (int j = static_cast<int>(visits.size()) - 1; visits[j].parent >= 0; j = visits[j].parent) {
                    const Diagram& before = visits[visits[j].parent].graph;
                    Migration mm = apply_migration(before, visits[j].site, n);
                    path.push_back({mm.which, visits[j].site, before, visits[j].graph, std::move(mm.corrections)});
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
        }
    }
    throw DiagramError("migration search found no curl or bigon");
}

struct EvalContext::Impl {
    int n;
    EvalOptions opt;
    std::mutex mu;
    std::unordered_map<CanonicalKey, LaurentPoly> memo;
    std::mt19937_64 rng;

    std::size_t pick(std::size_t count) { return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng); }

    LaurentPoly eval(const Diagram& d) {
        if (d.circles() > 0) {
            auto [f, rest] = reduce_circle(d, n);
            return f * eval(rest);
        }
        if (d.node_count() == 0) return LaurentPoly(1);
        CanonicalForm cf = canonical_form(d);
        if (opt.memo) {
            std::lock_guard<std::mutex> lock(mu);
            auto it = memo.find(cf.key);
            if (it != memo.end()) return it->second;
        }
        LaurentPoly r = opt.shuffle_seed ? reduce_shuffled(cf.diagram) : reduce(cf.diagram);
        if (opt.memo) {
            std::lock_guard<std::mutex> lock(mu);
            memo.emplace(std::move(cf.key), r);
        }
        return r;
    }

    LaurentPoly sum(const std::vector<StateTerm>& terms) {
        LaurentPoly r;
        for (const auto& t : terms) r += t.coeff * eval(t.graph);
        return r;
    }

    LaurentPoly product_of_components(const Diagram& g) {
        LaurentPoly r(1);
        for (const auto& c : split_components(g)) r *= eval(c);
        return r;
    }

    LaurentPoly crossing(const Diagram& g, int v) {
        auto t = resolve_crossing(g, v, n);
        return sum({t[0], t[1]});
    }

    LaurentPoly ioio(const Diagram& g, int v) {
        auto t = smooth_ioio(g, v);
        return eval(t[0]) + eval(t[1]);
    }

    LaurentPoly curl(const Diagram& g, int v) {
        auto [f, rest] = reduce_curl(g, v, n);
        return f * eval(rest);
    }

    LaurentPoly bigon(const Diagram& g, const BigonSite& s) {
        if (s.parallel) {
            auto [f, rest] = reduce_bigon_parallel(g, s);
            return f * eval(rest);
        }
        auto t = reduce_bigon_antiparallel(g, s, n);
        return sum({t[0], t[1]});
    }

    LaurentPoly migrate(const Diagram& g) {
        std::optional<std::uint64_t> seed;
        if (opt.shuffle_seed) seed = rng();
        auto path = find_bigon_path(g, n, opt.search_cap, seed);
        LaurentPoly r = eval(path.empty() ? g : path.back().after);
        for (const auto& step : path) r += sum(step.corrections);
        return r;
    }

    LaurentPoly reduce(const Diagram& g) {
        int comps = 0;
        node_components(g, &comps);
        if (comps > 1) return product_of_components(g);
        for (int v = 0; v < g.node_count(); ++v)
            if (is_crossing(g.kind(v))) return crossing(g, v);
        for (int v = 0; v < g.node_count(); ++v)
            if (g.kind(v) == NodeKind::VertexIOIO) return ioio(g, v);
        if (auto c = curl_sites(g); !c.empty()) return curl(g, c.front());
        auto bs = bigon_sites(g);
        for (const auto& s : bs)
            if (s.parallel) return bigon(g, s);
        if (!bs.empty()) return bigon(g, bs.front());
        return migrate(g);
    }

    LaurentPoly reduce_shuffled(const Diagram& g) {
        int comps = 0;
        node_components(g, &comps);
        if (comps > 1 && pick(2) == 0) return product_of_components(g);
        std::vector<int> nodes;
        for (int v = 0; v < g.node_count(); ++v)
            if (g.kind(v) != NodeKind::VertexIIOO) nodes.push_back(v);
        auto curls = curl_sites(g);
        auto bs = bigon_sites(g);
        std::size_t total = nodes.size() + curls.size() + bs.size();
        if (total == 0) return comps > 1 ? product_of_components(g) : migrate(g);
        std::size_t i = pick(total);
        if (i < nodes.size()) {
            int v = nodes[i];
            return is_crossing(g.kind(v)) ? crossing(g, v) : ioio(g, v);
        }
        i -= nodes.size();
        if (i < curls.size()) return curl(g, curls[i]);
        return bigon(g, bs[i - curls.size()]);
    }
};

EvalContext::EvalContext(int n, EvalOptions options) : n_(n), options_(options), impl_(std::make_unique<Impl>()) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    impl_->n = n;
    impl_->opt = options;
    impl_->rng.seed(options.shuffle_seed.value_or(0));
}

EvalContext::~EvalContext() = default;

LaurentPoly EvalContext::evaluate(const Diagram& d) { return impl_->eval(d); }

std::size_t EvalContext::memo_size() const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    return impl_->memo.size();
}

LaurentPoly evaluate(const Diagram& d, EvalContext& ctx) { return ctx.evaluate(d); }

LaurentPoly evaluate(const Diagram& d, int n) {
    EvalContext ctx(n);
    return ctx.evaluate(d);
}

}  // namespace kg
