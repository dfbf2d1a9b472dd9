#include "kgraph.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include <json.hpp>

#include "checks.hpp"
#include "diagram.hpp"
#include "evaluator.hpp"

struct kg_diagram {
    kg::Diagram d;
};

struct kg_poly {
    kg::LaurentPoly p;
};

namespace {

thread_local std::string g_error;

kg_status set_error(kg_status s, const std::string& msg) {
    g_error = msg;
    return s;
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
kg_status guarded(F&& f) {
    g_error.clear();
    try {
        return f();
    } catch (const kg::ParseError& e) {
        return set_error(KG_ERR_PARSE, e.what());
    } catch (const kg::SearchCapExceeded& e) {
        return set_error(KG_ERR_SEARCH_CAP, e.what());
    } catch (const kg::DiagramError& e) {
        return set_error(KG_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return set_error(KG_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(KG_ERR_INTERNAL, "unknown error");
    }
}

kg_status need(const void* p, const char* what) {
    if (p) return KG_OK;
    return set_error(KG_ERR_INVALID, std::string("null ") + what);
}

}  // namespace

extern "C" {

const char* kg_last_error(void) { return g_error.c_str(); }

const char* kg_version(void) { return "1.0.0"; }

void kg_string_free(char* s) { std::free(s); }

kg_status kg_diagram_parse(const char* text, kg_diagram** out) {
    return guarded([&] {
        if (kg_status s = need(text, "text"); s != KG_OK) return s;
        if (kg_status s = need(out, "output"); s != KG_OK) return s;
        *out = new kg_diagram{kg::parse_kgd(text)};
        return KG_OK;
    });
}

void kg_diagram_free(kg_diagram* d) { delete d; }

kg_status kg_diagram_serialize(const kg_diagram* d, char** out) {
    return guarded([&] {
        if (kg_status s = need(d, "diagram"); s != KG_OK) return s;
        if (kg_status s = need(out, "output"); s != KG_OK) return s;
        *out = dup(kg::serialize_kgd(d->d));
        return KG_OK;
    });
}

kg_status kg_diagram_mirror(const kg_diagram* d, kg_diagram** out) {
    return guarded([&] {
        if (kg_status s = need(d, "diagram"); s != KG_OK) return s;
        if (kg_status s = need(out, "output"); s != KG_OK) return s;
        *out = new kg_diagram{kg::mirror(d->d)};
        return KG_OK;
    });
}

kg_status kg_diagram_key(const kg_diagram* d, char** out) {
    return guarded([&] {
        if (kg_status s = need(d, "diagram"); s != KG_OK) return s;
        if (kg_status s = need(out, "output"); s != KG_OK) return s;
        *out = dup(kg::canonical_key(d->d).hex());
        return KG_OK;
    });
}

int kg_diagram_node_count(const kg_diagram* d) { return d ? d->d.node_count() : -1; }

int kg_diagram_circle_count(const kg_diagram* d) { return d ? d->d.circles() : -1; }

kg_status kg_evaluate(const kg_diagram* d, int n, size_t search_cap, kg_poly** out) {
    return guarded([&] {
        if (kg_status s = need(d, "diagram"); s != KG_OK) return s;
        if (kg_status s = need(out, "output"); s != KG_OK) return s;
        if (n < 2) return set_error(KG_ERR_INVALID, "n must be at least 2");
        kg::EvalOptions o;
        if (search_cap) o.search_cap = search_cap;
        kg::EvalContext ctx(n, o);
        *out = new kg_poly{ctx.evaluate(d->d)};
        return KG_OK;
    });
}

void kg_poly_free(kg_poly* p) { delete p; }

kg_status kg_poly_text(const kg_poly* p, char** out) {
    return guarded([&] {
        if (kg_status s = need(p, "polynomial"); s != KG_OK) return s;
        if (kg_status s = need(out, "output"); s != KG_OK) return s;
        *out = dup(p->p.to_string());
        return KG_OK;
    });
}

kg_status kg_poly_json(const kg_poly* p, char** out) {
    return guarded([&] {
        if (kg_status s = need(p, "polynomial"); s != KG_OK) return s;
        if (kg_status s = need(out, "output"); s != KG_OK) return s;
        nlohmann::json terms = nlohmann::json::array();
        for (auto [e, c] : p->p.pairs()) terms.push_back({e, c});
        *out = dup(terms.dump());
        return KG_OK;
    });
}

int kg_poly_equal(const kg_poly* a, const kg_poly* b) { return a && b && a->p == b->p; }

kg_status kg_poly_bar(const kg_poly* p, kg_poly** out) {
    return guarded([&] {
        if (kg_status s = need(p, "polynomial"); s != KG_OK) return s;
        if (kg_status s = need(out, "output"); s != KG_OK) return s;
        *out = new kg_poly{p->p.bar()};
        return KG_OK;
    });
}

kg_status kg_check_run(const char* kind, int n, uint64_t seed, int count, const char* moves, size_t search_cap,
                       char** report, int* passed) {
    return guarded([&] {
        if (kg_status s = need(kind, "kind"); s != KG_OK) return s;
        if (kg_status s = need(report, "output"); s != KG_OK) return s;
        auto k = kg::parse_check_kind(kind);
        if (!k) return set_error(KG_ERR_INVALID, std::string("unknown check '") + kind + "'");
        if (n < 2) return set_error(KG_ERR_INVALID, "n must be at least 2");
        if (count < 0) return set_error(KG_ERR_INVALID, "count must be non-negative");
        kg::CheckConfig c;
        c.kind = *k;
        c.n = n;
        c.seed = seed;
        c.count = count;
        if (search_cap) c.search_cap = search_cap;
        if (moves && *moves) {
            std::stringstream ss(moves);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok.empty()) continue;
                auto id = kg::MoveId::parse(tok);
                if (!id) return set_error(KG_ERR_INVALID, "unknown move '" + tok + "'");
                c.moves.push_back(*id);
            }
        }
        kg::CheckReport r = kg::run_check(c);
        *report = dup(kg::report_json(r));
        if (passed) *passed = r.ok() ? 1 : 0;
        return KG_OK;
    });
}

}  // extern "C"
