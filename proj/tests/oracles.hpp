#pragma once
// Reference values computed without the evaluator: skein recursion for classical links, and a
// coloring state sum for planar graphs with crossings expanded on the text form.

#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "qpoly.hpp"

namespace oracle {

using kg::LaurentPoly;

inline LaurentPoly q(int e) { return LaurentPoly::monomial(1, e); }
inline LaurentPoly qint(int k) { return LaurentPoly::quantum(k); }

// P(L+) = q^n (q^n P(L-) - (q - q^-1) P(L0))
inline LaurentPoly skein_up(int n, const LaurentPoly& minus, const LaurentPoly& zero) {
    return q(n) * (q(n) * minus - (q(1) - q(-1)) * zero);
}
inline LaurentPoly hopf(int n) { return skein_up(n, qint(n) * qint(n), qint(n)); }
inline LaurentPoly trefoil(int n) { return skein_up(n, qint(n), hopf(n)); }

inline LaurentPoly example(int n) {
    return (q(1 - n) - q(-n) * qint(2) + q(0)) * qint(n - 1) * qint(n);
}

struct TextNode {
    std::string kind;
    std::array<int, 4> lab;
};

struct TextDiagram {
    std::vector<TextNode> nodes;
    int circles = 0;
};

inline TextDiagram to_text(const kg::Diagram& d) {
    TextDiagram t;
    std::istringstream is(kg::serialize_kgd(d));
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "O") {
            ++t.circles;
            continue;
        }
        TextNode n{kind, {}};
        for (int& x : n.lab) ls >> x;
        t.nodes.push_back(n);
    }
    return t;
}

inline kg::Diagram from_text(const TextDiagram& t) {
    std::string s;
    for (const auto& n : t.nodes) {
        s += n.kind;
        for (int x : n.lab) s += " " + std::to_string(x);
        s += "\n";
    }
    for (int i = 0; i < t.circles; ++i) s += "O\n";
    return kg::parse_kgd(s);
}

// Removes node v, joining slot pairs (in, out); labels that vanish become circles.
inline TextDiagram splice(const TextDiagram& t, int v, std::array<std::array<int, 2>, 2> joins) {
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
        if (!parent.count(x)) parent[x] = x;
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (auto [a, b] : joins) parent[find(t.nodes[v].lab[a])] = find(t.nodes[v].lab[b]);
    TextDiagram out;
    out.circles = t.circles;
    std::map<int, int> uses;
    for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i) {
        if (i == v) continue;
        TextNode n = t.nodes[i];
        for (int& x : n.lab) ++uses[x = find(x)];
        out.nodes.push_back(n);
    }
    std::map<int, bool> seen;
    for (auto [a, b] : joins) {
        int r = find(t.nodes[v].lab[a]);
        if (!uses.count(r) && !seen[r]) {
            seen[r] = true;
            ++out.circles;
        }
    }
    return out;
}

inline TextDiagram revertex(const TextDiagram& t, int v, int shift) {
    TextDiagram out = t;
    for (int p = 0; p < 4; ++p) out.nodes[v].lab[p] = t.nodes[v].lab[(p + shift) % 4];
    out.nodes[v].kind = "V=";
    return out;
}

// Coloring state sum of a connected planar graph of In-In-Out-Out vertices, exponents doubled.
inline void state_sum_connected(const kg::Diagram& g, int n, std::map<int, long long>& acc) {
    int nf = 0;
    std::vector<int> fid = kg::face_index(g, &nf);
    std::vector<kg::Dart> outs;
    std::vector<int> edge_of(g.dart_count());
    for (kg::Dart x = 0; x < g.dart_count(); ++x)
        if (g.role(x) == kg::Role::Out) {
            edge_of[x] = edge_of[g.partner(x)] = static_cast<int>(outs.size());
            outs.push_back(x);
        }
    int E = static_cast<int>(outs.size()), V = g.node_count();
    std::vector<std::array<int, 4>> ve(V);
    std::vector<std::vector<int>> ev(E);
    for (int v = 0; v < V; ++v)
        for (int p = 0; p < 4; ++p) {
            ve[v][p] = edge_of[kg::dart_at(v, p)];
            ev[ve[v][p]].push_back(v);
        }
    std::vector<int> col(E, 0);
    auto vok = [&](int v) {
        std::array<int, 4> c;
        for (int p = 0; p < 4; ++p) c[p] = col[ve[v][p]];
        for (int x : c)
            if (x == 0) return true;
        return c[0] != c[1] && ((c[2] == c[0] && c[3] == c[1]) || (c[2] == c[1] && c[3] == c[0]));
    };
    auto tally = [&] {
        int w = 0;
        for (int v = 0; v < V; ++v) {
            bool a = col[ve[v][0]] < col[ve[v][1]], b = col[ve[v][3]] < col[ve[v][2]];
            if (a && b) w -= 2;
            if (!a && !b) w += 2;
        }
        int rs = 0;
        for (int i = 1; i <= n; ++i) {
            std::vector<char> used(E, 0);
            for (int e0 = 0; e0 < E; ++e0) {
                if (col[e0] != i || used[e0]) continue;
                std::vector<char> curve(E, 0);
                for (int e = e0; !used[e];) {
                    used[e] = curve[e] = 1;
                    int v = kg::node_of(g.partner(outs[e]));
                    e = col[ve[v][2]] == i ? ve[v][2] : ve[v][3];
                }
                std::vector<int> par(nf);
                std::iota(par.begin(), par.end(), 0);
                std::function<int(int)> f = [&](int a) { return par[a] == a ? a : par[a] = f(par[a]); };
                for (int e = 0; e < E; ++e)
                    if (!curve[e]) par[f(fid[outs[e]])] = f(fid[g.partner(outs[e])]);
                int right = fid[g.partner(outs[e0])];
                int rot = f(right) == f(fid[0]) ? 1 : -1;
                rs += (n + 1 - 2 * i) * rot;
            }
        }
        acc[2 * rs + w] += 1;
    };
    std::function<void(int)> rec = [&](int e) {
        if (e == E) {
            tally();
            return;
        }
        for (int c = 1; c <= n; ++c) {
            col[e] = c;
            bool ok = true;
            for (int v : ev[e]) ok = ok && vok(v);
            if (ok) rec(e + 1);
        }
        col[e] = 0;
    };
    rec(0);
}

inline LaurentPoly state_sum(const kg::Diagram& g, int n) {
    LaurentPoly val = qint(n).pow(static_cast<unsigned>(g.circles()));
    if (g.node_count() == 0) return val;
    for (const kg::Diagram& c : kg::split_components(g.with_circles(0))) {
        std::map<int, long long> acc;
        state_sum_connected(c.with_circles(0), n, acc);
        LaurentPoly p;
        for (auto [e, k] : acc) p += LaurentPoly::monomial(k, e / 2);
        val *= p;
        val *= qint(n).pow(static_cast<unsigned>(c.circles()));
    }
    return val;
}

// Crossings and In-Out-In-Out vertices expanded on labels, then the state sum.
inline LaurentPoly moy(const TextDiagram& t, int n) {
    for (int v = 0; v < static_cast<int>(t.nodes.size()); ++v) {
        const std::string& k = t.nodes[v].kind;
        if (k == "X+")
            return q(n - 1) * moy(splice(t, v, {{{0, 1}, {3, 2}}}), n) - q(n) * moy(revertex(t, v, 3), n);
        if (k == "X-")
            return q(1 - n) * moy(splice(t, v, {{{0, 3}, {1, 2}}}), n) - q(-n) * moy(revertex(t, v, 0), n);
        if (k == "Vx") return moy(splice(t, v, {{{0, 1}, {2, 3}}}), n) + moy(splice(t, v, {{{0, 3}, {2, 1}}}), n);
    }
    return state_sum(from_text(t), n);
}

inline LaurentPoly moy(const kg::Diagram& d, int n) { return moy(to_text(d), n); }

}  // namespace oracle
