#include "diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace kg {

namespace {

constexpr std::array<Role, 4> kPositive{Role::In, Role::Out, Role::Out, Role::In};
constexpr std::array<Role, 4> kIIOO{Role::In, Role::In, Role::Out, Role::Out};
constexpr std::array<Role, 4> kIOIO{Role::In, Role::Out, Role::In, Role::Out};

std::string fmt_error(int line, int column, const std::string& what) {
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << what;
    return os.str();
}

Diagram rebuild(const Diagram& d, const std::vector<NodeKind>& kinds, const std::vector<int>& order,
                const std::vector<int>& shift, int circles) {
    int n = d.node_count();
    std::vector<Dart> pairing(4 * n);
    // old dart (v, p) sits at new slot (p - shift) at node order[v]
    auto to_new = [&](Dart x) {
        int v = node_of(x);
        return dart_at(order[v], pos_of(x) - shift[v] + 4);
    };
    std::vector<NodeKind> nk(n);
    for (int v = 0; v < n; ++v) nk[order[v]] = kinds[v];
    for (Dart x = 0; x < 4 * n; ++x) pairing[to_new(x)] = to_new(d.partner(x));
    return Diagram(std::move(nk), std::move(pairing), circles);
}

}  // namespace

const std::array<Role, 4>& role_pattern(NodeKind k) {
    switch (k) {
    case NodeKind::PositiveCrossing: return kPositive;
    case NodeKind::VertexIOIO: return kIOIO;
    default: return kIIOO;
    }
}

Role role_at(NodeKind k, int pos) { return role_pattern(k)[pos & 3]; }

bool is_crossing(NodeKind k) {
    return k == NodeKind::PositiveCrossing || k == NodeKind::NegativeCrossing;
}

std::string_view kind_name(NodeKind k) {
    switch (k) {
    case NodeKind::PositiveCrossing: return "X+";
    case NodeKind::NegativeCrossing: return "X-";
    case NodeKind::VertexIIOO: return "V=";
    case NodeKind::VertexIOIO: return "Vx";
    }
    return "?";
}

ParseError::ParseError(int line, int column, const std::string& what)
    : DiagramError(fmt_error(line, column, what)), line_(line), column_(column) {}

Diagram::Diagram(std::vector<NodeKind> kinds, std::vector<Dart> pairing, int circles)
    : kinds_(std::move(kinds)), pairing_(std::move(pairing)), circles_(circles) {
    if (circles_ < 0) throw DiagramError("negative circle count");
    if (pairing_.size() != 4 * kinds_.size()) throw DiagramError("pairing size does not match node count");
    int m = dart_count();
    for (Dart x = 0; x < m; ++x) {
        Dart y = pairing_[x];
        if (y < 0 || y >= m || y == x || pairing_[y] != x)
            throw DiagramError("dart pairing is not a fixed-point-free involution");
        if (role(x) == role(y)) throw DiagramError("edge joins two darts of the same role");
    }
    if (!euler_ok(*this)) throw DiagramError("rotation system is not planar (genus > 0)");
}

Diagram Diagram::circles_only(int count) { return Diagram({}, {}, count); }

Diagram Diagram::with_circles(int circles) const {
    Diagram r = *this;
    if (circles < 0) throw DiagramError("negative circle count");
    r.circles_ = circles;
    return r;
}

int Diagram::count_kind(NodeKind k) const {
    return static_cast<int>(std::count(kinds_.begin(), kinds_.end(), k));
}

std::vector<int> face_index(const Diagram& d, int* count) {
    std::vector<int> f(d.dart_count(), -1);
    int c = 0;
    for (Dart s = 0; s < d.dart_count(); ++s) {
        if (f[s] >= 0) continue;
        for (Dart x = s; f[x] < 0; x = cw(d.partner(x))) f[x] = c;
        ++c;
    }
    if (count) *count = c;
    return f;
}

std::vector<std::vector<Dart>> faces(const Diagram& d) {
    int c = 0;
    auto f = face_index(d, &c);
    std::vector<std::vector<Dart>> out(c);
    std::vector<char> seen(d.dart_count(), 0);
    for (Dart s = 0; s < d.dart_count(); ++s) {
        if (seen[s]) continue;
        for (Dart x = s; !seen[x]; x = cw(d.partner(x))) {
            seen[x] = 1;
            out[f[s]].push_back(x);
        }
    }
    return out;
}

std::vector<int> node_components(const Diagram& d, int* count) {
    int n = d.node_count();
    std::vector<int> comp(n, -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int p = 0; p < 4; ++p) {
                int w = node_of(d.partner(dart_at(v, p)));
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

bool euler_ok(const Diagram& d) {
    int nf = 0, nc = 0;
    face_index(d, &nf);
    node_components(d, &nc);
    int v = d.node_count(), e = d.dart_count() / 2;
    return v - e + nf == 2 * nc;
}

std::vector<Diagram> split_components(const Diagram& d) {
    int nc = 0;
    auto comp = node_components(d, &nc);
    std::vector<Diagram> out;
    std::vector<int> local(d.node_count());
    for (int c = 0; c < nc; ++c) {
        std::vector<int> members;
        for (int v = 0; v < d.node_count(); ++v)
            if (comp[v] == c) {
                local[v] = static_cast<int>(members.size());
                members.push_back(v);
            }
        std::vector<NodeKind> kinds;
        std::vector<Dart> pairing;
        for (int v : members) {
            kinds.push_back(d.kind(v));
            for (int p = 0; p < 4; ++p) {
                Dart y = d.partner(dart_at(v, p));
                pairing.push_back(dart_at(local[node_of(y)], pos_of(y)));
            }
        }
        out.emplace_back(std::move(kinds), std::move(pairing), 0);
    }
    return out;
}

Diagram parse_kgd(std::string_view text) {
    struct Use {
        Dart dart;
        int line, col;
    };
    std::vector<NodeKind> kinds;
    std::map<long, std::vector<Use>> uses;
    std::vector<std::array<long, 4>> labels;
    int circles = 0;
    int lineno = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::vector<std::pair<std::string_view, int>> toks;
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            if (i >= line.size()) break;
            size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
            toks.emplace_back(line.substr(i, j - i), static_cast<int>(i) + 1);
            i = j;
        }
        if (toks.empty() || toks[0].first[0] == '#') {
            if (end == text.size()) break;
            continue;
        }
        auto [head, hcol] = toks[0];
        if (head == "O") {
            if (toks.size() != 1) throw ParseError(lineno, toks[1].second, "unexpected token after O");
            ++circles;
        } else {
            NodeKind k;
            if (head == "X+") k = NodeKind::PositiveCrossing;
            else if (head == "X-") k = NodeKind::NegativeCrossing;
            else if (head == "V=") k = NodeKind::VertexIIOO;
            else if (head == "Vx") k = NodeKind::VertexIOIO;
            else throw ParseError(lineno, hcol, "unknown node kind '" + std::string(head) + "'");
            if (toks.size() != 5)
                throw ParseError(lineno, hcol, "node line needs exactly four edge labels");
            std::array<long, 4> labs{};
            for (int p = 0; p < 4; ++p) {
                auto [tok, col] = toks[p + 1];
                long v = 0;
                auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
                if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || v <= 0)
                    throw ParseError(lineno, col, "edge label must be a positive integer, got '" + std::string(tok) + "'");
                labs[p] = v;
            }
            if (k == NodeKind::VertexIOIO && labs[2] < labs[0]) {
                std::rotate(labs.begin(), labs.begin() + 2, labs.end());
                std::swap(toks[1], toks[3]);
                std::swap(toks[2], toks[4]);
            }
            int v = static_cast<int>(kinds.size());
            kinds.push_back(k);
            labels.push_back(labs);
            for (int p = 0; p < 4; ++p) uses[labs[p]].push_back({dart_at(v, p), lineno, toks[p + 1].second});
        }
        if (end == text.size()) break;
    }
    std::vector<Dart> pairing(4 * kinds.size(), -1);
    for (auto& [lab, us] : uses) {
        if (us.size() != 2) {
            throw ParseError(us[0].line, us[0].col,
                             "edge label " + std::to_string(lab) + " used " + std::to_string(us.size()) +
                                 (us.size() == 1 ? " time" : " times") + ", expected exactly 2");
        }
        Role r0 = role_at(kinds[node_of(us[0].dart)], pos_of(us[0].dart));
        Role r1 = role_at(kinds[node_of(us[1].dart)], pos_of(us[1].dart));
        if (r0 == r1) {
            throw ParseError(us[1].line, us[1].col,
                             "edge label " + std::to_string(lab) + " used twice in " +
                                 (r0 == Role::In ? "In" : "Out") + " role (orientation clash)");
        }
        pairing[us[0].dart] = us[1].dart;
        pairing[us[1].dart] = us[0].dart;
    }
    return Diagram(std::move(kinds), std::move(pairing), circles);
}

std::string serialize_kgd(const Diagram& d) {
    std::vector<long> label(d.dart_count(), 0);
    long next = 1;
    std::ostringstream os;
    for (int v = 0; v < d.node_count(); ++v) {
        std::array<long, 4> labs{};
        for (int p = 0; p < 4; ++p) {
            Dart x = dart_at(v, p);
            if (!label[x]) label[x] = label[d.partner(x)] = next++;
            labs[p] = label[x];
        }
        if (d.kind(v) == NodeKind::VertexIOIO && labs[2] < labs[0])
            std::rotate(labs.begin(), labs.begin() + 2, labs.end());
        os << kind_name(d.kind(v));
        for (long l : labs) os << ' ' << l;
        os << '\n';
    }
    for (int c = 0; c < d.circles(); ++c) os << "O\n";
    return os.str();
}

Diagram relabel(const Diagram& d, const std::vector<int>& order, const std::vector<int>& shift) {
    return rebuild(d, d.kinds(), order, shift, d.circles());
}

Diagram mirror(const Diagram& d) {
    int n = d.node_count();
    std::vector<NodeKind> kinds = d.kinds();
    std::vector<int> order(n), shift(n, 0);
    std::iota(order.begin(), order.end(), 0);
    for (int v = 0; v < n; ++v) {
        if (kinds[v] == NodeKind::PositiveCrossing) {
            kinds[v] = NodeKind::NegativeCrossing;
            shift[v] = 3;
        } else if (kinds[v] == NodeKind::NegativeCrossing) {
            kinds[v] = NodeKind::PositiveCrossing;
            shift[v] = 1;
        }
    }
    return rebuild(d, kinds, order, shift, d.circles());
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
    std::vector<NodeKind> kinds = a.kinds();
    kinds.insert(kinds.end(), b.kinds().begin(), b.kinds().end());
    std::vector<Dart> pairing = a.pairing();
    int off = a.dart_count();
    for (Dart y : b.pairing()) pairing.push_back(y + off);
    return Diagram(std::move(kinds), std::move(pairing), a.circles() + b.circles());
}

}  // namespace kg
