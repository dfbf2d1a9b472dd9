#include "canonical.hpp"

#include <algorithm>

namespace kg {

namespace {

struct Walk {
    std::string code;
    std::vector<int> nodes;  // discovery order
    std::vector<int> start;  // anchor slot per discovered node
};

int start_slot(NodeKind k, int entry) {
    if (k != NodeKind::VertexIOIO) return 0;
    return entry % 2 == 0 ? entry : entry - 1;
}

void put16(std::string& s, int v) {
    s.push_back(static_cast<char>((v >> 8) & 0xff));
    s.push_back(static_cast<char>(v & 0xff));
}

Walk walk_from(const Diagram& d, int root, int root_start, std::vector<int>& index) {
    Walk w;
    w.nodes.push_back(root);
    w.start.push_back(root_start);
    index[root] = 0;
    for (size_t i = 0; i < w.nodes.size(); ++i) {
        int v = w.nodes[i];
        for (int j = 0; j < 4; ++j) {
            Dart y = d.partner(dart_at(v, w.start[i] + j));
            int u = node_of(y);
            if (index[u] < 0) {
                index[u] = static_cast<int>(w.nodes.size());
                w.nodes.push_back(u);
                w.start.push_back(start_slot(d.kind(u), pos_of(y)));
            }
        }
    }
    put16(w.code, static_cast<int>(w.nodes.size()));
    for (size_t i = 0; i < w.nodes.size(); ++i) {
        int v = w.nodes[i];
        w.code.push_back(static_cast<char>(d.kind(v)));
        for (int j = 0; j < 4; ++j) {
            Dart y = d.partner(dart_at(v, w.start[i] + j));
            int u = index[node_of(y)];
            put16(w.code, u);
            w.code.push_back(static_cast<char>((pos_of(y) - w.start[u] + 4) & 3));
        }
    }
    for (int v : w.nodes) index[v] = -1;
    return w;
}

std::vector<Walk> component_walks(const Diagram& d) {
    int nc = 0;
    auto comp = node_components(d, &nc);
    std::vector<Walk> best(nc);
    std::vector<char> have(nc, 0);
    std::vector<int> index(d.node_count(), -1);
    for (int v = 0; v < d.node_count(); ++v) {
        int c = comp[v];
        int starts = d.kind(v) == NodeKind::VertexIOIO ? 2 : 1;
        for (int s = 0; s < starts; ++s) {
            Walk w = walk_from(d, v, 2 * s, index);
            if (!have[c] || w.code < best[c].code) {
                best[c] = std::move(w);
                have[c] = 1;
            }
        }
    }
    std::sort(best.begin(), best.end(), [](const Walk& a, const Walk& b) { return a.code < b.code; });
    return best;
}

CanonicalKey key_of(const std::vector<Walk>& walks, int circles) {
    CanonicalKey k;
    for (const auto& w : walks) k.bytes += w.code;
    k.bytes.push_back('\xff');
    put16(k.bytes, circles);
    return k;
}

}  // namespace

std::string CanonicalKey::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

CanonicalKey canonical_key(const Diagram& d) { return key_of(component_walks(d), d.circles()); }

CanonicalForm canonical_form(const Diagram& d) {
    auto walks = component_walks(d);
    int n = d.node_count();
    std::vector<int> order(n), shift(n);
    int next = 0;
    for (const auto& w : walks)
        for (size_t i = 0; i < w.nodes.size(); ++i) {
            order[w.nodes[i]] = next++;
            shift[w.nodes[i]] = w.start[i];
        }
    return {relabel(d, order, shift), key_of(walks, d.circles())};
}

}  // namespace kg
