#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kg {

enum class NodeKind : std::uint8_t { PositiveCrossing, NegativeCrossing, VertexIIOO, VertexIOIO };
enum class Role : std::uint8_t { In, Out };

// Dart d lives at node d / 4, counterclockwise slot d % 4 (slot 0 is the anchor).
using Dart = int;

constexpr int node_of(Dart d) { return d >> 2; }
constexpr int pos_of(Dart d) { return d & 3; }
constexpr Dart dart_at(int node, int pos) { return node * 4 + (pos & 3); }
constexpr Dart ccw(Dart d) { return (d & ~3) | ((d + 1) & 3); }
constexpr Dart cw(Dart d) { return (d & ~3) | ((d + 3) & 3); }
constexpr Dart opposite(Dart d) { return (d & ~3) | ((d + 2) & 3); }

Role role_at(NodeKind k, int pos);
const std::array<Role, 4>& role_pattern(NodeKind k);
bool is_crossing(NodeKind k);
std::string_view kind_name(NodeKind k);
inline Role flip(Role r) { return r == Role::In ? Role::Out : Role::In; }

class DiagramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public DiagramError {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class Diagram {
public:
    Diagram() = default;
    // Throws DiagramError if the map is not a valid genus-0 balanced diagram.
    Diagram(std::vector<NodeKind> kinds, std::vector<Dart> pairing, int circles = 0);

    static Diagram circles_only(int count);

    int node_count() const { return static_cast<int>(kinds_.size()); }
    int dart_count() const { return static_cast<int>(pairing_.size()); }
    int circles() const { return circles_; }
    NodeKind kind(int node) const { return kinds_[node]; }
    Role role(Dart d) const { return role_at(kinds_[node_of(d)], pos_of(d)); }
    Dart partner(Dart d) const { return pairing_[d]; }
    const std::vector<NodeKind>& kinds() const { return kinds_; }
    const std::vector<Dart>& pairing() const { return pairing_; }

    Diagram with_circles(int circles) const;
    int count_kind(NodeKind k) const;

private:
    std::vector<NodeKind> kinds_;
    std::vector<Dart> pairing_;
    int circles_ = 0;
};

// Face of dart d: the face on its left when leaving the node along d.
std::vector<std::vector<Dart>> faces(const Diagram& d);
std::vector<int> face_index(const Diagram& d, int* count = nullptr);
std::vector<int> node_components(const Diagram& d, int* count = nullptr);
bool euler_ok(const Diagram& d);

// Node-connected pieces, circles left out.
std::vector<Diagram> split_components(const Diagram& d);

Diagram parse_kgd(std::string_view text);
std::string serialize_kgd(const Diagram& d);

Diagram mirror(const Diagram& d);
Diagram disjoint_union(const Diagram& a, const Diagram& b);

// Rebuild with nodes renumbered (new index order[i] for old node i) and each node's
// slots rotated: new slot p holds old slot (p + shift[i]) % 4.
Diagram relabel(const Diagram& d, const std::vector<int>& order, const std::vector<int>& shift);

}  // namespace kg
