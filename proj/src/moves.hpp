#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diagram.hpp"

namespace kg {

struct MoveId {
    int family = 0;      // 1..5
    char variant = 'a';  // letter

    std::string name() const;  // "O3a"
    static std::optional<MoveId> parse(std::string_view text);
    friend auto operator<=>(const MoveId&, const MoveId&) = default;
};

enum class Direction { LR, RL };

// One side of a move: nodes with anchored slots, and boundary ports counterclockwise.
struct Fragment {
    struct Port {
        bool enters;      // flow crosses the boundary into the disk
        Dart dart = -1;   // attached node dart, or -1 for an arc
        int arc_to = -1;  // partner port of an arc
    };

    std::vector<NodeKind> kinds;
    std::vector<int> links;  // per dart: partner dart (>= 0) or -(port + 1)
    std::vector<Port> ports;

    bool node_free() const { return kinds.empty(); }
};

struct MoveTemplate {
    MoveId id;
    Fragment lhs;
    Fragment rhs;
};

struct MoveSite {
    MoveId id;
    Direction dir = Direction::LR;
    std::vector<int> nodes;  // host node for each pattern node
    std::vector<int> rot;    // host slot = pattern slot + rot
    std::vector<Dart> cut;   // node-free pattern: host dart outside each port

    friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

const std::vector<MoveTemplate>& move_templates();
const MoveTemplate& move_template(MoveId id);
std::vector<MoveId> all_moves();
std::vector<MoveId> generating_set();

// Parses `.kgd`-fragment move data; throws DiagramError on malformed or inconsistent templates.
std::vector<MoveTemplate> parse_move_data(std::string_view text);

std::vector<MoveSite> enumerate_sites(const Diagram& d, MoveId id, Direction dir);
Diagram apply_move(const Diagram& d, const MoveSite& site);

// Closes the boundary with non-crossing outside arcs; also reports the arc pairs used.
Diagram close_fragment(const Fragment& f, std::vector<std::pair<int, int>>* wiring = nullptr);

struct RandomConfig {
    int max_nodes = 6;
    double vertex_fraction = 0.3;
    int steps = 12;
    double grow = 0.5;
};

// Base diagram plus seeded random moves.
Diagram random_diagram(const RandomConfig& config, std::uint64_t seed);
// Random planar map grown by inserting nodes into faces; reaches diagrams no move walk from a
// small base would.
Diagram random_insertion_diagram(int nodes, double vertex_fraction, std::uint64_t seed);

}  // namespace kg
