#pragma once

#include <array>
#include <utility>
#include <vector>

#include "diagram.hpp"

namespace kg {

// Cuts a disk out of a host diagram and glues in new wiring.
//
// Ports are the points where the disk boundary meets an edge. Each port has an
// outside (a host dart, or another port when the outside edge runs straight
// between two ports) and an inside, wired with join().
class RegionBuilder {
public:
    struct Slot {
        bool is_port;
        int index;  // port index, or new node index
        int pos;    // counterclockwise slot of a new node (geometric order)
    };

    explicit RegionBuilder(const Diagram& host) : host_(host) {}

    void remove(int node);
    // Port on the edge leaving the disk at dart x of a removed node.
    int port_at(Dart x);
    // Port on a host edge cut open; outside is host dart h, which stays in place.
    int port_outside(Dart h);
    // Two new ports whose outsides are joined to each other.
    std::pair<int, int> port_pair();

    // New node; roles listed counterclockwise, re-anchored on build.
    int node(NodeKind kind, std::array<Role, 4> roles);
    // New node whose slot order is already anchored.
    int node_anchored(NodeKind kind);

    static Slot port(int k) { return {true, k, 0}; }
    static Slot at(int node, int pos) { return {false, node, pos}; }
    void join(Slot a, Slot b);
    void add_circles(int c) { circles_ += c; }

    // Kept host nodes keep their relative order, new nodes follow.
    Diagram build() const;

private:
    struct Port {
        Dart dart;   // region-side dart for port_at, -1 otherwise
        Dart outer;  // host dart outside, -1 when resolved from dart
        int link;    // paired port for port_pair, -1 otherwise
    };
    struct NewNode {
        NodeKind kind;
        int shift;
    };

    const Diagram& host_;
    std::vector<int> removed_;
    std::vector<Port> ports_;
    std::vector<NewNode> nodes_;
    std::vector<std::pair<Slot, Slot>> links_;
    int circles_ = 0;
};

// Anchor slot for a counterclockwise role list, or -1 if no kind fits.
int anchor_for(NodeKind kind, const std::array<Role, 4>& roles);
// Vertex kind implied by a counterclockwise role list.
NodeKind vertex_kind(const std::array<Role, 4>& roles);

// Same node, new kind; new slot p takes old slot (p + shift) % 4.
Diagram retype(const Diagram& d, int node, NodeKind kind, int shift);

}  // namespace kg
