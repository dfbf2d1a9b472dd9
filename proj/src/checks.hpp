#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diagram.hpp"
#include "moves.hpp"
#include "qpoly.hpp"

namespace kg {

inline constexpr int kReportVersion = 1;

enum class CheckKind { Moves, Skein, Lemmas, Order, Mirror };

std::optional<CheckKind> parse_check_kind(std::string_view text);
std::string check_kind_name(CheckKind kind);

struct CheckConfig {
    CheckKind kind = CheckKind::Moves;
    int n = 2;
    std::uint64_t seed = 1;
    int count = 20;
    std::vector<MoveId> moves;  // empty: all 36
    int orders = 5;
    int max_nodes = 6;
    std::size_t search_cap = 1000000;
};

struct CheckItem {
    int index = 0;
    std::string label;
    std::string key;
    bool pass = true;
    std::string value;    // polynomial text
    std::string detail;   // what was compared
    std::string diagram;  // serialized offending diagram, failures only
};

struct CheckReport {
    CheckConfig config;
    std::vector<CheckItem> items;
    int passed = 0;
    int failed = 0;
    double elapsed_ms = 0;

    bool ok() const { return failed == 0; }
};

struct Lemma {
    std::string name;
    MoveId target;
    std::vector<MoveId> sequence;
};

const std::vector<Lemma>& lemmas();

// Closed LHS of the target, walked through the sequence (each step in either direction at any
// site); true when some end state has the key of the closed RHS.
bool derive_lemma(const Lemma& lemma, std::size_t* states = nullptr);

// Seeded test input: alternates move walks from base diagrams and face-insertion maps.
Diagram test_diagram(std::uint64_t seed, int index, int max_nodes = 6);

// Crossing switch and oriented smoothing at one crossing.
Diagram switch_crossing(const Diagram& d, int node);
Diagram smooth_crossing(const Diagram& d, int node);

CheckReport run_check(const CheckConfig& config);
std::string report_json(const CheckReport& report, int indent = 2);

}  // namespace kg
