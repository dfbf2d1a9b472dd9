#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "diagram.hpp"
#include "qpoly.hpp"

namespace kg {

struct StateTerm {
    LaurentPoly coeff;
    Diagram graph;
};

// Two vertex-preserving rewrites of a triangular face: the braid-type triangle
// (R5 <-> R7) and the cyclic triangle (R9 <-> R11).
enum class Relation { Braid, Cyclic };

struct BigonSite {
    Dart x;  // bigon dart at the first vertex (the out side for parallel bigons)
    Dart y;  // bigon dart at the second vertex
    bool parallel;
};

struct TriangleSite {
    std::array<Dart, 3> darts;  // consecutive face darts at three distinct vertices
};

struct Migration {
    Relation which;
    Diagram migrated;
    std::vector<StateTerm> corrections;  // P(before) = P(migrated) + sum coeff * P(graph)
};

struct MigrationStep {
    Relation which;
    TriangleSite site;
    Diagram before;
    Diagram after;
    std::vector<StateTerm> corrections;
};

class SearchCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Local rules. Node arguments index into d; each throws DiagramError if the pattern is absent.
std::array<StateTerm, 2> resolve_crossing(const Diagram& d, int node, int n);
std::array<Diagram, 2> smooth_ioio(const Diagram& d, int node);
std::pair<LaurentPoly, Diagram> reduce_circle(const Diagram& d, int n);
std::vector<int> curl_sites(const Diagram& d);
std::pair<LaurentPoly, Diagram> reduce_curl(const Diagram& d, int node, int n);
std::vector<BigonSite> bigon_sites(const Diagram& d);
std::pair<LaurentPoly, Diagram> reduce_bigon_parallel(const Diagram& d, const BigonSite& site);
std::array<StateTerm, 2> reduce_bigon_antiparallel(const Diagram& d, const BigonSite& site, int n);
std::vector<TriangleSite> triangle_sites(const Diagram& d);
Migration apply_migration(const Diagram& d, const TriangleSite& site, int n);

struct EvalOptions {
    bool memo = true;
    std::optional<std::uint64_t> shuffle_seed;  // randomized rule and site choice
    std::size_t search_cap = 1000000;
};

// Migration steps from g to a graph with a curl or bigon; empty if g already has one.
std::vector<MigrationStep> find_bigon_path(const Diagram& g, int n, std::size_t cap = 1000000,
                                           std::optional<std::uint64_t> shuffle_seed = std::nullopt);

class EvalContext {
public:
    explicit EvalContext(int n, EvalOptions options = {});
    ~EvalContext();
    EvalContext(const EvalContext&) = delete;
    EvalContext& operator=(const EvalContext&) = delete;

    int n() const { return n_; }
    const EvalOptions& options() const { return options_; }
    LaurentPoly evaluate(const Diagram& d);
    std::size_t memo_size() const;

private:
    struct Impl;
    int n_;
    EvalOptions options_;
    std::unique_ptr<Impl> impl_;
};

LaurentPoly evaluate(const Diagram& d, EvalContext& ctx);
LaurentPoly evaluate(const Diagram& d, int n);

}  // namespace kg
