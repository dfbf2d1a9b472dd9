#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kgraph.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFailed = 2;

struct Str {
    char* s = nullptr;
    ~Str() { kg_string_free(s); }
};

using DiagramPtr = std::unique_ptr<kg_diagram, decltype(&kg_diagram_free)>;
using PolyPtr = std::unique_ptr<kg_poly, decltype(&kg_poly_free)>;

int report_error(const std::string& what, kg_status st = KG_ERR_INVALID) {
    std::cerr << "kgd: " << what << ": " << kg_last_error() << "\n";
    return st == KG_ERR_SEARCH_CAP ? kExitFailed : kExitInput;
}

size_t memo_cap() {
    const char* v = std::getenv("KGD_MEMO_CAP");
    if (!v || !*v) return 0;
    char* end = nullptr;
    unsigned long long cap = std::strtoull(v, &end, 10);
    if (*end || cap == 0) {
        std::cerr << "kgd: ignoring KGD_MEMO_CAP='" << v << "'\n";
        return 0;
    }
    return static_cast<size_t>(cap);
}

bool read_diagram(const std::string& path, DiagramPtr& out) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "kgd: cannot read " << path << "\n";
        return false;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    kg_diagram* d = nullptr;
    if (kg_diagram_parse(ss.str().c_str(), &d) != KG_OK) {
        std::cerr << "kgd: " << path << ": " << kg_last_error() << "\n";
        return false;
    }
    out.reset(d);
    return true;
}

int cmd_eval(const std::string& file, int n, bool json) {
    DiagramPtr d(nullptr, kg_diagram_free);
    if (!read_diagram(file, d)) return kExitInput;
    kg_poly* raw = nullptr;
    if (kg_status st = kg_evaluate(d.get(), n, memo_cap(), &raw); st != KG_OK) return report_error(file, st);
    PolyPtr p(raw, kg_poly_free);
    Str text;
    if (kg_poly_text(p.get(), &text.s) != KG_OK) return report_error(file);
    if (!json) {
        std::cout << text.s << "\n";
        return kExitOk;
    }
    Str pairs, key;
    if (kg_poly_json(p.get(), &pairs.s) != KG_OK || kg_diagram_key(d.get(), &key.s) != KG_OK)
        return report_error(file);
    std::cout << "{\"n\": " << n << ", \"key\": \"" << key.s << "\", \"text\": \"" << text.s
              << "\", \"pairs\": " << pairs.s << "}\n";
    return kExitOk;
}

int cmd_mirror(const std::string& file) {
    DiagramPtr d(nullptr, kg_diagram_free);
    if (!read_diagram(file, d)) return kExitInput;
    kg_diagram* raw = nullptr;
    if (kg_diagram_mirror(d.get(), &raw) != KG_OK) return report_error(file);
    DiagramPtr m(raw, kg_diagram_free);
    Str text;
    if (kg_diagram_serialize(m.get(), &text.s) != KG_OK) return report_error(file);
    std::cout << text.s;
    return kExitOk;
}

int cmd_check(const std::string& kind, int n, uint64_t seed, int count, const std::string& moves,
              const std::string& out) {
    Str report;
    int passed = 0;
    if (kg_check_run(kind.c_str(), n, seed, count, moves.c_str(), memo_cap(), &report.s, &passed) != KG_OK)
        return report_error("check " + kind);
    if (out.empty()) {
        std::cout << report.s << "\n";
    } else {
        std::ofstream f(out);
        f << report.s << "\n";
        if (!f) {
            std::cerr << "kgd: cannot write " << out << "\n";
            return kExitInput;
        }
    }
    std::cerr << "check " << kind << ": " << (passed ? "pass" : "FAIL") << "\n";
    return passed ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Knotted 4-valent graph invariant"};
    app.require_subcommand(1);

    int n = 2;
    bool json = false;
    std::string file;
    auto* eval = app.add_subcommand("eval", "Evaluate the invariant of a .kgd diagram");
    eval->add_option("--n", n, "Parameter n >= 2")->required()->check(CLI::Range(2, 1000));
    eval->add_flag("--json", json, "Print exponent/coefficient pairs as JSON");
    eval->add_option("file", file, ".kgd file")->required();

    std::string mfile;
    auto* mir = app.add_subcommand("mirror", "Print the mirror image of a .kgd diagram");
    mir->add_option("file", mfile, ".kgd file")->required();

    std::string kind, moves, out;
    int cn = 2, count = 20;
    uint64_t seed = 1;
    auto* check = app.add_subcommand("check", "Run a verification suite");
    check->add_option("kind", kind, "moves | skein | lemmas | order | mirror")
        ->required()
        ->check(CLI::IsMember({"moves", "skein", "lemmas", "order", "mirror"}));
    check->add_option("--n", cn, "Parameter n >= 2")->check(CLI::Range(2, 1000));
    check->add_option("--seed", seed, "Random seed");
    check->add_option("--count", count, "Number of random items")->check(CLI::NonNegativeNumber);
    check->add_option("--moves", moves, "Comma separated move ids (default all)");
    check->add_option("--out", out, "Write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    if (*eval) return cmd_eval(file, n, json);
    if (*mir) return cmd_mirror(mfile);
    return cmd_check(kind, cn, seed, count, moves, out);
}
