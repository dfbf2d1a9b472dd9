#include <doctest.h>

#include <string>

#include "kgraph.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    kg_string_free(s);
    return out;
}

kg_diagram* parse(const char* text) {
    kg_diagram* d = nullptr;
    REQUIRE(kg_diagram_parse(text, &d) == KG_OK);
    return d;
}

std::string poly_text(kg_diagram* d, int n) {
    kg_poly* p = nullptr;
    REQUIRE(kg_evaluate(d, n, 0, &p) == KG_OK);
    char* s = nullptr;
    REQUIRE(kg_poly_text(p, &s) == KG_OK);
    kg_poly_free(p);
    return take(s);
}

}  // namespace

TEST_CASE("parse errors") {
    kg_diagram* d = nullptr;
    CHECK(kg_diagram_parse("X+ 1 2 3", &d) == KG_ERR_PARSE);
    CHECK(d == nullptr);
    CHECK(std::string(kg_last_error()).find("line 1") != std::string::npos);
    CHECK(kg_diagram_parse("X+ 1 2 3 4\nX- 3 2 1 5", &d) == KG_ERR_PARSE);
    CHECK(std::string(kg_last_error()).find("label") != std::string::npos);
    CHECK(kg_diagram_parse("X+ 1 2 3 4\nX+ 3 4 1 2", &d) == KG_ERR_INVALID);
    CHECK(kg_diagram_parse(nullptr, &d) == KG_ERR_INVALID);
    CHECK(kg_diagram_parse("O", nullptr) == KG_ERR_INVALID);
    d = parse("O");
    CHECK(std::string(kg_last_error()).empty());
    kg_diagram_free(d);
    kg_diagram_free(nullptr);
}

TEST_CASE("diagram accessors") {
    kg_diagram* d = parse("# kink\nX+ 1 1 2 2\n");
    CHECK(kg_diagram_node_count(d) == 1);
    CHECK(kg_diagram_circle_count(d) == 0);
    CHECK(kg_diagram_node_count(nullptr) == -1);
    char* s = nullptr;
    REQUIRE(kg_diagram_serialize(d, &s) == KG_OK);
    CHECK(take(s) == "X+ 1 1 2 2\n");
    kg_diagram* m = nullptr;
    REQUIRE(kg_diagram_mirror(d, &m) == KG_OK);
    char *k1 = nullptr, *k2 = nullptr;
    REQUIRE(kg_diagram_key(d, &k1) == KG_OK);
    REQUIRE(kg_diagram_key(m, &k2) == KG_OK);
    CHECK(take(k1) != take(k2));
    kg_diagram_free(m);
    kg_diagram_free(d);
    CHECK(std::string(kg_version()).size() > 0);
}

TEST_CASE("evaluate") {
    kg_diagram* u = parse("O");
    CHECK(poly_text(u, 3) == "q^-2 + 1 + q^2");
    kg_poly* p = nullptr;
    CHECK(kg_evaluate(u, 1, 0, &p) == KG_ERR_INVALID);
    CHECK(p == nullptr);
    REQUIRE(kg_evaluate(u, 2, 0, &p) == KG_OK);
    char* j = nullptr;
    REQUIRE(kg_poly_json(p, &j) == KG_OK);
    CHECK(take(j) == "[[-1,1],[1,1]]");
    kg_poly* b = nullptr;
    REQUIRE(kg_poly_bar(p, &b) == KG_OK);
    CHECK(kg_poly_equal(p, b));
    CHECK_FALSE(kg_poly_equal(p, nullptr));
    kg_poly_free(b);
    kg_poly_free(p);
    kg_diagram_free(u);

    kg_diagram* e = parse("V= 6 3 1 2\nX- 5 1 3 4\nVx 2 5 4 6");
    CHECK(poly_text(e, 2) == "-q^-4 - q^-2 + q^-1 + q");
    kg_diagram_free(e);
}

TEST_CASE("search cap") {
    kg_diagram* g = parse("V= 1 2 4 5\nV= 4 3 6 7\nV= 5 7 8 9\nV= 8 6 10 11\nV= 9 11 12 1\nV= 12 10 3 2\n");
    kg_poly* p = nullptr;
    CHECK(kg_evaluate(g, 2, 1, &p) == KG_ERR_SEARCH_CAP);
    CHECK(std::string(kg_last_error()).find("cap") != std::string::npos);
    CHECK(kg_evaluate(g, 2, 0, &p) == KG_OK);
    kg_poly_free(p);
    kg_diagram_free(g);
}

TEST_CASE("check run") {
    char* report = nullptr;
    int passed = 0;
    REQUIRE(kg_check_run("lemmas", 2, 1, 0, nullptr, 0, &report, &passed) == KG_OK);
    CHECK(passed == 1);
    CHECK(take(report).find("\"kgd-report\"") != std::string::npos);
    REQUIRE(kg_check_run("moves", 2, 3, 3, "O1a,O2b", 0, &report, &passed) == KG_OK);
    CHECK(passed == 1);
    CHECK(take(report).find("\"O2b\"") != std::string::npos);
    CHECK(kg_check_run("moves", 2, 3, 3, "O1a,O9", 0, &report, &passed) == KG_ERR_INVALID);
    CHECK(kg_check_run("braids", 2, 3, 3, nullptr, 0, &report, &passed) == KG_ERR_INVALID);
    CHECK(kg_check_run("moves", 1, 3, 3, nullptr, 0, &report, &passed) == KG_ERR_INVALID);
    CHECK(kg_check_run("moves", 2, 3, 3, nullptr, 0, nullptr, &passed) == KG_ERR_INVALID);
}
