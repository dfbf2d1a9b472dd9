#include <doctest.h>

#include <random>

#include "qpoly.hpp"

using kg::LaurentPoly;

namespace {

LaurentPoly q(int e) { return LaurentPoly::monomial(1, e); }
LaurentPoly qi(int k) { return LaurentPoly::quantum(k); }

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-6, 6), coeff(-4, 4), len(0, 4);
    LaurentPoly p;
    for (int i = len(rng); i > 0; --i) p += LaurentPoly::monomial(coeff(rng), exp(rng));
    return p;
}

}  // namespace

TEST_CASE("monomials") {
    CHECK(LaurentPoly::monomial(1, 0) == LaurentPoly(1));
    CHECK(LaurentPoly::monomial(0, 5).is_zero());
    CHECK(LaurentPoly::monomial(-1, 3).to_string() == "-q^3");
}

TEST_CASE("addition cancels") {
    CHECK((q(1) + 1) + (-q(1)) == LaurentPoly(1));
    LaurentPoly p = q(2) - q(-3);
    CHECK(LaurentPoly() + p == p);
    CHECK((p - p).terms().empty());
    int n = 3;
    CHECK(q(n - 1) * qi(n) + (-(q(n) * qi(n - 1))) == LaurentPoly(1));
}

TEST_CASE("products") {
    CHECK(q(1) * q(-1) == LaurentPoly(1));
    CHECK(qi(2) * qi(2) == q(2) + LaurentPoly(2) + q(-2));
    CHECK((q(1) - q(-1)) * qi(3) == q(3) - q(-3));
}

TEST_CASE("quantum integers") {
    CHECK(qi(2) == q(1) + q(-1));
    CHECK(qi(0).is_zero());
    CHECK(qi(-1) == LaurentPoly(-1));
    CHECK(qi(3).to_string() == "q^-2 + 1 + q^2");
    for (int k = -5; k <= 10; ++k) {
        CHECK((q(1) - q(-1)) * qi(k) == LaurentPoly::monomial(1, k) + LaurentPoly::monomial(-1, -k));
        CHECK(qi(k).bar() == qi(k));
        CHECK(qi(-k) == -qi(k));
    }
}

TEST_CASE("bar") {
    CHECK((q(2) + 1).bar() == q(-2) + 1);
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        CHECK(a.bar().bar() == a);
        CHECK(kg::bar(a * b) == a.bar() * b.bar());
        CHECK(kg::bar(a + b) == a.bar() + b.bar());
    }
}

TEST_CASE("ring axioms on random samples") {
    std::mt19937 rng(5);
    for (int i = 0; i < 300; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(kg::add(a, b) == kg::add(b, a));
        CHECK(kg::mul(a, b) == kg::mul(b, a));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        for (auto [e, k] : (a * b).pairs()) CHECK(k != 0);
    }
}

TEST_CASE("scalar identities") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(q(n - 1) * qi(n) - q(n) * qi(n - 1) == LaurentPoly(1));
        CHECK((LaurentPoly(1) - q(n - 2) * qi(n - 1) + q(n - 1) * qi(n - 2)).is_zero());
    }
}

TEST_CASE("text and pairs") {
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(LaurentPoly(-3).to_string() == "-3");
    LaurentPoly p = -q(-4) - q(-2) + q(1) + q(3);
    CHECK(p.to_string() == "-q^-4 - q^-2 + q + q^3");
    CHECK((LaurentPoly::monomial(2, 1) - LaurentPoly::monomial(5, -1)).to_string() == "-5*q^-1 + 2*q");
    auto pairs = p.pairs();
    REQUIRE(pairs.size() == 4);
    CHECK(pairs.front() == std::pair<int, kg::LaurentPoly::Coeff>{-4, -1});
    CHECK(pairs.back() == std::pair<int, kg::LaurentPoly::Coeff>{3, 1});
    CHECK(q(2).pow(3) == q(6));
    CHECK(qi(2).pow(0) == LaurentPoly(1));
}
