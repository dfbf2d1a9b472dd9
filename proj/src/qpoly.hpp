#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kg {

// Laurent polynomial in q with integer coefficients. Zero terms are never stored.
class LaurentPoly {
public:
    using Coeff = std::int64_t;
    using Terms = std::map<int, Coeff>;

    LaurentPoly() = default;
    LaurentPoly(Coeff c);

    static LaurentPoly monomial(Coeff coeff, int exp);
    static LaurentPoly quantum(int k);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coeff(int exp) const;

    LaurentPoly bar() const;
    LaurentPoly pow(unsigned k) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    std::string to_string() const;
    std::vector<std::pair<int, Coeff>> pairs() const;

private:
    void add_term(int exp, Coeff c);
    Terms terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly bar(const LaurentPoly& a);

}  // namespace kg
