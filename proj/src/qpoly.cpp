#include "qpoly.hpp"

#include <cstdlib>
#include <sstream>

namespace kg {

LaurentPoly::LaurentPoly(Coeff c) { add_term(0, c); }

LaurentPoly LaurentPoly::monomial(Coeff coeff, int exp) {
    LaurentPoly p;
    p.add_term(exp, coeff);
    return p;
}

LaurentPoly LaurentPoly::quantum(int k) {
    LaurentPoly p;
    int m = std::abs(k);
    Coeff sign = k < 0 ? -1 : 1;
    for (int e = m - 1; e >= 1 - m; e -= 2) p.add_term(e, sign);
    return p;
}

LaurentPoly::Coeff LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exp, Coeff c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (auto [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly r(1), b = *this;
    while (k) {
        if (k & 1u) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto [ea, ca] : a.terms_)
        for (auto [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (auto [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [e, c] : terms_) {
        Coeff mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << 'q';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

std::vector<std::pair<int, LaurentPoly::Coeff>> LaurentPoly::pairs() const {
    return {terms_.begin(), terms_.end()};
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly bar(const LaurentPoly& a) { return a.bar(); }

}  // namespace kg
