#include "ytl/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace ytl {

void LaurentPoly::strip() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
}

int LaurentPoly::lowest_exponent() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: zero has no exponents");
    return coeffs_.begin()->first;
}

int LaurentPoly::highest_exponent() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: zero has no exponents");
    return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& [e, c] : p.coeffs_) c = -c;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) coeffs_[e] += c;
    strip();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) coeffs_[e] -= c;
    strip();
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly p = *this;
    return p += o;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly p = *this;
    return p -= o;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly p;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) p.coeffs_[e1 + e2] += c1 * c2;
    p.strip();
    return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

Rational LaurentPoly::evaluate(const Rational& u0) const {
    if (u0 == 0) throw std::invalid_argument("LaurentPoly::evaluate: u0 must be nonzero");
    Rational acc = 0;
    for (const auto& [e, c] : coeffs_) {
        Rational term = c;
        Rational base = e >= 0 ? u0 : Rational(1) / u0;
        for (int i = 0; i < (e >= 0 ? e : -e); ++i) term *= base;
        acc += term;
    }
    return acc;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = c > 0 ? c : Rational(-c);
        if (e == 0 || a != 1) os << a;
        if (e != 0) {
            if (a != 1) os << "*";
            os << "u";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace ytl
