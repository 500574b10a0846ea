#include "ytl/function_field.hpp"

#include <stdexcept>

namespace ytl {

void Poly::strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly& Poly::operator*=(const Rational& a) {
    for (auto& c : c_) c *= a;
    strip();
    return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Poly::divmod: division by zero");
    std::vector<Rational> rem = c_;
    int dd = divisor.degree();
    if (degree() < dd) return {Poly(), *this};
    std::vector<Rational> quot(degree() - dd + 1, Rational(0));
    for (int i = degree(); i >= dd; --i) {
        if (rem[i] == 0) continue;
        Rational f = rem[i] / divisor.leading();
        quot[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.c_[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = b;
        b = r;
    }
    if (!a.is_zero()) a *= Rational(1) / a.leading();
    return a;
}

FunctionField::FunctionField(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("FunctionField: zero denominator");
    normalize();
}

void FunctionField::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

FunctionField FunctionField::from_laurent(const LaurentPoly& p) {
    if (p.is_zero()) return FunctionField();
    int low = p.lowest_exponent();
    int shift = low < 0 ? -low : 0;
    std::vector<Rational> num(p.highest_exponent() + shift + 1, Rational(0));
    for (const auto& [e, c] : p.coefficients()) num[e + shift] = c;
    std::vector<Rational> den(shift + 1, Rational(0));
    den[shift] = 1;
    return FunctionField(Poly(std::move(num)), Poly(std::move(den)));
}

FunctionField FunctionField::operator+(const FunctionField& o) const {
    return FunctionField(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FunctionField FunctionField::operator-(const FunctionField& o) const {
    return FunctionField(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FunctionField FunctionField::operator*(const FunctionField& o) const {
    return FunctionField(num_ * o.num_, den_ * o.den_);
}

FunctionField FunctionField::operator/(const FunctionField& o) const {
    if (o.is_zero()) throw std::domain_error("FunctionField: division by zero");
    return FunctionField(num_ * o.den_, den_ * o.num_);
}

FunctionField FunctionField::operator-() const {
    FunctionField r = *this;
    r.num_ = Poly() - r.num_;
    return r;
}

}  // namespace ytl
