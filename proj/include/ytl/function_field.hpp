#pragma once

#include <string>
#include <vector>

#include "ytl/integers.hpp"
#include "ytl/laurent.hpp"

namespace ytl {

// Dense univariate polynomial over the rationals, little-endian
// coefficients.  Only what the fraction field below needs.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }
    static Poly constant(const Rational& a) { return Poly({a}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coefficients() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator*=(const Rational& a);
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // Euclidean division: *this = q * divisor + r with deg r < deg divisor.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  private:
    std::vector<Rational> c_;
    void strip();
};

Poly poly_gcd(Poly a, Poly b);  // monic gcd, zero if both zero

// Field of rational functions p(u)/q(u), canonical form: gcd(p,q) = 1 and
// q monic.  Used as the coefficient field for symbolic rank computations.
class FunctionField {
  public:
    FunctionField() = default;
    FunctionField(int a) : num_(Poly::constant(a)), den_(Poly::constant(1)) {}
    FunctionField(const Rational& a)
        : num_(Poly::constant(a)), den_(Poly::constant(1)) {}
    FunctionField(Poly num, Poly den);
    static FunctionField from_laurent(const LaurentPoly& p);

    bool is_zero() const { return num_.is_zero(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    FunctionField operator+(const FunctionField& o) const;
    FunctionField operator-(const FunctionField& o) const;
    FunctionField operator*(const FunctionField& o) const;
    FunctionField operator/(const FunctionField& o) const;
    FunctionField operator-() const;
    FunctionField& operator+=(const FunctionField& o) { return *this = *this + o; }
    FunctionField& operator-=(const FunctionField& o) { return *this = *this - o; }
    FunctionField& operator*=(const FunctionField& o) { return *this = *this * o; }
    bool operator==(const FunctionField& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

  private:
    Poly num_ = Poly();             // zero
    Poly den_ = Poly::constant(1);
    void normalize();
};

}  // namespace ytl
