#pragma once

#include <map>
#include <string>

#include "ytl/integers.hpp"

namespace ytl {

// Laurent polynomial in one variable u with rational coefficients.
// Supports the ring operations; division only by monomials (u is a unit).
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(int c) { *this = LaurentPoly(Rational(c)); }
    LaurentPoly(const Rational& c) {
        if (c != 0) coeffs_[0] = c;
    }
    static LaurentPoly monomial(const Rational& c, int exp) {
        LaurentPoly p;
        if (c != 0) p.coeffs_[exp] = c;
        return p;
    }
    static LaurentPoly variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, Rational>& coefficients() const { return coeffs_; }
    int lowest_exponent() const;   // throws on zero
    int highest_exponent() const;  // throws on zero

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator*=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }

    Rational evaluate(const Rational& u0) const;  // u0 must be nonzero
    std::string to_string() const;                // e.g. "u^-1 - 1 + 2*u"

  private:
    std::map<int, Rational> coeffs_;  // exponent -> nonzero coefficient
    void strip();
};

}  // namespace ytl
