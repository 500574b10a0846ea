#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace ytl {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Integer binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// n! / (k_1! ... k_m!) for k_1 + ... + k_m = n
inline Integer multinomial(const std::vector<int>& ks) {
    int total = 0;
    Integer r = 1;
    for (int k : ks) {
        if (k < 0) throw std::invalid_argument("multinomial: negative part");
        total += k;
        r *= binomial(total, k);
    }
    return r;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace ytl
