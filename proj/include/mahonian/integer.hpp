#pragma once

#include <gmpxx.h>

namespace mahonian {

// Arbitrary-precision integer used for all coefficients. Distribution
// counts reach n!-scale and identity checks multiply them together, so a
// fixed-width type would overflow silently.
using Int = mpz_class;

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace mahonian
