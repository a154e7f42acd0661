#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace slicekit {

// All slice/cube values are exact rationals. mpq_class keeps them
// canonical (reduced, positive denominator) after every operation.
using Rat = mpq_class;
using Int = mpz_class;

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// mpq_class(num, den) does not reduce; this does.
inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Is r an integer multiple of 2^-l?
inline bool is_dyadic(const Rat& r, int l) {
    Rat scaled = r;
    for (int i = 0; i < l; ++i) scaled *= 2;
    return is_integer(scaled);
}

// Nearest multiple of 2^-l, ties to the even multiple.
Rat round_to_dyadic(const Rat& a, int l);

}  // namespace slicekit
