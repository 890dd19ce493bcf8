#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace towercut {

// Arbitrary-precision signed integer.
using Int = mpz_class;

// Arbitrary-precision rational, kept canonical: denominator > 0,
// gcd(|num|, den) = 1, zero as 0/1. GMP arithmetic preserves canonical form
// as long as every value enters through make_rat (or an integer).
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned long exp) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
    return r;  // canonical since base was
}

// 2^bits as an Int.
inline Int pow2(unsigned long bits) {
    Int r = 1;
    r <<= bits;
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Int parse_int(const std::string& s) {
    Int n;
    if (mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not a decimal integer: " + s);
    return n;
}

}  // namespace towercut
