#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace unfriendly {

// Exact arbitrary-precision rational. All measures, potentials and
// inequality checks in this library go through this type; nothing is
// ever compared within a floating tolerance.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "a/b" or "a" (optional sign, lowest terms not required).
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

// Canonical lowest-terms string, "a/b" or "a" when b = 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

// q^e for nonnegative integer e.
inline Rational pow_rational(const Rational& q, unsigned long e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
    out.canonicalize();
    return out;
}

}  // namespace unfriendly
