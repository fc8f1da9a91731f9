#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "real.hpp"

namespace ellint::exact {

// Exact rationals are gmp mpq under the hood; mpq_class already gives
// canonical form and operator coverage. Everything downstream serializes
// through to_frac_string so the wire format is always "num/den".
using Rational = mpq_class;

inline Rational frac(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational frac(const std::string& num, const std::string& den) {
    Rational q{mpz_class(num), mpz_class(den)};
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
}

// Always "num/den", including "3/1": keeps serialized coefficients uniform.
inline std::string to_frac_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_frac(const std::string& s) {
    auto slash = s.find('/');
    mpz_class num(slash == std::string::npos ? s : s.substr(0, slash));
    mpz_class den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Real to_real(const Rational& q, long prec) {
    Real r(prec);
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

inline Rational pow_int(Rational base, unsigned long e) {
    Rational acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace ellint::exact
