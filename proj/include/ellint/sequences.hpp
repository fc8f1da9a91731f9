#pragma once

// The integer sequences behind the series bounds: a_n = [(1/2)_n / n!]^2 and
// its derived families.  Everything here is exact rational arithmetic.

#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace ellint::exact {

enum class SequenceId { a, a_tilde, b, C, c, c_tilde, d };

inline const char* seq_name(SequenceId id) {
    switch (id) {
        case SequenceId::a: return "a";
        case SequenceId::a_tilde: return "a_tilde";
        case SequenceId::b: return "b";
        case SequenceId::C: return "C";
        case SequenceId::c: return "c";
        case SequenceId::c_tilde: return "c_tilde";
        case SequenceId::d: return "d";
    }
    return "?";
}

inline SequenceId parse_seq(const std::string& s) {
    if (s == "a") return SequenceId::a;
    if (s == "a_tilde") return SequenceId::a_tilde;
    if (s == "b") return SequenceId::b;
    if (s == "C") return SequenceId::C;
    if (s == "c") return SequenceId::c;
    if (s == "c_tilde") return SequenceId::c_tilde;
    if (s == "d") return SequenceId::d;
    throw std::invalid_argument("unknown sequence: " + s);
}

// a_{n+1} = a_n * ((2n+1)/(2n+2))^2, cached incrementally.  Returns a copy:
// the cache vector may reallocate under later growth.
inline Rational seq_a(std::size_t n) {
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) {
        const unsigned long k = cache.size() - 1;
        const Rational step = frac(static_cast<long>(2 * k + 1),
                                   static_cast<long>(2 * k + 2));
        cache.push_back(cache.back() * step * step);
    }
    return cache[n];
}

inline Rational seq(SequenceId id, std::size_t n) {
    const long m = static_cast<long>(n);
    switch (id) {
        case SequenceId::a:
            return seq_a(n);
        case SequenceId::a_tilde:
            // 3/(4(2n+1)) - a_n; note value -1/4 at n=0 and 0 at n=1
            return frac(3, 4 * (2 * m + 1)) - seq_a(n);
        case SequenceId::b:
            return frac(2 * m + 8, 2 * m + 7) * seq_a(n + 4) -
                   seq_a(n + 3) / 2 - seq_a(n + 2) / 16 - seq_a(n + 1) / 32;
        case SequenceId::C:
            return seq(SequenceId::b, n) / seq_a(n);
        case SequenceId::c:
            return Rational(2 * m + 3) * seq_a(n + 1);
        case SequenceId::c_tilde:
            return frac((22 * m + 83) * (2 * m + 9) * (2 * m + 7),
                        (m + 4) * (m + 4)) *
                   frac((2 * m + 5) * (2 * m + 3),
                        32276 * m * m + 123808 * m + 110907) *
                   seq_a(n + 3);
        case SequenceId::d:
            return Rational(2 * m + 1) *
                   (frac(10196 * m * m + 39096 * m + 34975,
                         (2 * m + 7) * (2 * m + 5) * (2 * m + 3)) -
                    Rational(2880) * seq_a(n + 3));
    }
    throw std::invalid_argument("unknown sequence id");
}

// Independent routes for the three sequences that admit one.  For b and C the
// definitional route goes through the four-term a-combination; the closed form
// below is the collapsed product.  For d the definitional route is the quoted
// quadratic-over-cubic form; the alternative comes from the partial-fraction
// shape of the series remainder it was extracted from.
inline Rational seq_closed_form(SequenceId id, std::size_t n) {
    const long m = static_cast<long>(n);
    switch (id) {
        case SequenceId::b:
            return frac((m + 2) * (m + 1), 16 * (m + 3) * (m + 4)) *
                   frac(26 * m * m + 116 * m + 123,
                        (2 * m + 3) * (2 * m + 3)) *
                   seq_a(n + 2);
        case SequenceId::C:
            return frac((2 * m + 1) * (2 * m + 1), 256 * (m + 1) * (m + 2)) *
                   frac(26 * m * m + 116 * m + 123, (m + 3) * (m + 4));
        case SequenceId::d:
            return Rational(2880 * (2 * m + 1)) *
                   (frac(1, 2 * m + 7) - frac(1, 12 * (2 * m + 5)) -
                    frac(91, 2880 * (2 * m + 3)) - seq_a(n + 3));
        default:
            throw std::invalid_argument(
                "no independent closed form for sequence " +
                std::string(seq_name(id)));
    }
}

inline bool seq_closed_form_check(SequenceId id, std::size_t n_max) {
    for (std::size_t n = 0; n <= n_max; ++n)
        if (seq(id, n) != seq_closed_form(id, n)) return false;
    return true;
}

}  // namespace ellint::exact
