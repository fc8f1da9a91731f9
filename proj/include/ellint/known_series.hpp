#pragma once

// Named exact expansions in x = r^2: the hypergeometric building blocks, the
// two log-expansions (derived twice, by independent routes), and the printed
// series that the derivation work re-creates from scratch.

#include <cstddef>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "power_series.hpp"
#include "sequences.hpp"

namespace ellint::exact {

// 2K/pi: coefficients a_n.
inline PowerSeries ps_F0(std::size_t N) {
    PowerSeries out(N);
    Rational a(1);
    for (std::size_t n = 0; n <= N; n++) {
        out[n] = a;
        const long m = static_cast<long>(n);
        const Rational step = frac(2 * m + 1, 2 * m + 2);
        a *= step * step;
    }
    return out;
}

// (arth r)/r: 1/(2n+1).
inline PowerSeries ps_F1(std::size_t N) {
    PowerSeries out(N);
    for (std::size_t n = 0; n <= N; n++)
        out[n] = frac(1, 2 * static_cast<long>(n) + 1);
    return out;
}

// 2E/pi: -a_n/(2n-1).
inline PowerSeries ps_E1(std::size_t N) {
    PowerSeries out(N);
    Rational a(1);
    for (std::size_t n = 0; n <= N; n++) {
        const long m = static_cast<long>(n);
        out[n] = -a / Rational(2 * m - 1);
        const Rational step = frac(2 * m + 1, 2 * m + 2);
        a *= step * step;
    }
    return out;
}

// F(1/2,1/2;2;x): a_n/(n+1).  Equals (2E/pi - (1-x) 2K/pi) * 2/x.
inline PowerSeries ps_G0(std::size_t N) {
    PowerSeries out(N);
    Rational a(1);
    for (std::size_t n = 0; n <= N; n++) {
        const long m = static_cast<long>(n);
        out[n] = a / Rational(m + 1);
        const Rational step = frac(2 * m + 1, 2 * m + 2);
        a *= step * step;
    }
    return out;
}

// F(1/2,1;5/2;x): 3/((2n+1)(2n+3)).
inline PowerSeries ps_G1(std::size_t N) {
    PowerSeries out(N);
    for (std::size_t n = 0; n <= N; n++) {
        const long m = static_cast<long>(n);
        out[n] = frac(3, (2 * m + 1) * (2 * m + 3));
    }
    return out;
}

// (r - r'^2 arth r)/r^3 as a series in x: 2/((2n+1)(2n+3)).
inline PowerSeries ps_arth_defect(std::size_t N) {
    PowerSeries out(N);
    for (std::size_t n = 0; n <= N; n++) {
        const long m = static_cast<long>(n);
        out[n] = frac(2, (2 * m + 1) * (2 * m + 3));
    }
    return out;
}

// ((arth r)/r - 1)/x: 1/(2n+3).
inline PowerSeries ps_arth_tail(std::size_t N) {
    PowerSeries out(N);
    for (std::size_t n = 0; n <= N; n++)
        out[n] = frac(1, 2 * static_cast<long>(n) + 3);
    return out;
}

// (1-x)^(-1/2): c_{n+1} = c_n (2n+1)/(2n+2).
inline PowerSeries ps_inv_sqrt1mx(std::size_t N) {
    PowerSeries out(N);
    Rational c(1);
    for (std::size_t n = 0; n <= N; n++) {
        out[n] = c;
        const long m = static_cast<long>(n);
        c *= frac(2 * m + 1, 2 * m + 2);
    }
    return out;
}

// (1-x)^(1/2): c_{n+1} = c_n (2n-1)/(2n+2).
inline PowerSeries ps_sqrt1mx(std::size_t N) {
    PowerSeries out(N);
    Rational c(1);
    for (std::size_t n = 0; n <= N; n++) {
        out[n] = c;
        const long m = static_cast<long>(n);
        c *= frac(2 * m - 1, 2 * m + 2);
    }
    return out;
}

// Independent log route: integrate u'/u term by term.  The production route
// is the quotient-free ps_log recurrence; tests demand both agree.
inline PowerSeries ps_log_via_derivative(const PowerSeries& u) {
    return ps_integrate(ps_div(ps_derivative(u), u));
}

enum class KnownSeries { F0, F1, logF0, logF1 };

inline PowerSeries ps_from_known(KnownSeries which, std::size_t N) {
    switch (which) {
        case KnownSeries::F0: return ps_F0(N);
        case KnownSeries::F1: return ps_F1(N);
        case KnownSeries::logF0: return ps_log(ps_F0(N));
        case KnownSeries::logF1: return ps_log(ps_F1(N));
    }
    throw std::invalid_argument("unknown series");
}

inline PowerSeries ps_from_known(const std::string& name, std::size_t N) {
    if (name == "F0") return ps_from_known(KnownSeries::F0, N);
    if (name == "F1") return ps_from_known(KnownSeries::F1, N);
    if (name == "logF0") return ps_from_known(KnownSeries::logF0, N);
    if (name == "logF1") return ps_from_known(KnownSeries::logF1, N);
    throw std::invalid_argument("unknown series: " + name);
}

// The printed expansions, re-derived from the defining algebra.  Every
// division by a power of x asserts that the dropped coefficients vanish
// exactly; a misprinted identity would trip that assertion, not round away.
inline PowerSeries paper_series(const std::string& name, std::size_t N) {
    const std::size_t M = N + 4;
    if (name == "f7") return ps_shift_down(ps_log(ps_F1(M)), 1).truncated(N);
    if (name == "h13") return ps_shift_down(ps_log(ps_F0(M)), 1).truncated(N);

    const PowerSeries logF0 = ps_log(ps_F0(M));
    const PowerSeries logF1 = ps_log(ps_F1(M));
    if (name == "G" || name == "f") {
        PowerSeries G = ps_div(ps_shift_down(logF0, 1), ps_shift_down(logF1, 1));
        if (name == "G") return G.truncated(N);
        G[0] -= frac(3, 4);
        return ps_shift_down(G, 1).truncated(N);
    }
    if (name == "h11") {
        const PowerSeries num = ps_sub(
            ps_add(ps_scale(logF1, frac(3, 4)),
                   ps_shift_up(ps_scale(logF1, frac(1, 4)), 1)),
            logF0);
        return ps_shift_down(num, 2).truncated(N);
    }
    if (name == "h12") {
        const PowerSeries num = ps_sub(
            ps_sub(logF0, ps_scale(logF1, frac(3, 4))),
            ps_shift_up(ps_scale(logF1, frac(1, 320)), 1).truncated(M));
        return ps_shift_down(num, 3).truncated(N);
    }
    throw std::invalid_argument("unknown paper series: " + name);
}

// sum b_n x^n; the eighth-power remainder of K carries a (pi/2) in front.
inline PowerSeries ps_b_terms(std::size_t N) {
    PowerSeries out(N);
    for (std::size_t n = 0; n <= N; n++) out[n] = seq(SequenceId::b, n);
    return out;
}

// sum atilde_{k+n+1} x^k (the depth-n remainder of (3/4)F1 - F0).
inline PowerSeries ps_h2_terms(long n, std::size_t N) {
    if (n < 1) throw std::invalid_argument("h2 series needs n >= 1");
    PowerSeries out(N);
    for (std::size_t k = 0; k <= N; k++)
        out[k] = seq(SequenceId::a_tilde, k + static_cast<std::size_t>(n) + 1);
    return out;
}

// sum (d_n/(2n+1)) x^n; h4 = (pi/5760) * this / F1.
inline PowerSeries ps_h4_terms(std::size_t N) {
    PowerSeries out(N);
    for (std::size_t n = 0; n <= N; n++)
        out[n] =
            seq(SequenceId::d, n) / Rational(2 * static_cast<long>(n) + 1);
    return out;
}

// Process-wide cache keyed by name; grows monotonically in order.  Series
// construction is O(N^2) rational work, far too slow to repeat per grid point.
inline PowerSeries cached_series(const std::string& key, std::size_t N,
                                 PowerSeries (*build)(const std::string&, std::size_t)) {
    static std::map<std::string, PowerSeries> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end() || it->second.order() < N) {
        it = cache.insert_or_assign(key, build(key, N)).first;
    }
    return it->second.truncated(N);
}

}  // namespace ellint::exact
