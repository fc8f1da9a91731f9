#pragma once

#include <mpfr.h>

#include <stdexcept>

#include "approx.hpp"
#include "precision.hpp"
#include "rational.hpp"

namespace ellint {

// Gauss hypergeometric 2F1(a,b;c;x) on x in [0,1) by direct summation with an
// exact rational term ratio per step. Only parameter triples whose step ratio
// satisfies (a+n)(b+n) <= (c+n)(1+n) for all n >= 0 are accepted (equivalent
// to a+b <= c+1 and ab <= c for the triples used here); then every ratio is
// <= x and the tail after term t is bounded by |t| * x / (1 - x).
inline EvalResult hyp_series(const exact::Rational& a, const exact::Rational& b,
                             const exact::Rational& c, const Real& x,
                             const PrecisionConfig& prec) {
    using exact::Rational;
    if (x.sign() < 0 || !(x < 1)) throw std::domain_error("hyp_series needs 0 <= x < 1");
    if (!(a + b <= c + 1 && a * b <= c))
        throw std::invalid_argument("hyp_series parameters outside the supported envelope");

    const long wp = prec.bits + 32;
    Real xs = x.rounded_to(wp);
    Real sum(wp, 1);
    Real term(wp, 1);
    Real thr = Real::pow2(-(prec.bits + 8), wp);
    // 1/(1-x) for the geometric tail.
    Real inv1mx = 1 / (1 - xs);

    long n = 0;
    const long cap = prec.term_cap();
    while (true) {
        Rational q = (a + n) * (b + n) / ((c + n) * (n + 1));
        Real next = term * xs;
        mpfr_mul_q(next.raw(), next.raw(), q.get_mpq_t(), MPFR_RNDN);
        term = next;
        n++;
        if (n > cap)
            throw NonConvergent("hyp_series exceeded term cap at x = " + x.str_digits(8));
        Real tail = abs(term) * inv1mx;
        if (tail <= thr * abs(sum)) {
            sum = sum + term;  // keep the last computed term, bound the rest
            Real err = tail + Real(wp, 6 + n) * sum.ulp();
            return finalize(sum, err, prec.bits, n);
        }
        sum = sum + term;
    }
}

// Arithmetic-geometric mean of (a0, b0), both positive. Quadratic, so the
// iteration count is ~log2(bits); err_bound is the final gap plus ulp slack.
inline EvalResult agm(const Real& a0, const Real& b0, const PrecisionConfig& prec) {
    if (!(a0.sign() > 0) || !(b0.sign() > 0)) throw std::domain_error("agm needs positive inputs");
    const long wp = prec.bits + 32;
    Real a = a0.rounded_to(wp);
    Real b = b0.rounded_to(wp);
    Real thr = Real::pow2(-(prec.bits + 8), wp);
    long iters = 0;
    while (true) {
        Real gap = abs(a - b);
        if (gap <= thr * a || iters > 512) break;
        Real am = (a + b) / 2;
        b = sqrt(a * b);
        a = am;
        iters++;
    }
    // One last squeeze; a and b now agree to ~target precision.
    Real mid = (a + b) / 2;
    Real err = abs(a - b) + Real(wp, 8 + iters) * mid.ulp();
    return finalize(mid, err, prec.bits, iters);
}

}  // namespace ellint
