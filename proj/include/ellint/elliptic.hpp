#pragma once

#include <utility>

#include "hyp.hpp"
#include "modulus.hpp"

namespace ellint {

namespace detail {

inline Approx pi_approx(long prec) {
    Real p = Real::pi(prec + 16);
    return Approx::with_err(p, p.ulp());
}

// Series/closed-form switch: the hypergeometric route is used for x = r^2 up
// to 1/2; past that the AGM (or a log form) takes over.
inline bool series_side(const Modulus& m) { return m.x() * 2 <= 1; }

}  // namespace detail

// arth(r)/r, the inverse-hyperbolic-tangent approximant everything else is
// compared against. mpfr's atanh is exact to ulp, so the budget is pure slack.
inline EvalResult arth_ratio(const Modulus& m, const PrecisionConfig& prec) {
    long wp = prec.bits + 16;
    Approx r = Approx::exact(m.r().rounded_to(wp));
    Approx v = atanh(r) / r;
    return finalize(v, prec.bits, 0);
}

// K(r): (pi/2) 2F1(1/2,1/2;1;r^2) on the series side, pi/(2 agm(1, r')) past it.
inline EvalResult ell_k(const Modulus& m, const PrecisionConfig& prec) {
    long wp = prec.bits + 16;
    PrecisionConfig wprec(wp, prec.escalation_factor, prec.max_terms);
    Approx pi = detail::pi_approx(wp);
    if (detail::series_side(m)) {
        EvalResult h = hyp_series(exact::frac(1, 2), exact::frac(1, 2), exact::Rational(1),
                                  m.x().rounded_to(wp), wprec);
        Approx v = pi / 2 * h.approx();
        return finalize(v, prec.bits, h.terms_used);
    }
    EvalResult g = agm(Real(wp, 1), m.rp().rounded_to(wp), wprec);
    Approx v = pi / (2 * g.approx());
    return finalize(v, prec.bits, g.terms_used);
}

// E(r): series (pi/2) 2F1(-1/2,1/2;1;r^2), or the Legendre AGM relation
// E = K (1 - sum 2^(n-1) c_n^2) with c_0 = r, c_{n+1} = (a_n - b_n)/2.
inline EvalResult ell_e(const Modulus& m, const PrecisionConfig& prec) {
    long wp = prec.bits + 16;
    PrecisionConfig wprec(wp, prec.escalation_factor, prec.max_terms);
    Approx pi = detail::pi_approx(wp);
    if (detail::series_side(m)) {
        EvalResult h = hyp_series(exact::frac(-1, 2), exact::frac(1, 2), exact::Rational(1),
                                  m.x().rounded_to(wp), wprec);
        Approx v = pi / 2 * h.approx();
        return finalize(v, prec.bits, h.terms_used);
    }
    Real a(wp, 1);
    Real b = m.rp().rounded_to(wp);
    Real csum = m.x().rounded_to(wp) / 2;  // 2^(-1) c_0^2 with c_0 = r
    Real thr = Real::pow2(-(prec.bits + 8), wp);
    Real weight(wp, 1);  // 2^(n-1) at n = 1
    long iters = 0;
    while (true) {
        Real c = (a - b) / 2;
        if (abs(c) <= thr || iters > 512) break;
        csum = csum + weight * c * c;
        Real am = (a + b) / 2;
        b = sqrt(a * b);
        a = am;
        weight = weight * 2;
        iters++;
    }
    Real agm_gap = abs(a - b);
    Approx g = Approx::with_err((a + b) / 2, agm_gap + Real(wp, 8 + iters) * a.ulp());
    Approx s = Approx::with_err(csum, weight * agm_gap * agm_gap + Real(wp, 8 + iters) * csum.ulp());
    Approx v = pi / (2 * g) * (1 - s);
    return finalize(v, prec.bits, iters);
}

// (E - r'^2 K)/r^2. The subtraction cancels ~r^2, so on the series side the
// cancellation-free form (pi/4) 2F1(1/2,1/2;2;r^2) is used instead.
inline EvalResult e_minus_rp2k_over_r2(const Modulus& m, const PrecisionConfig& prec) {
    long wp = prec.bits + 16;
    PrecisionConfig wprec(wp, prec.escalation_factor, prec.max_terms);
    if (detail::series_side(m)) {
        EvalResult h = hyp_series(exact::frac(1, 2), exact::frac(1, 2), exact::Rational(2),
                                  m.x().rounded_to(wp), wprec);
        Approx v = detail::pi_approx(wp) / 4 * h.approx();
        return finalize(v, prec.bits, h.terms_used);
    }
    EvalResult e = ell_e(m, wprec);
    EvalResult k = ell_k(m, wprec);
    Approx x = Approx::exact(m.x().rounded_to(wp));
    Approx rp2 = 1 - x;
    Approx v = (e.approx() - rp2 * k.approx()) / x;
    return finalize(v, prec.bits, e.terms_used + k.terms_used);
}

// dK/dr = (E - r'^2 K)/(r r'^2), computed through the cancellation-free form.
inline EvalResult dk_dr(const Modulus& m, const PrecisionConfig& prec) {
    long wp = prec.bits + 16;
    PrecisionConfig wprec(wp, prec.escalation_factor, prec.max_terms);
    EvalResult w = e_minus_rp2k_over_r2(m, wprec);
    Approx r = Approx::exact(m.r().rounded_to(wp));
    Approx rp2 = 1 - r * r;
    Approx v = r * w.approx() / rp2;
    return finalize(v, prec.bits, w.terms_used);
}

// dE/dr = (E - K)/r. On the series side E - K is summed as its own series,
// -(pi/2) sum_{n>=1} (2n/(2n-1)) a_n x^n, to dodge the small-r cancellation;
// the step ratio is (4n^2-1)/(4n^2+4n) * ((2n+1)/(2n+2))^2 * x < x.
inline EvalResult de_dr(const Modulus& m, const PrecisionConfig& prec) {
    using exact::Rational;
    long wp = prec.bits + 16;
    PrecisionConfig wprec(wp, prec.escalation_factor, prec.max_terms);
    Approx pi = detail::pi_approx(wp);
    Approx r = Approx::exact(m.r().rounded_to(wp));
    if (detail::series_side(m)) {
        Real xs = m.x().rounded_to(wp);
        Real term = xs / 2;  // n=1: (2/1) a_1 x = x/2
        Real sum = term;
        Real thr = Real::pow2(-(prec.bits + 8), wp);
        Real inv1mx = 1 / (1 - xs);
        long n = 1;
        const long cap = wprec.term_cap();
        while (true) {
            Rational q = Rational(n + 1) * Rational(2 * n - 1) * Rational(2 * n + 1) /
                         (Rational(n) * Rational(2 * n + 2) * Rational(2 * n + 2));
            Real next = term * xs;
            mpfr_mul_q(next.raw(), next.raw(), q.get_mpq_t(), MPFR_RNDN);
            term = next;
            n++;
            if (n > cap) throw NonConvergent("dE/dr series exceeded term cap");
            sum = sum + term;
            Real tail = abs(term) * xs * inv1mx;
            if (tail <= thr * abs(sum)) {
                Approx s = Approx::with_err(sum, tail + Real(wp, 6 + n) * sum.ulp());
                Approx v = -(pi / 2) * s / r;
                return finalize(v, prec.bits, n);
            }
        }
    }
    EvalResult e = ell_e(m, wprec);
    EvalResult k = ell_k(m, wprec);
    Approx v = (e.approx() - k.approx()) / r;
    return finalize(v, prec.bits, e.terms_used + k.terms_used);
}

// The two auxiliary hypergeometrics G0 = 2F1(1/2,1/2;2;x), G1 = 2F1(1/2,1;5/2;x)
// by direct summation. Near x = 1 this throws NonConvergent once the term cap
// is hit; closed forms through K/E/arth exist and live with the callers that
// need that corner.
inline std::pair<EvalResult, EvalResult> g0_g1(const Real& x, const PrecisionConfig& prec) {
    EvalResult g0 = hyp_series(exact::frac(1, 2), exact::frac(1, 2), exact::Rational(2), x, prec);
    EvalResult g1 = hyp_series(exact::frac(1, 2), exact::Rational(1), exact::frac(5, 2), x, prec);
    return {std::move(g0), std::move(g1)};
}

}  // namespace ellint
