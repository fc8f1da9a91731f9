#pragma once

// Bound families around 2K/pi (and friends): evaluation of lower/target/upper
// triples, sharpness probes for the best-possible constants, the crossover
// radius where the two classical lower bounds trade places, and sign-change
// scans for the combinations that genuinely change sign.

#include <functional>
#include <string>
#include <vector>

#include "functions.hpp"

namespace ellint {

struct BoundEval {
    Approx lower, target, upper;
};

inline const std::vector<std::string>& bound_families() {
    static const std::vector<std::string> fams = {
        "AVV",    "AQ",     "KS",     "Ineq1",      "Ineq2",
        "KArth1", "KArth2", "KArth3", "Bound1OfK",  "EK_PQ",
        "F25",    "F24",    "Conj1",  "Conj2",
    };
    return fams;
}

namespace detail {

inline Approx ap_pow(const Approx& base, const Approx& e) { return pow(base, e); }

inline Approx atilde_approx(std::size_t n, long wb) {
    return Approx::exact(
        exact::to_real(exact::seq(exact::SequenceId::a_tilde, n), wb));
}

}  // namespace detail

// n is only read by KArth1 (truncation depth, 1..8).
inline BoundEval bound_eval(const std::string& family, const Modulus& m,
                            const PrecisionConfig& prec, long n = 1) {
    using detail::ap_pow;
    using exact::frac;
    const long wb = prec.bits + 16;
    const PrecisionConfig wp(wb, prec.escalation_factor, prec.max_terms);
    const Approx r = Approx::exact(m.r().rounded_to(wb));
    const Approx x = Approx::exact(m.x().rounded_to(wb));
    const Approx pi = detail::pi_approx(wb);
    const Approx T = detail::ap_f1v(m, wp);
    auto rat = [&](long a, long b) { return detail::frac_approx(a, b, wb); };

    if (family == "AVV") {
        const Approx f0 = detail::ap_f0v(m, wp);
        const Approx cand1 = sqrt(T);
        const Approx cand2 = 2 / pi * T;
        return {cand1.v > cand2.v ? cand1 : cand2, f0, T};
    }
    if (family == "AQ")
        return {ap_pow(T, rat(3, 4)), detail::ap_f0v(m, wp), T};
    if (family == "KS")
        return {ap_pow(T, rat(3, 4) + x * x / 200), detail::ap_f0v(m, wp),
                ap_pow(T, rat(3, 4) + x / 4)};
    if (family == "Ineq1")
        return {ap_pow(T, rat(3, 4) + x / 320), detail::ap_f0v(m, wp),
                ap_pow(T, rat(3, 4) + x / 4)};
    if (family == "Ineq2") {
        const Approx K = detail::ap_k(m, wp);
        const Approx body = ap_pow(T, rat(3, 4) + x / 4);
        return {ap_pow(pi / 2, 1 - x) * body, K, pi / 2 * body};
    }
    if (family == "KArth1") {
        if (n < 1 || n > 8)
            throw ParamOutOfRange("KArth1: n must lie in 1..8");
        const Approx f0 = detail::ap_f0v(m, wp);
        Approx S = Approx::exact(Real(wb, 0));
        Approx xs = x * x;  // x^2
        for (long k = 2; k <= n + 1; k++) {
            S = S + detail::atilde_approx(static_cast<std::size_t>(k), wb) * xs;
            xs = xs * x;
        }
        // xs = x^(n+2) now; x^(n+1) = xs/x
        const Approx xn1 = xs / x;
        const Approx base = rat(1, 4) + rat(3, 4) * T - S;
        const Approx at1 =
            detail::atilde_approx(static_cast<std::size_t>(n) + 1, wb);
        const Approx P1 = (3 * pi - 8) / (4 * pi) * T - at1;
        const Approx P2 = at1 * (T - 1);
        return {base - P1 * xn1, f0, base - P2 * xn1};
    }
    if (family == "KArth2") {
        const Approx f0 = detail::ap_f0v(m, wp);
        const Approx P3 = 1 - x / 12 - rat(91, 2880) * x * x;
        const Approx x3 = x * x * x;
        const Approx alpha = rat(2549, 2880) - 2 / pi;
        return {(P3 - alpha * x3) * T, f0, (P3 - rat(871, 48384) * x3) * T};
    }
    if (family == "KArth3") {
        const Approx f0 = detail::ap_f0v(m, wp);
        const Approx delta = 1 - 8 / (3 * pi);
        const Approx x2 = x * x;
        return {rat(1, 4) + rat(3, 4) * (1 - delta * x2) * T, f0,
                rat(1, 4) + rat(3, 4) * (1 - x2 / 80) * T};
    }
    if (family == "Bound1OfK") {
        const Approx f0 = detail::ap_f0v(m, wp);
        return {(1 - (1 - 2 / pi) * r) * T, f0, T};
    }
    if (family == "EK_PQ") {
        const Approx K = detail::ap_k(m, wp);
        const Approx E = detail::ap_e(m, wp);
        const Approx P = (1 - x) * (1 + x * (16 + 14 * x + 13 * x * x) / 32);
        const Approx Q = 1 - x / 2 - x * x / 16 - x * x * x / 32 -
                         rat(41, 2048) * x * x * x * x;
        return {P, E / K, Q};
    }
    if (family == "F25") {
        // target (K - E)/(r^2 K) = 1 - W/K with W = (E - r'^2 K)/r^2
        const Approx K = detail::ap_k(m, wp);
        const Approx W = detail::ap_w(m, wp);
        const Approx w = detail::ap_u(m, wp) / T;  // (r - r'^2 arth r)/(r^2 arth r)
        return {1 - w, 1 - W / K, 1 - rat(3, 4) * w};
    }
    if (family == "F24") {
        // target (E - r'^2 K) arth r / ((r - r'^2 arth r) K) = f25
        const Approx K = detail::ap_k(m, wp);
        const Approx u = detail::ap_u(m, wp);
        const Approx R = detail::ap_w(m, wp) * T / (u * K);
        const Approx log16 = Approx::exact(4 * Real::log2_const(wb));
        const Approx branch = 1 - log16 / (x * x * u * K);
        const Approx c140 = rat(1, 40);
        const Approx P4 = branch.v > c140.v ? branch : c140;
        return {rat(3, 4) + x / 4 * P4, R, rat(3, 4) + x / 4};
    }
    if (family == "Conj1") {
        const Approx f0 = detail::ap_f0v(m, wp);
        const Approx base = rat(3, 4) + x / 320;
        return {ap_pow(T, base + rat(517, 201600) * x * x), f0,
                ap_pow(T, base + rat(79, 320) * x * x)};
    }
    if (family == "Conj2") {
        const Approx f0 = detail::ap_f0v(m, wp);
        const Approx body = ap_pow(T, rat(3, 4) + x / 4);
        const Approx x2 = x * x;
        const Approx mu = exp(rat(-79, 960) * x2);  // (e^{-79/960})^{r^4}
        return {ap_pow(2 / pi, x2) * body, f0, mu * body};
    }
    throw UnknownFunction("bound family " + family);
}

// ---- sharpness ----

// A sharp constant, nudged by 1e-3 past its stated value, must produce a
// certified violation somewhere; "somewhere" is a dyadic sweep toward the
// endpoint where equality is attained. Constants attained at log/log-log
// speed stay out of reach of any practical precision, and those cases carry
// substitute evidence (the equivalent strict range + monotonicity claims).
struct SharpnessCase {
    std::string claim_id;
    std::string family;
    std::string side;  // "lower" or "upper"
    int end;           // 0: sweep r -> 0, 1: sweep r -> 1
    std::string substitutes;  // non-empty: expected unreachable, evidence names
    // positive certified value == hardened bound violated at m
    std::function<Approx(const Modulus&, const PrecisionConfig&)> violation;
};

inline std::vector<SharpnessCase> sharpness_cases() {
    using exact::frac;
    auto rat = [](long a, long b, long wb) { return detail::frac_approx(a, b, wb); };
    std::vector<SharpnessCase> cases;

    cases.push_back({"Th1.6.4-Ineq1-lower-sharp", "Ineq1", "lower", 0, "",
                     [rat](const Modulus& m, const PrecisionConfig& prec) {
                         const long wb = prec.bits + 16;
                         const PrecisionConfig wp(wb);
                         const Approx x = Approx::exact(m.x().rounded_to(wb));
                         const Approx T = detail::ap_f1v(m, wp);
                         const Approx e = rat(3, 4, wb) + (rat(1, 320, wb) + rat(1, 1000, wb)) * x;
                         return pow(T, e) - detail::ap_f0v(m, wp);
                     }});
    cases.push_back({"Th1.6.4-Ineq1-upper-sharp", "Ineq1", "upper", 1,
                     "f-range-hi=1/4, f-monotone",
                     [rat](const Modulus& m, const PrecisionConfig& prec) {
                         const long wb = prec.bits + 16;
                         const PrecisionConfig wp(wb);
                         const Approx x = Approx::exact(m.x().rounded_to(wb));
                         const Approx T = detail::ap_f1v(m, wp);
                         const Approx e = rat(3, 4, wb) + (rat(1, 4, wb) - rat(1, 1000, wb)) * x;
                         return detail::ap_f0v(m, wp) - pow(T, e);
                     }});
    cases.push_back({"Th1.7.4-KArth2-upper-sharp", "KArth2", "upper", 0, "",
                     [rat](const Modulus& m, const PrecisionConfig& prec) {
                         const long wb = prec.bits + 16;
                         const PrecisionConfig wp(wb);
                         const Approx x = Approx::exact(m.x().rounded_to(wb));
                         const Approx T = detail::ap_f1v(m, wp);
                         const Approx P3 = 1 - x / 12 - rat(91, 2880, wb) * x * x;
                         const Approx beta = rat(871, 48384, wb) + rat(1, 1000, wb);
                         return detail::ap_f0v(m, wp) - (P3 - beta * x * x * x) * T;
                     }});
    cases.push_back({"Th1.7.4-KArth2-lower-sharp", "KArth2", "lower", 1,
                     "h4-range-hi=2549pi/5760-1, h4-monotone",
                     [rat](const Modulus& m, const PrecisionConfig& prec) {
                         const long wb = prec.bits + 16;
                         const PrecisionConfig wp(wb);
                         const Approx x = Approx::exact(m.x().rounded_to(wb));
                         const Approx pi = detail::pi_approx(wb);
                         const Approx T = detail::ap_f1v(m, wp);
                         const Approx P3 = 1 - x / 12 - rat(91, 2880, wb) * x * x;
                         const Approx alpha =
                             rat(2549, 2880, wb) - 2 / pi - rat(1, 1000, wb);
                         return (P3 - alpha * x * x * x) * T - detail::ap_f0v(m, wp);
                     }});
    cases.push_back({"Th1.7.4-KArth3-lower-sharp", "KArth3", "lower", 1,
                     "h3-range-hi=3/4-2/pi (n=1), h3-monotone",
                     [rat](const Modulus& m, const PrecisionConfig& prec) {
                         const long wb = prec.bits + 16;
                         const PrecisionConfig wp(wb);
                         const Approx x = Approx::exact(m.x().rounded_to(wb));
                         const Approx pi = detail::pi_approx(wb);
                         const Approx T = detail::ap_f1v(m, wp);
                         const Approx delta =
                             1 - 8 / (3 * pi) - rat(1, 1000, wb);
                         return rat(1, 4, wb) + rat(3, 4, wb) * (1 - delta * x * x) * T -
                                detail::ap_f0v(m, wp);
                     }});
    cases.push_back({"Th1.7.4-KArth3-upper-sharp", "KArth3", "upper", 0, "",
                     [rat](const Modulus& m, const PrecisionConfig& prec) {
                         const long wb = prec.bits + 16;
                         const PrecisionConfig wp(wb);
                         const Approx x = Approx::exact(m.x().rounded_to(wb));
                         const Approx T = detail::ap_f1v(m, wp);
                         const Approx eta = rat(1, 80, wb) + rat(1, 1000, wb);
                         return detail::ap_f0v(m, wp) -
                                (rat(1, 4, wb) + rat(3, 4, wb) * (1 - eta * x * x) * T);
                     }});
    cases.push_back({"Th3.2.4-F24-lower-sharp", "F24", "lower", 0, "",
                     [rat](const Modulus& m, const PrecisionConfig& prec) {
                         const long wb = prec.bits + 16;
                         const PrecisionConfig wp(wb);
                         const Approx x = Approx::exact(m.x().rounded_to(wb));
                         const Approx R = detail::ap_w(m, wp) * detail::ap_f1v(m, wp) /
                                          (detail::ap_u(m, wp) * detail::ap_k(m, wp));
                         const Approx c = rat(1, 40, wb) + rat(1, 1000, wb);
                         return rat(3, 4, wb) + x / 4 * c - R;
                     }});
    cases.push_back({"Th3.2.4-F24-upper-sharp", "F24", "upper", 1,
                     "f24-range-hi=1, f24-monotone",
                     [rat](const Modulus& m, const PrecisionConfig& prec) {
                         const long wb = prec.bits + 16;
                         const PrecisionConfig wp(wb);
                         const Approx x = Approx::exact(m.x().rounded_to(wb));
                         const Approx R = detail::ap_w(m, wp) * detail::ap_f1v(m, wp) /
                                          (detail::ap_u(m, wp) * detail::ap_k(m, wp));
                         return R - (rat(3, 4, wb) + (rat(1, 4, wb) - rat(1, 1000, wb)) * x);
                     }});
    cases.push_back({"Col3.3-F25-upper-sharp", "F25", "upper", 0, "",
                     [rat](const Modulus& m, const PrecisionConfig& prec) {
                         const long wb = prec.bits + 16;
                         const PrecisionConfig wp(wb);
                         const Approx w =
                             detail::ap_u(m, wp) / detail::ap_f1v(m, wp);
                         const Approx WK =
                             detail::ap_w(m, wp) / detail::ap_k(m, wp);
                         return (rat(3, 4, wb) + rat(1, 1000, wb)) * w - WK;
                     }});
    cases.push_back({"Col3.3-F25-lower-sharp", "F25", "lower", 1,
                     "f25-range-hi=1, f25-monotone",
                     [rat](const Modulus& m, const PrecisionConfig& prec) {
                         const long wb = prec.bits + 16;
                         const PrecisionConfig wp(wb);
                         const Approx w =
                             detail::ap_u(m, wp) / detail::ap_f1v(m, wp);
                         const Approx WK =
                             detail::ap_w(m, wp) / detail::ap_k(m, wp);
                         return WK - (1 - rat(1, 1000, wb)) * w;
                     }});
    cases.push_back({"Th3.1-EK_PQ-upper-sharp", "EK_PQ", "upper", 0, "",
                     [rat](const Modulus& m, const PrecisionConfig& prec) {
                         const long wb = prec.bits + 16;
                         const PrecisionConfig wp(wb);
                         const Approx x = Approx::exact(m.x().rounded_to(wb));
                         const Approx EK = detail::ap_e(m, wp) / detail::ap_k(m, wp);
                         const Approx c = rat(41, 2048, wb) + rat(1, 1000, wb);
                         const Approx Q = 1 - x / 2 - x * x / 16 - x * x * x / 32 -
                                          c * x * x * x * x;
                         return EK - Q;
                     }});
    cases.push_back({"Th3.1-EK_PQ-lower-sharp", "EK_PQ", "lower", 1,
                     "f19-range-hi=13/32, f19-monotone",
                     [rat](const Modulus& m, const PrecisionConfig& prec) {
                         const long wb = prec.bits + 16;
                         const PrecisionConfig wp(wb);
                         const Approx x = Approx::exact(m.x().rounded_to(wb));
                         const Approx EK = detail::ap_e(m, wp) / detail::ap_k(m, wp);
                         const Approx c = rat(13, 32, wb) - rat(1, 1000, wb);
                         const Approx P = 1 - x / 2 - x * x / 16 - x * x * x / 32 -
                                          c * x * x * x * x;
                         return P - EK;
                     }});
    return cases;
}

struct SharpnessResult {
    bool found = false;
    Real witness_r;
    Real violation;  // certified positive amount at the witness
    long k_max;      // deepest dyadic level tried

    SharpnessResult() : witness_r(64), violation(64), k_max(0) {}
};

// Sweep r = 2^-k (end 0) or 1 - 2^-k (end 1), k = 2..bits/2, for a certified
// positive violation.
inline SharpnessResult sharpness_witness(const SharpnessCase& c,
                                         const PrecisionConfig& prec) {
    SharpnessResult res;
    res.k_max = prec.bits / 2;
    for (long k = 2; k <= res.k_max; k++) {
        const long wb = prec.bits + 32;
        Real t = Real::pow2(-k, wb);
        Real rv = c.end == 0 ? t : 1 - t;
        Modulus m(rv);
        Approx v = c.violation(m, prec);
        if (v.v - v.e > 0) {
            res.found = true;
            res.witness_r = rv;
            res.violation = v.v - v.e;
            return res;
        }
    }
    return res;
}

// ---- crossover radius (sec. 5(ii)) ----

// Solves (arth r)/r = (pi/2)^{320/79}: the radius where the Ineq1 lower bound
// and the (pi/2)^{r^2-adjusted} lower bound trade places.
struct Crossover {
    Real r0;
    Real residual;  // |T(r0) - (pi/2)^{320/79}|

    explicit Crossover(long prec) : r0(prec), residual(prec) {}
};

inline Crossover crossover_r0(const PrecisionConfig& prec) {
    const long wb = prec.bits + 32;
    const Real target = pow(Real::pi(wb) / 2, Real(wb, 320) / 79);
    auto Tval = [&](const Real& r) { return atanh(r) / r; };
    Real a = 1 - Real::pow2(-17, wb) * 2;  // ~1 - 1.5e-5, T below target
    Real b = 1 - Real::pow2(-21, wb);      // ~1 - 4.8e-7, T above target
    if (!(Tval(a) < target && target < Tval(b)))
        throw std::runtime_error("crossover bracket failed");
    for (long i = 0; i < prec.bits + 24 && (b - a) > Real::pow2(-(prec.bits + 20), wb); i++) {
        Real mid = (a + b) / 2;
        (Tval(mid) < target ? a : b) = mid;
    }
    Crossover out(prec.bits);
    Real mid = (a + b) / 2;
    out.r0 = mid.rounded_to(prec.bits);
    out.residual = abs(Tval(mid) - target).rounded_to(prec.bits);
    return out;
}

// ---- sign-change scans (sec. 5(v)) ----

struct SignScan {
    bool found = false;
    Real lo, hi;       // bracket with certified opposite signs
    int sign_lo = 0, sign_hi = 0;

    explicit SignScan(long prec) : lo(prec), hi(prec) {}
};

inline SignScan sign_change_scan(const std::string& name, long n_pts,
                                 const PrecisionConfig& prec) {
    SignScan out(prec.bits);
    const long wb = prec.bits + 16;
    auto sign_at = [&](const Real& r) -> int {
        EvalResult v = fn_eval(name, Modulus(r), prec);
        if (v.value - v.err_bound > 0) return +1;
        if (v.value + v.err_bound < 0) return -1;
        return 0;
    };
    Real lo = Real::from_decimal("0.01", wb);
    Real hi = Real::from_decimal("0.9999", wb);
    Real prev = lo;
    int prev_sign = sign_at(lo);
    for (long i = 1; i < n_pts; i++) {
        Real r = lo + (hi - lo) * i / (n_pts - 1);
        int s = sign_at(r);
        if (s != 0 && prev_sign != 0 && s != prev_sign) {
            // tighten the bracket
            Real a = prev, b = r;
            for (int it = 0; it < 48; it++) {
                Real mid = (a + b) / 2;
                int sm = sign_at(mid);
                if (sm == 0) break;
                (sm == prev_sign ? a : b) = mid;
            }
            out.found = true;
            out.lo = a.rounded_to(prec.bits);
            out.hi = b.rounded_to(prec.bits);
            out.sign_lo = prev_sign;
            out.sign_hi = s;
            return out;
        }
        if (s != 0) {
            prev = r;
            prev_sign = s;
        }
    }
    return out;
}

}  // namespace ellint
