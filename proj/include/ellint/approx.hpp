#pragma once

#include <stdexcept>
#include <utility>

#include "real.hpp"

namespace ellint {

// A value plus a heuristic absolute error bound. Propagation is first order
// with a flat 4-ulp charge per operation; this is deliberately not a rigorous
// interval enclosure. The verifier compensates: any comparison whose gap is
// within the summed bounds is re-run at escalated precision, and escalated
// decisions are confirmed at twice that precision again.
struct Approx {
    Real v;
    Real e;

    // Exact inputs (grid points, rational constants rounded once) carry the
    // half-ulp representation slack only.
    static Approx exact(Real value) {
        Real err = value.ulp() / 2;
        return {std::move(value), std::move(err)};
    }
    static Approx with_err(Real value, Real err) { return {std::move(value), std::move(err)}; }

    long prec() const { return v.prec(); }
};

namespace detail {
inline Real op_slack(const Real& result) { return 4 * result.ulp(); }
}

inline Approx operator+(const Approx& a, const Approx& b) {
    Real v = a.v + b.v;
    Real e = a.e + b.e + detail::op_slack(v);
    return {std::move(v), std::move(e)};
}

inline Approx operator-(const Approx& a, const Approx& b) {
    Real v = a.v - b.v;
    Real e = a.e + b.e + detail::op_slack(v);
    return {std::move(v), std::move(e)};
}

inline Approx operator-(const Approx& a) { return {-a.v, a.e}; }

inline Approx operator*(const Approx& a, const Approx& b) {
    Real v = a.v * b.v;
    Real e = abs(a.v) * b.e + abs(b.v) * a.e + a.e * b.e + detail::op_slack(v);
    return {std::move(v), std::move(e)};
}

inline Approx operator/(const Approx& a, const Approx& b) {
    Real db = abs(b.v) - b.e;
    if (!(db.sign() > 0)) throw std::domain_error("division by value indistinguishable from 0");
    Real v = a.v / b.v;
    Real e = (a.e + abs(v) * b.e) / db + detail::op_slack(v);
    return {std::move(v), std::move(e)};
}

inline Approx operator+(const Approx& a, long b) { return {a.v + b, a.e + detail::op_slack(a.v + b)}; }
inline Approx operator+(long b, const Approx& a) { return a + b; }
inline Approx operator-(const Approx& a, long b) { return a + (-b); }
inline Approx operator-(long b, const Approx& a) { return {b - a.v, a.e + detail::op_slack(b - a.v)}; }
inline Approx operator*(const Approx& a, long b) {
    Real v = a.v * b;
    Real e = a.e * (b < 0 ? -b : b) + detail::op_slack(v);
    return {std::move(v), std::move(e)};
}
inline Approx operator*(long b, const Approx& a) { return a * b; }
inline Approx operator/(const Approx& a, long b) {
    if (b == 0) throw std::domain_error("division by zero");
    Real v = a.v / b;
    Real e = a.e / (b < 0 ? -b : b) + detail::op_slack(v);
    return {std::move(v), std::move(e)};
}
inline Approx operator/(long b, const Approx& a) {
    return Approx::with_err(Real(a.prec(), b), Real(a.prec(), 0)) / a;
}

inline Approx sqrt(const Approx& a) {
    if (a.v.sign() < 0) throw std::domain_error("sqrt of negative");
    Real v = sqrt(a.v);
    Real dv = v.is_zero() ? sqrt(a.e) : a.e / (2 * v);
    Real e = dv + detail::op_slack(v);
    return {std::move(v), std::move(e)};
}

inline Approx log(const Approx& a) {
    Real da = a.v - a.e;
    if (!(da.sign() > 0)) throw std::domain_error("log of value indistinguishable from 0");
    Real v = log(a.v);
    Real e = a.e / da + detail::op_slack(v);
    return {std::move(v), std::move(e)};
}

inline Approx exp(const Approx& a) {
    Real v = exp(a.v);
    // exp(v +- e) within exp(v)*(1 +- 2e) for e < 1/2; larger e is useless anyway.
    Real e = abs(v) * a.e * 2 + detail::op_slack(v);
    return {std::move(v), std::move(e)};
}

inline Approx atanh(const Approx& a) {
    Real margin = 1 - abs(a.v) - a.e;
    if (!(margin.sign() > 0)) throw std::domain_error("atanh argument too close to 1");
    Real v = atanh(a.v);
    Real deriv_den = (1 - a.v * a.v) - 2 * a.e;
    Real e = a.e / deriv_den + detail::op_slack(v);
    return {std::move(v), std::move(e)};
}

// a^b through exp(b log a); keeps the error budget explicit.
inline Approx pow(const Approx& a, const Approx& b) { return exp(b * log(a)); }

inline Approx abs_val(const Approx& a) { return {abs(a.v), a.e}; }

// Result of one certified operation: midpoint, heuristic error bound, and the
// work it took (series terms or AGM iterations).
struct EvalResult {
    Real value;
    Real err_bound;
    long terms_used = 0;

    Approx approx() const { return {value, err_bound}; }
};

inline EvalResult to_result(const Approx& a, long terms = 0) { return {a.v, a.e, terms}; }

// Round a finished quantity to the caller's precision and charge the final
// rounding (half an ulp of the rounded value) against the bound. Rounding the
// bound itself could shave up to half an ulp off it, repaid with one ulp of
// slack so the stored bound never understates the accumulated one. Callers
// that divide a result by a small quantity rely on this charge being present:
// the half-ulp is exactly the part an amplifying division magnifies.
inline EvalResult finalize(const Real& value, const Real& err, long bits, long terms = 0) {
    Real v = value.rounded_to(bits);
    Real e = (err + v.ulp() / 2).rounded_to(bits);
    e = e + e.ulp();
    return {std::move(v), std::move(e), terms};
}

inline EvalResult finalize(const Approx& a, long bits, long terms = 0) {
    return finalize(a.v, a.e, bits, terms);
}

}  // namespace ellint
