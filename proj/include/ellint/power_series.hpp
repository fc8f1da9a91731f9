#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "approx.hpp"
#include "rational.hpp"

namespace ellint::exact {

// Dense truncated power series over exact rationals. The formal variable is
// whatever the caller says it is (r^2 for the even expansions, r itself for
// the few odd ones); the series does not know and does not care.
class PowerSeries {
  public:
    PowerSeries() = default;
    explicit PowerSeries(std::size_t order) : c_(order + 1, Rational(0)) {}
    explicit PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.assign(1, Rational(0));
    }

    // Highest retained exponent.
    std::size_t order() const { return c_.size() - 1; }
    const Rational& operator[](std::size_t i) const { return c_.at(i); }
    Rational& operator[](std::size_t i) { return c_.at(i); }
    const std::vector<Rational>& coeffs() const { return c_; }

    PowerSeries truncated(std::size_t new_order) const {
        std::vector<Rational> out(c_.begin(),
                                  c_.begin() + std::min(c_.size(), new_order + 1));
        out.resize(new_order + 1, Rational(0));
        return PowerSeries(std::move(out));
    }

  private:
    std::vector<Rational> c_;
};

inline PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (std::size_t i = 0; i <= n; i++) out[i] = a[i] + b[i];
    return out;
}

inline PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (std::size_t i = 0; i <= n; i++) out[i] = a[i] - b[i];
    return out;
}

inline PowerSeries ps_scale(const PowerSeries& a, const Rational& s) {
    PowerSeries out(a.order());
    for (std::size_t i = 0; i <= a.order(); i++) out[i] = a[i] * s;
    return out;
}

// Cauchy product truncated to the shorter operand's order.
inline PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (std::size_t i = 0; i <= n; i++) {
        Rational acc(0);
        for (std::size_t k = 0; k <= i; k++) acc += a[k] * b[i - k];
        out[i] = acc;
    }
    return out;
}

// a/b with b(0) != 0. Leading zeros must be factored by the caller; that is a
// contract, not a convenience, because silently shifting exponents here would
// hide genuine cancellation bugs upstream.
inline PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b) {
    if (b[0] == 0)
        throw std::domain_error("ps_div: divisor has zero constant term; factor the variable first");
    std::size_t n = std::min(a.order(), b.order());
    PowerSeries q(n);
    for (std::size_t i = 0; i <= n; i++) {
        Rational acc = a[i];
        for (std::size_t k = 0; k < i; k++) acc -= q[k] * b[i - k];
        q[i] = acc / b[0];
    }
    return q;
}

// log(f) for f(0) = 1 via the quotient-free recurrence
//   n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}.
inline PowerSeries ps_log(const PowerSeries& f) {
    if (f[0] != 1) throw std::domain_error("ps_log needs unit constant term");
    std::size_t n = f.order();
    PowerSeries g(n);
    for (std::size_t i = 1; i <= n; i++) {
        Rational acc = Rational(static_cast<long>(i)) * f[i];
        for (std::size_t k = 1; k < i; k++)
            acc -= Rational(static_cast<long>(k)) * g[k] * f[i - k];
        g[i] = acc / Rational(static_cast<long>(i));
    }
    return g;
}

inline PowerSeries ps_derivative(const PowerSeries& a) {
    if (a.order() == 0) return PowerSeries(std::vector<Rational>{Rational(0)});
    PowerSeries out(a.order() - 1);
    for (std::size_t i = 1; i <= a.order(); i++)
        out[i - 1] = a[i] * Rational(static_cast<long>(i));
    return out;
}

// Antiderivative with zero constant term; gains one order.
inline PowerSeries ps_integrate(const PowerSeries& a) {
    PowerSeries out(a.order() + 1);
    for (std::size_t i = 0; i <= a.order(); i++)
        out[i + 1] = a[i] / Rational(static_cast<long>(i + 1));
    return out;
}

// Divide by the variable^k, asserting the dropped coefficients really vanish.
inline PowerSeries ps_shift_down(const PowerSeries& a, std::size_t k) {
    for (std::size_t i = 0; i < k && i <= a.order(); i++)
        if (a[i] != 0)
            throw std::domain_error("ps_shift_down: nonzero coefficient below the shift");
    if (a.order() < k) throw std::domain_error("ps_shift_down: shift exceeds order");
    std::vector<Rational> out(a.coeffs().begin() + k, a.coeffs().end());
    return PowerSeries(std::move(out));
}

inline PowerSeries ps_shift_up(const PowerSeries& a, std::size_t k) {
    std::vector<Rational> out(k, Rational(0));
    out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
    return PowerSeries(std::move(out));
}

// Exact Horner evaluation at a rational point.
inline Rational ps_eval_exact(const PowerSeries& a, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = a.order() + 1; i-- > 0;) acc = acc * x + a[i];
    return acc;
}

// Horner at a binary point, rounding once per step at prec+guard bits. The
// truncation charge assumes the dropped tail is dominated geometrically by
// the largest of the last three retained coefficients; that holds for every
// series built here (radius 1, eventually monotone coefficients) and is
// re-checked empirically by the dual-path tests.
inline EvalResult ps_eval(const PowerSeries& a, const Real& x, const PrecisionConfig& prec) {
    if (!(abs(x) < 1))
        throw std::domain_error("ps_eval outside |x| < 1");
    const long wp = prec.bits + 32;
    Real xs = x.rounded_to(wp);
    Real acc(wp);
    for (std::size_t i = a.order() + 1; i-- > 0;) {
        acc = acc * xs;
        mpfr_add_q(acc.raw(), acc.raw(), a[i].get_mpq_t(), MPFR_RNDN);
    }
    Rational cmax(0);
    for (std::size_t i = a.order(); i + 3 > a.order() && i > 0; i--) {
        Rational mag = abs(a[i]);
        if (mag > cmax) cmax = mag;
    }
    Real tail = to_real(cmax, wp) * pow(abs(xs), Real(wp, static_cast<long>(a.order() + 1))) /
                (1 - abs(xs));
    Real err = tail + Real(wp, 4 + static_cast<long>(a.order())) * acc.ulp();
    return finalize(acc, err, prec.bits, static_cast<long>(a.order() + 1));
}

}  // namespace ellint::exact
