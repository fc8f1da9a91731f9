#pragma once

// Exact closed-form constants for range endpoints and thresholds: rational
// combinations over the basis {1, pi, 1/pi, log 2, log(pi/2), log2/pi}.
// Every endpoint stated by a registered claim is expressible here.

#include <array>
#include <sstream>
#include <string>

#include "rational.hpp"
#include "real.hpp"

namespace ellint {

class ConstExpr {
  public:
    ConstExpr() { c_.fill(exact::Rational(0)); }

    static ConstExpr rat(exact::Rational q) { return on(0, std::move(q)); }
    static ConstExpr pi(exact::Rational q) { return on(1, std::move(q)); }
    static ConstExpr inv_pi(exact::Rational q) { return on(2, std::move(q)); }
    static ConstExpr log2(exact::Rational q) { return on(3, std::move(q)); }
    static ConstExpr log_pi_half(exact::Rational q) { return on(4, std::move(q)); }
    static ConstExpr log2_over_pi(exact::Rational q) { return on(5, std::move(q)); }

    ConstExpr operator+(const ConstExpr& o) const {
        ConstExpr out;
        for (int i = 0; i < 6; i++) out.c_[i] = c_[i] + o.c_[i];
        return out;
    }
    ConstExpr operator-(const ConstExpr& o) const {
        ConstExpr out;
        for (int i = 0; i < 6; i++) out.c_[i] = c_[i] - o.c_[i];
        return out;
    }

    // Rounded basis combination; off by at most a few ulp, which the callers
    // absorb into their margin slack.
    Real eval(long prec) const {
        const long wp = prec + 16;
        const Real pi_v = Real::pi(wp);
        const Real l2 = Real::log2_const(wp);
        Real acc(wp);
        acc = add_term(acc, c_[0], Real(wp, 1));
        acc = add_term(acc, c_[1], pi_v);
        acc = add_term(acc, c_[2], 1 / pi_v);
        acc = add_term(acc, c_[3], l2);
        acc = add_term(acc, c_[4], log(pi_v / 2));
        acc = add_term(acc, c_[5], l2 / pi_v);
        return acc.rounded_to(prec);
    }

    std::string str() const {
        static const char* tag[6] = {"",     "*pi",        "/pi",
                                     "*log2", "*log(pi/2)", "*log2/pi"};
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i < 6; i++) {
            if (c_[i] == 0) continue;
            exact::Rational q = c_[i];
            if (!first) {
                os << (q > 0 ? " + " : " - ");
                if (q < 0) q = -q;
            }
            os << exact::to_frac_string(q) << tag[i];
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

  private:
    static ConstExpr on(int i, exact::Rational q) {
        ConstExpr e;
        e.c_[static_cast<std::size_t>(i)] = std::move(q);
        return e;
    }
    static Real add_term(const Real& acc, const exact::Rational& q, const Real& b) {
        if (q == 0) return acc;
        return acc + exact::to_real(q, b.prec()) * b;
    }

    std::array<exact::Rational, 6> c_;
};

}  // namespace ellint
