#pragma once

// Registry of the named combinations of K, E and arth under study: direct
// evaluators, cancellation-free series evaluators below a per-function switch
// radius, and machine-readable claim metadata keyed by statement.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "const_expr.hpp"
#include "elliptic.hpp"
#include "known_series.hpp"

namespace ellint {

struct UnknownFunction : std::invalid_argument {
    explicit UnknownFunction(const std::string& n)
        : std::invalid_argument("unknown function: " + n) {}
};
struct ParamRequired : std::invalid_argument {
    explicit ParamRequired(const std::string& n)
        : std::invalid_argument("function needs a parameter: " + n) {}
};
struct ParamOutOfRange : std::invalid_argument {
    explicit ParamOutOfRange(const std::string& w) : std::invalid_argument(w) {}
};

enum class Monotone { none, increasing, decreasing };
enum class Convexity { none, convex, concave };

struct ClaimSet {
    Monotone monotone = Monotone::none;
    Convexity convexity = Convexity::none;
    std::optional<ConstExpr> range_lo, range_hi;
    // (+1, t): function > t everywhere; (-1, t): function < t everywhere
    std::optional<std::pair<int, ConstExpr>> strict_sign;
    bool abs_monotone = false;
};

// Parameter: the constant c for g (any positive rational), the integer n for
// h2/h3 (1..8, carried as a rational with unit denominator).
using FnParam = std::optional<exact::Rational>;

struct FunctionInfo {
    std::string name;
    std::string source;  // statement tag
    bool needs_param = false;
    bool has_series = true;
    exact::Rational switch_r = exact::frac(3, 10);
};

namespace detail {

inline long h_param(const std::string& name, const FnParam& param) {
    if (!param) throw ParamRequired(name);
    if (param->get_den() != 1)
        throw ParamOutOfRange(name + ": n must be an integer");
    const long n = static_cast<long>(param->get_num().get_si());
    // n = 0 is excluded by the statement itself: atilde_1 = 0 would void the
    // positivity the whole construction rests on.
    if (n < 1 || n > 8) throw ParamOutOfRange(name + ": n must lie in 1..8");
    return n;
}

inline exact::Rational g_param(const FnParam& param) {
    if (!param) throw ParamRequired("g");
    if (!(*param > 0)) throw ParamOutOfRange("g: c must be positive");
    return *param;
}

// Series order for the registry expansions; sized for the worst argument
// x = 0.09 at the default switch radius.  ps_eval charges the true tail, so
// an undersized order degrades the error bound rather than the honesty.
inline std::size_t reg_order(long bits) {
    const std::size_t n = static_cast<std::size_t>((bits + 24) / 3.4) + 8;
    return ((n + 31) / 32) * 32;
}

inline exact::PowerSeries ps_const(const exact::Rational& q, std::size_t N) {
    exact::PowerSeries p(N);
    p[0] = q;
    return p;
}

inline exact::PowerSeries ps_poly(const std::vector<exact::Rational>& cs,
                                  std::size_t N) {
    exact::PowerSeries p(N);
    for (std::size_t i = 0; i < cs.size() && i <= N; i++) p[i] = cs[i];
    return p;
}

// All registry expansions by key; the handful with parameters encode them in
// the key ("h2:3", "g:1/4").
inline exact::PowerSeries build_registry_series(const std::string& key,
                                                std::size_t N) {
    using namespace exact;
    const std::size_t M = N + 6;
    const Rational one(1);

    if (key == "f7" || key == "h13" || key == "G" || key == "f" ||
        key == "h11" || key == "h12")
        return paper_series(key, N);

    if (key == "f1") return ps_arth_defect(N);
    if (key == "f2") {
        const PowerSeries F1 = ps_F1(M);
        const PowerSeries den =
            ps_sub(F1, ps_shift_up(F1, 1).truncated(M));  // (1-x) F1
        return ps_div(ps_arth_defect(M), den).truncated(N);
    }
    if (key == "f3") {
        const PowerSeries F1 = ps_F1(M);
        PowerSeries num = ps_add(F1, ps_shift_up(F1, 1).truncated(M));
        num[0] -= one;  // (1+x)F1 - 1 = x v(x)
        return ps_div(ps_arth_defect(M), ps_shift_down(num, 1)).truncated(N);
    }
    if (key == "f4") {
        const PowerSeries F1 = ps_F1(M);
        PowerSeries num = ps_add(F1, ps_shift_up(F1, 1).truncated(M));
        num[0] -= one;
        return ps_div(ps_shift_down(num, 1), ps_F0(M)).truncated(N);
    }
    if (key == "f5") {
        const PowerSeries F1 = ps_F1(M);
        const PowerSeries w =
            ps_sub(F1, ps_shift_up(F1, 1).truncated(M));  // (1-x)F1
        return ps_mul(ps_add(ps_const(one, M), w), ps_inv_sqrt1mx(M))
            .truncated(N);
    }
    if (key == "f6") {
        const PowerSeries F1 = ps_F1(M);
        const PowerSeries num =
            ps_sub(ps_inv_sqrt1mx(M), ps_mul(ps_sqrt1mx(M), F1));
        return ps_div(ps_shift_down(num, 1), ps_arth_tail(M - 1)).truncated(N);
    }
    if (key == "f8") {
        const PowerSeries F1 = ps_F1(M);
        const PowerSeries w = ps_sub(F1, ps_shift_up(F1, 1).truncated(M));
        return ps_div(ps_mul(w, paper_series("f7", M)), ps_arth_defect(M))
            .truncated(N);
    }
    if (key == "f9") {
        const PowerSeries F0 = ps_F0(M);
        const PowerSeries w = ps_sub(F0, ps_shift_up(F0, 1).truncated(M));
        return ps_div(ps_scale(ps_mul(w, paper_series("h13", M)), Rational(2)),
                      ps_G0(M))
            .truncated(N);
    }
    if (key == "f10") {
        const PowerSeries poly =
            ps_poly({Rational(72), Rational(-150), Rational(-253),
                     Rational(167)},
                    M);
        const PowerSeries num =
            ps_sub(ps_poly({Rational(72), Rational(-126), Rational(19)}, M),
                   ps_mul(poly, ps_F1(M)));
        return ps_shift_down(num, 2).truncated(N);
    }
    if (key == "f11") {
        const PowerSeries num =
            ps_sub(ps_mul(ps_poly({Rational(13), Rational(-9)}, M), ps_F1(M)),
                   ps_poly({Rational(13), Rational(-6)}, M));
        return ps_shift_down(num, 1).truncated(N);
    }
    if (key == "f12") {
        const PowerSeries num =
            ps_sub(ps_mul(ps_poly({Rational(1), Rational(-5)}, M), ps_F1(M)),
                   ps_poly({Rational(1), Rational(-2)}, M));
        return ps_shift_down(num, 1).truncated(N);
    }
    if (key == "f13") {
        const PowerSeries num = ps_sub(
            ps_mul(ps_poly({Rational(15), Rational(-12), Rational(1)}, M),
                   ps_F1(M)),
            ps_poly({Rational(15), Rational(-7)}, M));
        return ps_shift_down(num, 3).truncated(N);
    }
    if (key == "f14") {
        const PowerSeries num = ps_sub(
            ps_poly({Rational(3), Rational(-3)}, M),
            ps_mul(ps_poly({Rational(3), Rational(-4), Rational(-1)}, M),
                   ps_F1(M)));
        return ps_shift_down(num, 2).truncated(N);
    }
    if (key == "f18") return ps_b_terms(N);
    if (key == "f19") return ps_div(ps_b_terms(M), ps_F0(M)).truncated(N);
    if (key == "f20") {
        const PowerSeries s = ps_sub(
            ps_mul(ps_mul(ps_poly({Rational(3), Rational(1)}, M),
                          ps_arth_defect(M)),
                   ps_F0(M)),
            ps_scale(ps_mul(ps_G0(M), ps_F1(M)), Rational(2)));
        return ps_shift_down(ps_scale(s, frac(1, 4)), 1).truncated(N);
    }
    if (key == "f21") {
        const PowerSeries s = ps_sub(
            ps_mul(ps_G0(M), ps_F1(M)),
            ps_mul(ps_mul(ps_poly({frac(3, 2), frac(1, 80)}, M),
                          ps_arth_defect(M)),
                   ps_F0(M)));
        return ps_shift_down(ps_scale(s, frac(1, 2)), 1).truncated(N);
    }
    if (key == "f22") {
        const PowerSeries F0 = ps_F0(M);
        const PowerSeries q = ps_arth_tail(M);
        const PowerSeries s = ps_sub(
            ps_mul(ps_arth_defect(M), ps_E1(M)),
            ps_scale(ps_mul(ps_sub(F0, ps_shift_up(F0, 1).truncated(M)), q),
                     Rational(2)));
        return ps_shift_down(s, 1).truncated(N);
    }
    if (key == "f23") {
        const PowerSeries F1 = ps_F1(M);
        const PowerSeries w = ps_sub(F1, ps_shift_up(F1, 1).truncated(M));
        return ps_add(ps_scale(ps_mul(w, ps_F0(M)), Rational(2)),
                      ps_mul(ps_arth_defect(M), ps_E1(M)))
            .truncated(N);
    }
    if (key == "f24") {
        const PowerSeries uF0 = ps_mul(ps_arth_defect(M), ps_F0(M));
        const PowerSeries num =
            ps_sub(ps_scale(ps_mul(ps_G0(M), ps_F1(M)), Rational(2)),
                   ps_scale(uF0, Rational(3)));
        return ps_div(ps_shift_down(num, 1), uF0).truncated(N);
    }
    if (key == "g2")
        return ps_div(paper_series("h11", M), paper_series("f7", M))
            .truncated(N);
    if (key == "g3")
        return ps_div(ps_shift_up(paper_series("h12", M), 1).truncated(M),
                      paper_series("f7", M))
            .truncated(N);
    if (key == "h1") return ps_div(ps_F0(M), ps_F1(M)).truncated(N);
    if (key == "h4") return ps_div(ps_h4_terms(M), ps_F1(M)).truncated(N);
    if (key == "h9S1") {
        const PowerSeries num = ps_sub(
            ps_mul(ps_poly({frac(1, 4), frac(-1, 12), frac(2069, 2880),
                            frac(-2549, 2880)},
                           M),
                   ps_F1(M)),
            ps_const(frac(1, 4), M));
        return ps_shift_down(num, 2).truncated(N);
    }
    if (key == "h9S2") {
        const PowerSeries F1 = ps_F1(M);
        return ps_sub(F1, ps_shift_up(F1, 1).truncated(M)).truncated(N);
    }
    if (key == "h10") {
        const PowerSeries F1 = ps_F1(M);
        PowerSeries a = ps_scale(F1, frac(1, 4));
        a[0] -= frac(1, 4);
        const PowerSeries b = ps_shift_up(
            ps_mul(ps_poly({frac(1, 12), frac(1, 45), frac(871, 48384)}, M),
                   F1),
            1);
        return ps_shift_down(ps_sub(a, b.truncated(M)), 3).truncated(N);
    }
    if (key.rfind("h2:", 0) == 0)
        return ps_h2_terms(std::stol(key.substr(3)), N);
    if (key.rfind("h3:", 0) == 0)
        return ps_div(ps_h2_terms(std::stol(key.substr(3)), M), ps_F1(M))
            .truncated(N);
    if (key.rfind("g:", 0) == 0) {
        const Rational c = parse_frac(key.substr(2));
        const PowerSeries f7 = paper_series("f7", M);
        const PowerSeries s =
            ps_sub(ps_add(ps_scale(f7, frac(3, 4)),
                          ps_shift_up(ps_scale(f7, c), 1).truncated(M)),
                   paper_series("h13", M));
        return s.truncated(N);  // g = x * eval
    }
    throw UnknownFunction(key);
}

inline exact::PowerSeries reg_series(const std::string& key, std::size_t N) {
    return exact::cached_series(key, N, &build_registry_series);
}

// ---- shared sub-evaluations (Approx, at widened precision) ----

inline Approx ap_arth(const Modulus& m, long wp) {
    return atanh(Approx::exact(m.r().rounded_to(wp)));
}

inline Approx ap_k(const Modulus& m, const PrecisionConfig& wp) {
    return ell_k(m, wp).approx();
}

inline Approx ap_e(const Modulus& m, const PrecisionConfig& wp) {
    return ell_e(m, wp).approx();
}

// W = (E - r'^2 K)/r^2, cancellation-free.
inline Approx ap_w(const Modulus& m, const PrecisionConfig& wp) {
    return e_minus_rp2k_over_r2(m, wp).approx();
}

inline Approx ap_f1v(const Modulus& m, const PrecisionConfig& wp) {
    return arth_ratio(m, wp).approx();
}

inline Approx ap_f0v(const Modulus& m, const PrecisionConfig& wp) {
    return ap_k(m, wp) * 2 / pi_approx(wp.bits);
}

// u = (r - r'^2 arth r)/r^3 with its own series/direct switch.
inline Approx ap_u(const Modulus& m, const PrecisionConfig& wp) {
    if (m.x() * 5 < 1) {
        return exact::ps_eval(reg_series("f1", reg_order(wp.bits)),
                              m.x().rounded_to(wp.bits), wp)
            .approx();
    }
    Approx r = Approx::exact(m.r().rounded_to(wp.bits + 16));
    Approx rp2 = 1 - r * r;
    return (r - rp2 * atanh(r)) / (r * r * r);
}

inline EvalResult finish(const Approx& a, const PrecisionConfig& prec,
                         long terms = 0) {
    return finalize(a, prec.bits, terms);
}

inline Approx frac_approx(long n, long d, long wb) {
    return Approx::exact(exact::to_real(exact::frac(n, d), wb));
}

}  // namespace detail

// ---- registry table ----

inline const std::vector<FunctionInfo>& list_functions() {
    using exact::frac;
    static const std::vector<FunctionInfo> table = [] {
        std::vector<FunctionInfo> t;
        auto add = [&t](std::string name, std::string source,
                        bool needs_param = false, bool has_series = true,
                        exact::Rational sw = frac(3, 10)) {
            t.push_back({std::move(name), std::move(source), needs_param,
                         has_series, std::move(sw)});
        };
        add("f1", "Lemma 2.1(1)");
        add("f2", "Lemma 2.1(2)");
        add("f3", "Lemma 2.1(3)");
        add("f4", "Lemma 2.1(4)");
        add("f5", "Lemma 2.1(5)");
        add("f6", "Lemma 2.1(6)");
        add("f7", "Lemma 2.1(7)");
        add("f8", "Lemma 2.1(8)");
        add("f9", "Lemma 2.1(8)");
        add("f10", "Lemma 2.1(9)");
        add("f11", "Lemma 2.1(9)");
        add("f12", "Lemma 2.1(9)");
        add("f13", "Lemma 2.1(10)");
        add("f14", "Lemma 2.1(10)");
        add("f15", "Lemma 2.2(1)", false, true, frac(1, 2));
        add("f16", "Lemma 2.2(2)", false, true, frac(1, 2));
        add("f17", "Lemma 2.2(3)", false, true, frac(1, 2));
        add("f18", "Lemma 2.3");
        add("f19", "Theorem 3.1");
        add("f20", "Theorem 3.2(1)");
        add("f21", "Theorem 3.2(1)");
        add("f22", "Theorem 3.2(2)");
        add("f23", "Theorem 3.2(3)");
        add("f24", "Theorem 3.2(4)");
        add("f25", "Corollary 3.3");
        add("g", "Theorem 1.5", true);
        add("g1", "Theorem 1.6(1)");
        add("g2", "Theorem 1.6(1)");
        add("g3", "Theorem 1.6(2)");
        add("g4", "Theorem 1.6(2)");
        add("f", "Theorem 1.6(3)");
        add("G", "Theorem 1.6(3)");
        add("h1", "Theorem 1.7(1)");
        add("h2", "Theorem 1.7(2)", true);
        add("h3", "Theorem 1.7(3)", true);
        add("h4", "Theorem 1.7(4)");
        add("h5", "Sec. 5(ii)", false, false);
        add("h6", "Sec. 5(iii)");
        add("h7", "Sec. 5(iii)", false, false);
        add("h8", "Sec. 5(iii)", false, false);
        add("h9", "Sec. 5(v)");
        add("h10", "Sec. 5(v)");
        add("h11", "Sec. 5(vi)");
        add("h12", "Sec. 5(vi)");
        add("h13", "Conjecture 5.1(3)");
        return t;
    }();
    return table;
}

inline const FunctionInfo& fn_info(const std::string& name) {
    for (const auto& e : list_functions())
        if (e.name == name) return e;
    throw UnknownFunction(name);
}

// ---- evaluation ----

namespace detail {

inline EvalResult series_value(const std::string& name, const Modulus& m,
                               const PrecisionConfig& prec,
                               const FnParam& param) {
    using exact::frac;
    using exact::ps_eval;
    const long wb = prec.bits + 16;
    const PrecisionConfig wp(wb, prec.escalation_factor, prec.max_terms);
    const std::size_t N = reg_order(wb);
    const Real x = m.x().rounded_to(wb);
    const Approx xa = Approx::exact(x);
    const Approx pi = pi_approx(wb);
    long used = 0;
    auto ev = [&](const std::string& key) {
        EvalResult r = ps_eval(reg_series(key, N), x, wp);
        used = std::max(used, r.terms_used);
        return r.approx();
    };
    auto fin = [&](const Approx& a) { return finish(a, prec, used); };

    if (name == "f15" || name == "f16" || name == "f17") {
        // argument is the function's own variable, not r^2
        const Real xin = m.r().rounded_to(wb);
        const EvalResult F0r = hyp_series(frac(1, 2), frac(1, 2), exact::Rational(1), xin, wp);
        const EvalResult F1r = hyp_series(frac(1, 2), exact::Rational(1), frac(3, 2), xin, wp);
        used = std::max({used, F0r.terms_used, F1r.terms_used});
        const Approx F0 = F0r.approx();
        const Approx F1 = F1r.approx();
        if (name == "f15") return fin(F1 / F0);
        auto [g0, g1] = g0_g1(xin, wp);
        used = std::max({used, g0.terms_used, g1.terms_used});
        if (name == "f16") return fin(g1.approx() / g0.approx());
        return fin(F0 - F1 * g0.approx() * 3 / (4 * g1.approx()));
    }

    if (name == "f4") return fin(ev("f4") * 2 / pi);
    if (name == "f18") return fin(pi / 2 * ev("f18"));
    if (name == "f20" || name == "f21") {
        const Approx r3 = Approx::exact(m.r().rounded_to(wb)) * xa;
        return fin(pi / 2 * r3 * xa * ev(name));
    }
    if (name == "f22" || name == "f23")
        return fin(pi / 2 * ev(name));
    if (name == "f25") return fin(ev("f24") * xa / 4 + frac_approx(3, 4, wb));
    if (name == "g") {
        const exact::Rational c = g_param(param);
        return fin(xa * ev("g:" + exact::to_frac_string(c)));
    }
    if (name == "g1") return fin(xa * ev("h11"));
    if (name == "g4") return fin(xa * ev("h12"));
    if (name == "h1") return fin(pi / 2 * ev("h1"));
    if (name == "h2")
        return fin(ev("h2:" + std::to_string(h_param(name, param))));
    if (name == "h3")
        return fin(ev("h3:" + std::to_string(h_param(name, param))));
    if (name == "h4") return fin(pi / 5760 * ev("h4"));
    if (name == "h6")
        return fin(pi / 2 - xa * xa * xa * (pi / 5760 * ev("h4")));
    if (name == "h9")
        return fin(xa * xa * (ev("h9S1") - 2 / pi * ev("h9S2")));
    if (name == "h10") return fin(xa * xa * xa * ev("h10"));

    // everything else is a plain rational series in x
    return fin(ev(name));
}

inline EvalResult direct_value(const std::string& name, const Modulus& m,
                               const PrecisionConfig& prec,
                               const FnParam& param) {
    using exact::frac;
    using exact::Rational;
    const long wb = prec.bits + 16;
    const PrecisionConfig wp(wb, prec.escalation_factor, prec.max_terms);
    const Approx r = Approx::exact(m.r().rounded_to(wb));
    const Approx x = Approx::exact(m.x().rounded_to(wb));
    const Approx rp = Approx::exact(m.rp().rounded_to(wb));
    const Approx rp2 = 1 - x;
    const Approx pi = pi_approx(wb);
    auto rat = [&](long n, long d) { return frac_approx(n, d, wb); };

    if (name == "f1") return finish(ap_u(m, wp), prec);
    if (name == "f2") {
        const Approx A = ap_arth(m, wb);
        return finish(ap_u(m, wp) * r / (rp2 * A), prec);
    }
    if (name == "f3") {
        const Approx A = ap_arth(m, wb);
        const Approx num = ap_u(m, wp) * r * x;  // r - r'^2 arth
        return finish(num / ((1 + x) * A - r), prec);
    }
    if (name == "f4") {
        const Approx A = ap_arth(m, wb);
        return finish(((1 + x) * A - r) / (r * x * ap_k(m, wp)), prec);
    }
    if (name == "f5") {
        const Approx A = ap_arth(m, wb);
        return finish((1 + rp2 * A / r) / rp, prec);
    }
    if (name == "f6") {
        const Approx A = ap_arth(m, wb);
        return finish((r / rp - rp * A) / (A - r), prec);
    }
    if (name == "f7") {
        return finish(log(ap_f1v(m, wp)) / x, prec);
    }
    if (name == "f8") {
        const Approx A = ap_arth(m, wb);
        return finish(rp2 * A * log(ap_f1v(m, wp)) / (r - rp2 * A), prec);
    }
    if (name == "f9") {
        const Approx K = ap_k(m, wp);
        return finish(rp2 * K * log(K * 2 / pi) / (x * ap_w(m, wp)), prec);
    }
    if (name == "f10") {
        const Approx F1 = ap_f1v(m, wp);
        const Approx poly1 = 72 - 126 * x + 19 * x * x;
        const Approx poly2 = 72 - 150 * x - 253 * x * x + 167 * x * x * x;
        return finish((poly1 - poly2 * F1) / (x * x), prec);
    }
    if (name == "f11") {
        const Approx F1 = ap_f1v(m, wp);
        return finish(((13 - 9 * x) * F1 - 13 + 6 * x) / x, prec);
    }
    if (name == "f12") {
        const Approx F1 = ap_f1v(m, wp);
        return finish(((1 - 5 * x) * F1 - 1 + 2 * x) / x, prec);
    }
    if (name == "f13") {
        const Approx F1 = ap_f1v(m, wp);
        return finish(((15 - 12 * x + x * x) * F1 - 15 + 7 * x) / (x * x * x),
                      prec);
    }
    if (name == "f14") {
        const Approx F1 = ap_f1v(m, wp);
        return finish((3 * rp2 - (3 - 4 * x - x * x) * F1) / (x * x), prec);
    }
    if (name == "f15" || name == "f16" || name == "f17") {
        // closed forms at modulus s = sqrt(argument)
        const Modulus ms(sqrt(m.r().rounded_to(wb)));
        const Approx F0 = ap_f0v(ms, wp);
        const Approx F1 = ap_f1v(ms, wp);
        if (name == "f15") return finish(F1 / F0, prec);
        const Approx G0 = ap_w(ms, wp) * 4 / pi;
        const Approx G1 = ap_u(ms, wp) * 3 / 2;
        if (name == "f16") return finish(G1 / G0, prec);
        return finish(F0 - F1 * G0 * 3 / (4 * G1), prec);
    }
    if (name == "f18") {
        const Approx K = ap_k(m, wp);
        const Approx E = ap_e(m, wp);
        const Approx poly = 1 - x / 2 - x * x / 16 - x * x * x / 32;
        return finish((poly * K - E) / (x * x * x * x), prec);
    }
    if (name == "f19") {
        const EvalResult f18v = direct_value("f18", m, wp, {});
        return finish(f18v.approx() / ap_k(m, wp), prec);
    }
    if (name == "f20") {
        const Approx K = ap_k(m, wp);
        const Approx u = ap_u(m, wp);
        const Approx W = ap_w(m, wp);
        const Approx F1 = ap_f1v(m, wp);
        const Approx r3 = r * x;
        return finish(r3 * ((3 + x) / 4 * u * K - W * F1), prec);
    }
    if (name == "f21") {
        const Approx K = ap_k(m, wp);
        const Approx u = ap_u(m, wp);
        const Approx W = ap_w(m, wp);
        const Approx F1 = ap_f1v(m, wp);
        const Approx r3 = r * x;
        return finish(r3 * (W * F1 - (rat(3, 4) + x / 160) * u * K), prec);
    }
    if (name == "f22") {
        const Approx K = ap_k(m, wp);
        const Approx E = ap_e(m, wp);
        const Approx u = ap_u(m, wp);
        const Approx q = (ap_f1v(m, wp) - 1) / x;  // (arth - r)/(r x)
        return finish((u * E - 2 * rp2 * q * K) / x, prec);
    }
    if (name == "f23") {
        const Approx K = ap_k(m, wp);
        const Approx E = ap_e(m, wp);
        return finish(2 * rp2 * ap_f1v(m, wp) * K + ap_u(m, wp) * E, prec);
    }
    if (name == "f24") {
        const Approx R = ap_w(m, wp) * ap_f1v(m, wp) / (ap_u(m, wp) * ap_k(m, wp));
        return finish((4 * R - 3) / x, prec);
    }
    if (name == "f25") {
        return finish(ap_w(m, wp) * ap_f1v(m, wp) / (ap_u(m, wp) * ap_k(m, wp)),
                      prec);
    }
    if (name == "g") {
        const Rational c = g_param(param);
        const Approx ca = Approx::exact(exact::to_real(c, wb));
        return finish((rat(3, 4) + ca * x) * log(ap_f1v(m, wp)) -
                          log(ap_f0v(m, wp)),
                      prec);
    }
    if (name == "g1")
        return finish(((3 + x) / 4 * log(ap_f1v(m, wp)) - log(ap_f0v(m, wp))) / x,
                      prec);
    if (name == "g2") {
        const Approx lf1 = log(ap_f1v(m, wp));
        return finish(((3 + x) / 4 * lf1 - log(ap_f0v(m, wp))) / (x * lf1),
                      prec);
    }
    if (name == "g3") {
        const Approx lf1 = log(ap_f1v(m, wp));
        return finish(
            (log(ap_f0v(m, wp)) - (rat(3, 4) + x / 320) * lf1) / (x * lf1),
            prec);
    }
    if (name == "g4")
        return finish((log(ap_f0v(m, wp)) -
                       (rat(3, 4) + x / 320) * log(ap_f1v(m, wp))) /
                          (x * x),
                      prec);
    if (name == "f") {
        const Approx lf1 = log(ap_f1v(m, wp));
        const Approx g2 =
            ((3 + x) / 4 * lf1 - log(ap_f0v(m, wp))) / (x * lf1);
        return finish(rat(1, 4) - g2, prec);
    }
    if (name == "G")
        return finish(log(ap_f0v(m, wp)) / log(ap_f1v(m, wp)), prec);
    if (name == "h1")
        return finish(r * ap_k(m, wp) / ap_arth(m, wb), prec);
    if (name == "h2") {
        const long n = h_param(name, param);
        Approx acc = rat(3, 4) * ap_f1v(m, wp) - ap_f0v(m, wp);
        Approx xs = Approx::exact(Real(wb, 1));
        for (long k = 0; k <= n; k++) {
            acc = acc - Approx::exact(exact::to_real(
                            exact::seq(exact::SequenceId::a_tilde,
                                       static_cast<std::size_t>(k)),
                            wb)) *
                            xs;
            xs = xs * x;
        }
        return finish(acc / xs, prec);  // xs = x^(n+1) after the loop
    }
    if (name == "h3") {
        const EvalResult h2v = direct_value("h2", m, wp, param);
        return finish(h2v.approx() / ap_f1v(m, wp), prec);
    }
    if (name == "h4") {
        const Approx h1 = r * ap_k(m, wp) / ap_arth(m, wb);
        const Approx poly = 1 - x / 12 - rat(91, 2880) * x * x;
        return finish((pi / 2 * poly - h1) / (x * x * x), prec);
    }
    if (name == "h5")
        return finish(2 / pi * pow(ap_f1v(m, wp), rat(79, 320)), prec);
    if (name == "h6") {
        const Approx h1 = r * ap_k(m, wp) / ap_arth(m, wb);
        return finish(h1 + pi / 24 * x + pi * rat(91, 5760) * x * x, prec);
    }
    if (name == "h7") {
        const Approx alpha = rat(2549, 2880) - 2 / pi;
        const Approx r2 = r * r;
        return finish(1 - 2 / pi - r / 12 - rat(91, 2880) * r * r2 -
                          alpha * r * r2 * r2,
                      prec);
    }
    if (name == "h8") {
        const Approx A = ap_arth(m, wb);
        const Approx F1 = A / r;
        const Approx first = (1 - (1 - r) * F1) / (4 * r);
        const Approx second = (rat(3, 4) - 2 / pi) * (1 - r * x) * F1;
        return finish(first + second, prec);
    }
    if (name == "h9") {
        const Approx A = rat(1, 4) - x / 12 + (rat(2069, 2880) - 2 / pi) * x * x -
                         (rat(2549, 2880) - 2 / pi) * x * x * x;
        return finish(A * ap_f1v(m, wp) - rat(1, 4), prec);
    }
    if (name == "h10") {
        const Approx F1 = ap_f1v(m, wp);
        return finish((F1 - 1) / 4 -
                          x * (rat(1, 12) + x / 45 + rat(871, 48384) * x * x) *
                              F1,
                      prec);
    }
    if (name == "h11") {
        const EvalResult g1v = direct_value("g1", m, wp, {});
        return finish(g1v.approx() / x, prec);
    }
    if (name == "h12") {
        const EvalResult g4v = direct_value("g4", m, wp, {});
        return finish(g4v.approx() / x, prec);
    }
    if (name == "h13")
        return finish(log(ap_f0v(m, wp)) / x, prec);
    throw UnknownFunction(name);
}

}  // namespace detail

// Forced-path evaluation, primarily for the dual-route agreement tests.
inline EvalResult fn_eval_path(const std::string& name, const Modulus& m,
                               const PrecisionConfig& prec, bool series,
                               const FnParam& param = {}) {
    const FunctionInfo& info = fn_info(name);
    if (info.needs_param && !param) throw ParamRequired(name);
    if (series) {
        if (!info.has_series)
            throw std::domain_error(name + " has no series path");
        return detail::series_value(name, m, prec, param);
    }
    return detail::direct_value(name, m, prec, param);
}

inline EvalResult fn_eval(const std::string& name, const Modulus& m,
                          const PrecisionConfig& prec,
                          const FnParam& param = {}) {
    const FunctionInfo& info = fn_info(name);
    const bool series =
        info.has_series && m.r() < exact::to_real(info.switch_r, 64);
    return fn_eval_path(name, m, prec, series, param);
}

// ---- claims ----

inline ClaimSet fn_claims(const std::string& name, const FnParam& param = {}) {
    using exact::frac;
    using exact::Rational;
    auto R = [](long n, long d = 1) { return ConstExpr::rat(exact::frac(n, d)); };
    ClaimSet c;
    auto inc = [&c](std::optional<ConstExpr> lo, std::optional<ConstExpr> hi) {
        c.monotone = Monotone::increasing;
        c.range_lo = std::move(lo);
        c.range_hi = std::move(hi);
    };
    auto dec = [&c](std::optional<ConstExpr> lo, std::optional<ConstExpr> hi) {
        c.monotone = Monotone::decreasing;
        c.range_lo = std::move(lo);
        c.range_hi = std::move(hi);
    };

    if (name == "f1") {
        inc(R(2, 3), R(1));
        c.convexity = Convexity::convex;
    } else if (name == "f2") {
        inc(R(2, 3), std::nullopt);
    } else if (name == "f3") {
        dec(R(0), R(1, 2));
    } else if (name == "f4") {
        inc(ConstExpr::inv_pi(frac(8, 3)), R(2));
    } else if (name == "f5") {
        inc(R(2), std::nullopt);
        c.convexity = Convexity::convex;
    } else if (name == "f6") {
        inc(R(2), std::nullopt);
    } else if (name == "f7") {
        inc(R(1, 3), std::nullopt);
    } else if (name == "f8" || name == "f9") {
        dec(R(0), R(1, 2));
    } else if (name == "f10") {
        c.strict_sign = {+1, R(25688, 105)};
    } else if (name == "f11") {
        c.strict_sign = {+1, R(14, 15)};
    } else if (name == "f12") {
        c.strict_sign = {-1, R(-8, 3)};
    } else if (name == "f13") {
        c.abs_monotone = true;
        c.range_lo = R(8, 105);
    } else if (name == "f14") {
        c.abs_monotone = true;
        c.range_lo = R(26, 15);
    } else if (name == "f15") {
        inc(R(1), ConstExpr::pi(frac(1, 2)));
    } else if (name == "f16") {
        inc(R(1), ConstExpr::pi(frac(3, 8)));
    } else if (name == "f17") {
        inc(R(1, 4), ConstExpr::log2_over_pi(Rational(2)));
    } else if (name == "f18") {
        c.abs_monotone = true;
        c.range_lo = ConstExpr::pi(frac(41, 4096));
    } else if (name == "f19") {
        inc(R(41, 2048), R(13, 32));
    } else if (name == "f20") {
        inc(R(0), ConstExpr::log2(Rational(1)));
        c.convexity = Convexity::convex;
    } else if (name == "f21") {
        inc(R(0), std::nullopt);
        c.convexity = Convexity::convex;
    } else if (name == "f22") {
        inc(ConstExpr::pi(frac(1, 30)), R(1));
    } else if (name == "f23") {
        dec(R(1), ConstExpr::pi(frac(4, 3)));
    } else if (name == "f24") {
        inc(R(1, 40), R(1));
    } else if (name == "f25") {
        inc(R(3, 4), R(1));
    } else if (name == "g") {
        const Rational cv = detail::g_param(param);
        if (cv >= frac(1, 4)) {
            c.monotone = Monotone::increasing;
            c.convexity = Convexity::convex;
            c.range_lo = R(0);
            if (cv == frac(1, 4))
                c.range_hi = ConstExpr::log_pi_half(Rational(1));
        } else if (cv <= frac(1, 320)) {
            c.monotone = Monotone::decreasing;
            c.convexity = Convexity::concave;
            c.range_hi = R(0);
        }
        // 1/320 < c < 1/4: no claim stands; the registry stores none.
    } else if (name == "g1") {
        inc(R(0), ConstExpr::log_pi_half(Rational(1)));
    } else if (name == "g2") {
        dec(R(0), R(79, 320));
    } else if (name == "g3") {
        inc(R(0), R(79, 320));
    } else if (name == "g4") {
        inc(R(0), std::nullopt);
    } else if (name == "f") {
        inc(R(1, 320), R(1, 4));
    } else if (name == "G") {
        inc(R(3, 4), R(1));
    } else if (name == "h1") {
        dec(R(1), ConstExpr::pi(frac(1, 2)));
        c.convexity = Convexity::concave;
    } else if (name == "h2") {
        const long n = detail::h_param(name, param);
        c.abs_monotone = true;
        c.range_lo = ConstExpr::rat(
            exact::seq(exact::SequenceId::a_tilde, static_cast<std::size_t>(n) + 1));
    } else if (name == "h3") {
        const long n = detail::h_param(name, param);
        inc(ConstExpr::rat(exact::seq(exact::SequenceId::a_tilde,
                                      static_cast<std::size_t>(n) + 1)),
            R(3, 4) - ConstExpr::inv_pi(Rational(2)));
    } else if (name == "h4") {
        inc(ConstExpr::pi(frac(871, 96768)),
            ConstExpr::pi(frac(2549, 5760)) - R(1));
    } else if (name == "h5") {
        inc(ConstExpr::inv_pi(Rational(2)), std::nullopt);
    } else if (name == "h6") {
        dec(R(1) + ConstExpr::pi(frac(331, 5760)), ConstExpr::pi(frac(1, 2)));
    } else if (name == "h7") {
        dec(R(0), R(1) - ConstExpr::inv_pi(Rational(2)));
    } else if (name == "h8") {
        c.strict_sign = {+1, R(0)};
    } else if (name == "h9" || name == "h10" || name == "h11" ||
               name == "h12" || name == "h13") {
        // sign-scan targets and conjectural entries carry no proven claims
    } else {
        fn_info(name);  // throws UnknownFunction if truly unknown
    }
    return c;
}

// Claim-id prefix in statement-numbering style, e.g. "Th1.6.3", "Lem2.1.10".
inline std::string claim_prefix(const std::string& fn_name) {
    std::string s = fn_info(fn_name).source;
    std::string out;
    if (s.rfind("Theorem ", 0) == 0) out = "Th" + s.substr(8);
    else if (s.rfind("Lemma ", 0) == 0) out = "Lem" + s.substr(6);
    else if (s.rfind("Corollary ", 0) == 0) out = "Col" + s.substr(10);
    else if (s.rfind("Conjecture ", 0) == 0) out = "Conj" + s.substr(11);
    else if (s.rfind("Sec. ", 0) == 0) out = "Sec" + s.substr(5);
    else out = s;
    std::string cleaned;
    for (char ch : out) {
        if (ch == '(') cleaned += '.';
        else if (ch == ')' || ch == ' ') continue;
        else cleaned += ch;
    }
    return cleaned;
}

}  // namespace ellint
