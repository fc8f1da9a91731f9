#pragma once

// Claim verification: grid sweeps with certified margins, escalation on
// indeterminate comparisons (re-decide at escalated precision, confirm at
// twice that), exact sequence/coefficient checks, and the suite runner.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "grid.hpp"

namespace ellint {

struct VerificationReport {
    enum class Status { pass, fail, not_reachable };

    std::string claim_id;
    std::string kind;
    Status status = Status::fail;
    std::string grid;
    long precision_bits = 0;
    std::string min_margin;
    std::string witness;
    double elapsed_s = 0;
    bool gating = true;
    bool control = false;  // negative control: expected to FAIL
    std::string note;
};

inline const char* status_name(VerificationReport::Status s) {
    switch (s) {
        case VerificationReport::Status::pass: return "pass";
        case VerificationReport::Status::fail: return "fail";
        default: return "not_reachable";
    }
}

// Restricts a suite run to claims whose id matches; empty means everything.
using ClaimFilter = std::function<bool(const std::string&)>;

namespace detail {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double stop() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

template <class F>
void emit(std::vector<VerificationReport>& out, const ClaimFilter& want,
          const std::string& id, F&& make) {
    if (!want || want(id)) out.push_back(make());
}

inline EvalResult eval_bits(const std::string& name, const FnParam& param,
                            const Real& r, long bits,
                            const PrecisionConfig& base) {
    PrecisionConfig p(bits, base.escalation_factor, base.max_terms);
    return fn_eval(name, Modulus(r.rounded_to(bits + 8)), p, param);
}

// Certified sign of f(rb) - f(ra). Escalates once and confirms the escalated
// verdict at twice the escalated precision; 0 means undecidable even then.
struct PairCmp {
    int sign = 0;
    Real margin;
    bool escalated = false;
    bool confirm_conflict = false;

    PairCmp() : margin(64) {}
};

inline int raw_sign(const Real& gap, const Real& errs) {
    if (gap > errs) return +1;
    if (gap < -errs) return -1;
    return 0;
}

inline PairCmp cmp_values(const std::string& name, const FnParam& param,
                          const Real& ra, const Real& rb,
                          const EvalResult& va, const EvalResult& vb,
                          const PrecisionConfig& base) {
    PairCmp out;
    Real gap = vb.value - va.value;
    Real errs = va.err_bound + vb.err_bound;
    out.sign = raw_sign(gap, errs);
    if (out.sign != 0) {
        out.margin = abs(gap) - errs;
        return out;
    }
    out.escalated = true;
    const long b1 = base.bits * base.escalation_factor;
    EvalResult wa = eval_bits(name, param, ra, b1, base);
    EvalResult wb = eval_bits(name, param, rb, b1, base);
    Real gap1 = wb.value - wa.value;
    Real errs1 = wa.err_bound + wb.err_bound;
    int s1 = raw_sign(gap1, errs1);
    if (s1 == 0) return out;  // still undecidable
    // confirm at 2x the escalated precision; disagreement is a soundness flag
    EvalResult ca = eval_bits(name, param, ra, 2 * b1, base);
    EvalResult cb = eval_bits(name, param, rb, 2 * b1, base);
    Real gap2 = cb.value - ca.value;
    Real errs2 = ca.err_bound + cb.err_bound;
    int s2 = raw_sign(gap2, errs2);
    if (s2 != s1) {
        out.confirm_conflict = true;
        return out;
    }
    out.sign = s1;
    out.margin = abs(gap1) - errs1;
    return out;
}

// Certified sign of f(r) - c for an exact-expression constant.
inline PairCmp cmp_against(const std::string& name, const FnParam& param,
                           const Real& r, const EvalResult& v,
                           const ConstExpr& c, const PrecisionConfig& base) {
    PairCmp out;
    Real cv = c.eval(base.bits + 8);
    Real gap = v.value - cv;
    Real errs = v.err_bound + 16 * cv.ulp();
    out.sign = raw_sign(gap, errs);
    if (out.sign != 0) {
        out.margin = abs(gap) - errs;
        return out;
    }
    out.escalated = true;
    const long b1 = base.bits * base.escalation_factor;
    EvalResult w = eval_bits(name, param, r, b1, base);
    Real cv1 = c.eval(b1 + 8);
    Real gap1 = w.value - cv1;
    Real errs1 = w.err_bound + 16 * cv1.ulp();
    int s1 = raw_sign(gap1, errs1);
    if (s1 == 0) return out;
    EvalResult w2 = eval_bits(name, param, r, 2 * b1, base);
    Real cv2 = c.eval(2 * b1 + 8);
    int s2 = raw_sign(w2.value - cv2, w2.err_bound + 16 * cv2.ulp());
    if (s2 != s1) {
        out.confirm_conflict = true;
        return out;
    }
    out.sign = s1;
    out.margin = abs(gap1) - errs1;
    return out;
}

inline std::string fmt_margin(const Real& m) { return m.str_digits(6); }

inline std::string param_tag(const std::string& name, const FnParam& param) {
    if (!param) return name;
    return name + "(" + exact::to_frac_string(*param) + ")";
}

inline std::string witness_pair(const Real& ra, const EvalResult& va,
                                const Real& rb, const EvalResult& vb) {
    return "r=" + ra.str_digits(20) + " f=" + va.value.str_digits(20) +
           " | r=" + rb.str_digits(20) + " f=" + vb.value.str_digits(20);
}

}  // namespace detail

// ---- grid claims ----

inline VerificationReport verify_monotone(const std::string& claim_id,
                                          const std::string& name,
                                          const FnParam& param, Monotone dir,
                                          const GridSpec& grid,
                                          const PrecisionConfig& prec) {
    detail::Timer t;
    VerificationReport rep;
    rep.claim_id = claim_id;
    rep.kind = "monotone";
    rep.grid = grid.describe();
    rep.precision_bits = prec.bits;
    const int want = dir == Monotone::increasing ? +1 : -1;
    const std::vector<Real> pts = make_grid(grid, prec.bits + 8);
    std::vector<EvalResult> vals;
    vals.reserve(pts.size());
    for (const Real& r : pts) vals.push_back(detail::eval_bits(name, param, r, prec.bits, prec));
    Real min_margin(prec.bits);
    bool have_margin = false;
    for (std::size_t i = 0; i + 1 < pts.size(); i++) {
        detail::PairCmp c = detail::cmp_values(name, param, pts[i], pts[i + 1],
                                               vals[i], vals[i + 1], prec);
        if (c.confirm_conflict) {
            rep.status = VerificationReport::Status::fail;
            rep.note = "escalated verdict not confirmed at 2x precision";
            rep.witness = detail::witness_pair(pts[i], vals[i], pts[i + 1], vals[i + 1]);
            rep.elapsed_s = t.stop();
            return rep;
        }
        if (c.sign == 0) {
            rep.status = VerificationReport::Status::fail;
            rep.note = "indeterminate after escalation to " +
                       std::to_string(prec.bits * prec.escalation_factor) + " bits";
            rep.witness = detail::witness_pair(pts[i], vals[i], pts[i + 1], vals[i + 1]);
            rep.elapsed_s = t.stop();
            return rep;
        }
        if (c.sign != want) {
            rep.status = VerificationReport::Status::fail;
            rep.witness = detail::witness_pair(pts[i], vals[i], pts[i + 1], vals[i + 1]);
            rep.note = "certified violation";
            rep.elapsed_s = t.stop();
            return rep;
        }
        if (!have_margin || c.margin < min_margin) {
            min_margin = c.margin;
            have_margin = true;
        }
    }
    rep.status = VerificationReport::Status::pass;
    rep.min_margin = detail::fmt_margin(min_margin);
    rep.elapsed_s = t.stop();
    return rep;
}

inline VerificationReport verify_convexity(const std::string& claim_id,
                                           const std::string& name,
                                           const FnParam& param, Convexity dir,
                                           const GridSpec& grid,
                                           const PrecisionConfig& prec) {
    detail::Timer t;
    VerificationReport rep;
    rep.claim_id = claim_id;
    rep.kind = "convexity";
    rep.grid = grid.describe();
    rep.precision_bits = prec.bits;
    if (grid.spacing != GridSpacing::uniform)
        throw std::invalid_argument("convexity check needs a uniform grid");
    const int want = dir == Convexity::convex ? +1 : -1;
    const std::vector<Real> pts = make_grid(grid, prec.bits + 8);
    std::vector<EvalResult> vals;
    vals.reserve(pts.size());
    for (const Real& r : pts) vals.push_back(detail::eval_bits(name, param, r, prec.bits, prec));
    auto second_diff = [&](const std::vector<EvalResult>& v, std::size_t i, Real& gap, Real& errs) {
        gap = v[i - 1].value - 2 * v[i].value + v[i + 1].value;
        errs = v[i - 1].err_bound + 2 * v[i].err_bound + v[i + 1].err_bound;
    };
    Real min_margin(prec.bits);
    bool have_margin = false;
    for (std::size_t i = 1; i + 1 < pts.size(); i++) {
        Real gap(prec.bits), errs(prec.bits);
        second_diff(vals, i, gap, errs);
        int s = detail::raw_sign(gap, errs);
        Real margin = abs(gap) - errs;
        if (s == 0) {
            // escalate the triple, confirm at 2x
            const long b1 = prec.bits * prec.escalation_factor;
            std::vector<EvalResult> w = {
                detail::eval_bits(name, param, pts[i - 1], b1, prec),
                detail::eval_bits(name, param, pts[i], b1, prec),
                detail::eval_bits(name, param, pts[i + 1], b1, prec)};
            Real gap1(b1), errs1(b1);
            second_diff(w, 1, gap1, errs1);
            int s1 = detail::raw_sign(gap1, errs1);
            if (s1 != 0) {
                std::vector<EvalResult> w2 = {
                    detail::eval_bits(name, param, pts[i - 1], 2 * b1, prec),
                    detail::eval_bits(name, param, pts[i], 2 * b1, prec),
                    detail::eval_bits(name, param, pts[i + 1], 2 * b1, prec)};
                Real gap2(2 * b1), errs2(2 * b1);
                second_diff(w2, 1, gap2, errs2);
                if (detail::raw_sign(gap2, errs2) != s1) s1 = 0;
            }
            if (s1 == 0) {
                rep.status = VerificationReport::Status::fail;
                rep.note = "indeterminate second difference near r=" + pts[i].str_digits(12);
                rep.elapsed_s = t.stop();
                return rep;
            }
            s = s1;
            margin = abs(gap1) - errs1;
        }
        if (s != want) {
            rep.status = VerificationReport::Status::fail;
            rep.witness = "r=" + pts[i].str_digits(20) + " D2=" + gap.str_digits(10);
            rep.note = "certified violation";
            rep.elapsed_s = t.stop();
            return rep;
        }
        if (!have_margin || margin < min_margin) {
            min_margin = margin;
            have_margin = true;
        }
    }
    rep.status = VerificationReport::Status::pass;
    rep.min_margin = detail::fmt_margin(min_margin);
    rep.elapsed_s = t.stop();
    return rep;
}

inline VerificationReport verify_range(const std::string& claim_id,
                                       const std::string& name,
                                       const FnParam& param,
                                       const ClaimSet& claims,
                                       const GridSpec& grid,
                                       const PrecisionConfig& prec) {
    detail::Timer t;
    VerificationReport rep;
    rep.claim_id = claim_id;
    rep.kind = "range";
    rep.grid = grid.describe();
    rep.precision_bits = prec.bits;
    const std::vector<Real> pts = make_grid(grid, prec.bits + 8);
    Real min_margin(prec.bits);
    bool have_margin = false;
    for (const Real& r : pts) {
        EvalResult v = detail::eval_bits(name, param, r, prec.bits, prec);
        for (int side = 0; side < 2; side++) {
            const auto& ep = side == 0 ? claims.range_lo : claims.range_hi;
            if (!ep) continue;
            detail::PairCmp c = detail::cmp_against(name, param, r, v, *ep, prec);
            const int want = side == 0 ? +1 : -1;
            if (c.sign != want || c.confirm_conflict) {
                rep.status = VerificationReport::Status::fail;
                rep.witness = "r=" + r.str_digits(20) + " f=" + v.value.str_digits(20) +
                              " endpoint=" + ep->str();
                rep.note = c.sign == 0 ? "indeterminate after escalation" : "certified violation";
                rep.elapsed_s = t.stop();
                return rep;
            }
            if (!have_margin || c.margin < min_margin) {
                min_margin = c.margin;
                have_margin = true;
            }
        }
    }
    // Endpoint extrapolation at r -> 0: the evaluator at a dyadic point within
    // spitting distance of 0 must land on the claimed limit. Entries whose
    // leading correction is O(arg) rather than O(r^2) need the deeper probe.
    const auto& zero_ep = claims.monotone == Monotone::decreasing ? claims.range_hi : claims.range_lo;
    if (zero_ep) {
        const bool slow = name == "f15" || name == "f16" || name == "f17" || name == "h7";
        const long kk = slow ? 80 : 40;
        const long wb = prec.bits + 100;
        Real r0 = Real::pow2(-kk, wb);
        PrecisionConfig pp(prec.bits + 80, prec.escalation_factor, prec.max_terms);
        EvalResult v = fn_eval(name, Modulus(r0), pp, param);
        Real target = zero_ep->eval(pp.bits);
        Real diff = abs(v.value - target);
        Real tol = Real::from_decimal("1e-20", wb) + v.err_bound + 16 * target.ulp();
        if (!(diff <= tol)) {
            rep.status = VerificationReport::Status::fail;
            rep.witness = "r=2^-" + std::to_string(kk) + " f=" + v.value.str_digits(30) +
                          " limit=" + zero_ep->str();
            rep.note = "endpoint extrapolation off by " + diff.str_digits(6);
            rep.elapsed_s = t.stop();
            return rep;
        }
    }
    rep.status = VerificationReport::Status::pass;
    rep.min_margin = detail::fmt_margin(min_margin);
    rep.elapsed_s = t.stop();
    return rep;
}

inline VerificationReport verify_strict_sign(const std::string& claim_id,
                                             const std::string& name,
                                             const FnParam& param,
                                             const std::pair<int, ConstExpr>& sign_claim,
                                             const GridSpec& grid,
                                             const PrecisionConfig& prec) {
    detail::Timer t;
    VerificationReport rep;
    rep.claim_id = claim_id;
    rep.kind = "strict-sign";
    rep.grid = grid.describe();
    rep.precision_bits = prec.bits;
    const std::vector<Real> pts = make_grid(grid, prec.bits + 8);
    Real min_margin(prec.bits);
    bool have_margin = false;
    for (const Real& r : pts) {
        EvalResult v = detail::eval_bits(name, param, r, prec.bits, prec);
        detail::PairCmp c = detail::cmp_against(name, param, r, v, sign_claim.second, prec);
        if (c.sign != sign_claim.first || c.confirm_conflict) {
            rep.status = VerificationReport::Status::fail;
            rep.witness = "r=" + r.str_digits(20) + " f=" + v.value.str_digits(20);
            rep.note = c.sign == 0 ? "indeterminate after escalation" : "certified violation";
            rep.elapsed_s = t.stop();
            return rep;
        }
        if (!have_margin || c.margin < min_margin) {
            min_margin = c.margin;
            have_margin = true;
        }
    }
    rep.status = VerificationReport::Status::pass;
    rep.min_margin = detail::fmt_margin(min_margin);
    rep.elapsed_s = t.stop();
    return rep;
}

// ---- exact claims ----

inline VerificationReport verify_sequence(const std::string& claim_id,
                                          exact::SequenceId id, bool increasing,
                                          std::size_t n_max) {
    detail::Timer t;
    VerificationReport rep;
    rep.claim_id = claim_id;
    rep.kind = "sequence-monotone";
    rep.grid = "n <= " + std::to_string(n_max) + " (exact)";
    rep.precision_bits = 0;
    for (std::size_t n = 0; n < n_max; n++) {
        exact::Rational a = exact::seq(id, n);
        exact::Rational b = exact::seq(id, n + 1);
        const bool ok = increasing ? (b > a) : (b < a);
        if (!ok) {
            rep.status = VerificationReport::Status::fail;
            rep.witness = "n=" + std::to_string(n) + ": " + exact::to_frac_string(a) +
                          " -> " + exact::to_frac_string(b);
            rep.elapsed_s = t.stop();
            return rep;
        }
    }
    rep.status = VerificationReport::Status::pass;
    rep.min_margin = "exact";
    rep.elapsed_s = t.stop();
    return rep;
}

inline VerificationReport verify_sequence_positive(const std::string& claim_id,
                                                   exact::SequenceId id,
                                                   std::size_t from,
                                                   std::size_t n_max) {
    detail::Timer t;
    VerificationReport rep;
    rep.claim_id = claim_id;
    rep.kind = "sequence-positive";
    rep.grid = std::to_string(from) + " <= n <= " + std::to_string(n_max) + " (exact)";
    for (std::size_t n = from; n <= n_max; n++) {
        if (!(exact::seq(id, n) > 0)) {
            rep.status = VerificationReport::Status::fail;
            rep.witness = "n=" + std::to_string(n) + ": " +
                          exact::to_frac_string(exact::seq(id, n));
            rep.elapsed_s = t.stop();
            return rep;
        }
    }
    rep.status = VerificationReport::Status::pass;
    rep.min_margin = "exact";
    rep.elapsed_s = t.stop();
    return rep;
}

inline VerificationReport verify_seq_closed_form(const std::string& claim_id,
                                                 exact::SequenceId id,
                                                 std::size_t n_max) {
    detail::Timer t;
    VerificationReport rep;
    rep.claim_id = claim_id;
    rep.kind = "sequence-closed-form";
    rep.grid = "n <= " + std::to_string(n_max) + " (exact)";
    if (exact::seq_closed_form_check(id, n_max)) {
        rep.status = VerificationReport::Status::pass;
        rep.min_margin = "exact";
    } else {
        rep.status = VerificationReport::Status::fail;
        rep.witness = "definitional and collapsed forms disagree within range";
    }
    rep.elapsed_s = t.stop();
    return rep;
}

// Numeric trend toward an irrational limit: |s_{10^k} - L| strictly shrinking
// for k = 1..4, with the one-sided approach kept intact. The rational terms
// are evaluated at no less than 256 bits regardless of the run precision.
inline VerificationReport verify_seq_limit_trend(const std::string& claim_id,
                                                 exact::SequenceId id,
                                                 const ConstExpr& limit,
                                                 bool from_above,
                                                 const PrecisionConfig& prec) {
    detail::Timer t;
    VerificationReport rep;
    rep.claim_id = claim_id;
    rep.kind = "sequence-limit";
    rep.grid = "n = 10^1..10^4";
    rep.precision_bits = prec.bits;
    const long wb = std::max<long>(prec.bits, 256) + 16;
    Real lim = limit.eval(wb);
    Real prev(wb);
    for (int k = 1; k <= 4; k++) {
        std::size_t n = 1;
        for (int i = 0; i < k; i++) n *= 10;
        Real s = exact::to_real(exact::seq(id, n), wb);
        Real gap = s - lim;
        if (from_above ? !(gap > 0) : !(gap < 0)) {
            rep.status = VerificationReport::Status::fail;
            rep.witness = "n=" + std::to_string(n) + " gap=" + gap.str_digits(8);
            rep.note = "approach side violated";
            rep.elapsed_s = t.stop();
            return rep;
        }
        if (k > 1 && !(abs(gap) < prev)) {
            rep.status = VerificationReport::Status::fail;
            rep.witness = "n=" + std::to_string(n) + " |gap|=" + abs(gap).str_digits(8);
            rep.note = "gap not shrinking";
            rep.elapsed_s = t.stop();
            return rep;
        }
        prev = abs(gap);
    }
    rep.status = VerificationReport::Status::pass;
    rep.min_margin = prev.str_digits(6);
    rep.elapsed_s = t.stop();
    return rep;
}

inline VerificationReport verify_series_coeffs(const std::string& claim_id,
                                               const std::string& series_name,
                                               const std::vector<exact::Rational>& expected) {
    detail::Timer t;
    VerificationReport rep;
    rep.claim_id = claim_id;
    rep.kind = "series-coeffs";
    rep.grid = "first " + std::to_string(expected.size()) + " coefficients (exact)";
    exact::PowerSeries got = exact::paper_series(series_name, expected.size() - 1);
    for (std::size_t i = 0; i < expected.size(); i++) {
        if (got[i] != expected[i]) {
            rep.status = VerificationReport::Status::fail;
            rep.witness = "n=" + std::to_string(i) + " derived=" +
                          exact::to_frac_string(got[i]) + " printed=" +
                          exact::to_frac_string(expected[i]);
            rep.elapsed_s = t.stop();
            return rep;
        }
    }
    rep.status = VerificationReport::Status::pass;
    rep.min_margin = "exact";
    rep.elapsed_s = t.stop();
    return rep;
}

// Absolute monotonicity via exact coefficient positivity of the series that
// represents the function (or its defining remainder).
inline VerificationReport verify_coeff_positivity(const std::string& claim_id,
                                                  const std::string& series_key,
                                                  std::size_t order) {
    detail::Timer t;
    VerificationReport rep;
    rep.claim_id = claim_id;
    rep.kind = "coeff-positivity";
    rep.grid = "orders 0.." + std::to_string(order) + " (exact)";
    exact::PowerSeries s = detail::build_registry_series(series_key, order);
    for (std::size_t n = 0; n <= order; n++) {
        if (!(s[n] > 0)) {
            rep.status = VerificationReport::Status::fail;
            rep.witness = "n=" + std::to_string(n) + " coeff=" + exact::to_frac_string(s[n]);
            rep.elapsed_s = t.stop();
            return rep;
        }
    }
    rep.status = VerificationReport::Status::pass;
    rep.min_margin = "exact";
    rep.elapsed_s = t.stop();
    return rep;
}

// ---- structural invariants ----

inline VerificationReport verify_dual_path(const std::string& claim_id,
                                           const std::string& name,
                                           const FnParam& param, long n_pts,
                                           const PrecisionConfig& prec) {
    detail::Timer t;
    VerificationReport rep;
    rep.claim_id = claim_id;
    rep.kind = "dual-path";
    rep.precision_bits = prec.bits;
    // span the function's own switch radius but stay where the registry-order
    // series tail is provably below target precision
    const bool late_switch = fn_info(name).switch_r == exact::frac(1, 2);
    GridSpec g = GridSpec::uniform_n(n_pts, "0.02", late_switch ? "0.65" : "0.45");
    rep.grid = g.describe();
    // the modulus needs spare bits well past the agreement tolerance: the two
    // routes consume different cached fields (x vs r'), and representation
    // noise in those is amplified by the 1/x^k factors of some entries
    const long mb = prec.bits + 96;
    const std::vector<Real> pts = make_grid(g, mb);
    const Real tol_rel = Real::pow2(-(prec.bits - 8), mb);
    Real worst(mb);
    for (const Real& r : pts) {
        Modulus m(r.rounded_to(mb));
        EvalResult a = fn_eval_path(name, m, prec, true, param);
        EvalResult b = fn_eval_path(name, m, prec, false, param);
        Real diff = abs(a.value - b.value);
        Real tol = tol_rel * (1 + abs(a.value)) + a.err_bound + b.err_bound;
        if (!(diff <= tol)) {
            rep.status = VerificationReport::Status::fail;
            rep.witness = "r=" + r.str_digits(20) + " series=" + a.value.str_digits(25) +
                          " direct=" + b.value.str_digits(25);
            rep.elapsed_s = t.stop();
            return rep;
        }
        if (diff > worst) worst = diff;
    }
    rep.status = VerificationReport::Status::pass;
    rep.min_margin = "max |series-direct| = " + worst.str_digits(4);
    rep.elapsed_s = t.stop();
    return rep;
}

inline VerificationReport verify_g_identity(const std::string& claim_id, long n_pts,
                                            const PrecisionConfig& prec) {
    detail::Timer t;
    VerificationReport rep;
    rep.claim_id = claim_id;
    rep.kind = "identity";
    rep.precision_bits = prec.bits;
    GridSpec g{n_pts, "1e-5", "0.99999", GridSpacing::composite};
    rep.grid = g.describe() + ", G = r^2 f + 3/4";
    const std::vector<Real> pts = make_grid(g, prec.bits + 8);
    const Real tol_rel = Real::pow2(-(prec.bits - 4), prec.bits + 8);
    for (const Real& r : pts) {
        Modulus m(r.rounded_to(prec.bits + 8));
        EvalResult gv = fn_eval("G", m, prec);
        EvalResult fv = fn_eval("f", m, prec);
        Real rhs = m.x().rounded_to(prec.bits + 8) * fv.value + Real(prec.bits + 8, 3) / 4;
        Real diff = abs(gv.value - rhs);
        Real tol = tol_rel + gv.err_bound + fv.err_bound;
        if (!(diff <= tol)) {
            rep.status = VerificationReport::Status::fail;
            rep.witness = "r=" + r.str_digits(20) + " G=" + gv.value.str_digits(25) +
                          " r^2 f + 3/4=" + rhs.str_digits(25);
            rep.elapsed_s = t.stop();
            return rep;
        }
    }
    rep.status = VerificationReport::Status::pass;
    rep.min_margin = "tol 2^-(p-4)";
    rep.elapsed_s = t.stop();
    return rep;
}

// K by hypergeometric summation vs K by AGM, evaluated independently.
inline VerificationReport verify_k_routes(const std::string& claim_id, long n_pts,
                                          const PrecisionConfig& prec) {
    detail::Timer t;
    VerificationReport rep;
    rep.claim_id = claim_id;
    rep.kind = "oracle-cross";
    rep.precision_bits = prec.bits;
    GridSpec g{n_pts, "1e-6", "0.99", GridSpacing::composite};
    rep.grid = g.describe() + ", series vs AGM";
    const long wb = prec.bits + 16;
    PrecisionConfig wp(wb, prec.escalation_factor, prec.max_terms);
    const std::vector<Real> pts = make_grid(g, wb);
    const Real tol_rel = Real::pow2(-120, wb);
    for (const Real& r : pts) {
        Modulus m(r.rounded_to(wb));
        EvalResult hs = hyp_series(exact::frac(1, 2), exact::frac(1, 2),
                                   exact::Rational(1), m.x(), wp);
        Approx k_series = detail::pi_approx(wb) / 2 * hs.approx();
        EvalResult gm = agm(Real(wb, 1), m.rp(), wp);
        Approx k_agm = detail::pi_approx(wb) / (2 * gm.approx());
        Real diff = abs(k_series.v - k_agm.v);
        Real tol = tol_rel * k_agm.v + k_series.e + k_agm.e;
        if (!(diff <= tol)) {
            rep.status = VerificationReport::Status::fail;
            rep.witness = "r=" + r.str_digits(20) + " series=" + k_series.v.str_digits(40) +
                          " agm=" + k_agm.v.str_digits(40);
            rep.elapsed_s = t.stop();
            return rep;
        }
    }
    rep.status = VerificationReport::Status::pass;
    rep.min_margin = "rel tol 2^-120";
    rep.elapsed_s = t.stop();
    return rep;
}

// Closed-form derivative vs central finite difference.
inline VerificationReport verify_derivative_fd(const std::string& claim_id,
                                               bool of_k, long n_pts,
                                               const PrecisionConfig& prec) {
    detail::Timer t;
    VerificationReport rep;
    rep.claim_id = claim_id;
    rep.kind = "oracle-cross";
    rep.precision_bits = prec.bits;
    GridSpec g = GridSpec::uniform_n(n_pts, "0.05", "0.95");
    rep.grid = g.describe() + std::string(", d") + (of_k ? "K" : "E") + "/dr vs FD";
    const long wb = prec.bits + 16;
    PrecisionConfig wp(wb, prec.escalation_factor, prec.max_terms);
    const std::vector<Real> pts = make_grid(g, wb);
    const Real h = Real::pow2(-(prec.bits / 3), wb);
    const Real tol_rel = Real::pow2(-40, wb);
    for (const Real& r : pts) {
        Modulus m(r.rounded_to(wb));
        EvalResult closed = of_k ? dk_dr(m, wp) : de_dr(m, wp);
        auto at = [&](const Real& rr) {
            Modulus mm(rr);
            return of_k ? ell_k(mm, wp) : ell_e(mm, wp);
        };
        EvalResult up = at(r + h);
        EvalResult dn = at(r - h);
        Real fd = (up.value - dn.value) / (2 * h);
        Real diff = abs(closed.value - fd);
        Real tol = tol_rel * (1 + abs(closed.value));
        if (!(diff <= tol)) {
            rep.status = VerificationReport::Status::fail;
            rep.witness = "r=" + r.str_digits(20) + " closed=" + closed.value.str_digits(30) +
                          " fd=" + fd.str_digits(30);
            rep.elapsed_s = t.stop();
            return rep;
        }
    }
    rep.status = VerificationReport::Status::pass;
    rep.min_margin = "rel tol 2^-40";
    rep.elapsed_s = t.stop();
    return rep;
}

// ---- bound families ----

inline VerificationReport verify_bounds(const std::string& claim_id,
                                        const std::string& family, long n,
                                        const GridSpec& grid,
                                        const PrecisionConfig& prec) {
    detail::Timer t;
    VerificationReport rep;
    rep.claim_id = claim_id;
    rep.kind = "bounds";
    rep.grid = grid.describe();
    rep.precision_bits = prec.bits;
    const std::vector<Real> pts = make_grid(grid, prec.bits + 8);
    Real min_margin(prec.bits);
    bool have_margin = false;
    // Near r = 0 the two-sided gap of a family with contact order m shrinks
    // like x^m, so a single doubling cannot always decide; the escalation
    // steps geometrically up to a hard cap and the deciding precision is then
    // confirmed at twice itself.
    const long factor = std::max<long>(2, prec.escalation_factor);
    const long bits_cap = 64 * prec.bits;
    for (const Real& r : pts) {
        bool decided = false;
        for (long bits = prec.bits; bits <= bits_cap && !decided; bits *= factor) {
            PrecisionConfig p(bits, prec.escalation_factor, prec.max_terms);
            Modulus m(r.rounded_to(bits + 8));
            BoundEval be = bound_eval(family, m, p, n);
            Real m1 = (be.target.v - be.lower.v) - (be.target.e + be.lower.e);
            Real m2 = (be.upper.v - be.target.v) - (be.target.e + be.upper.e);
            Real margin = min(m1, m2);
            if (margin > 0) {
                if (bits > prec.bits) {
                    // confirm the escalated verdict at twice the precision
                    PrecisionConfig p2(2 * bits, prec.escalation_factor, prec.max_terms);
                    BoundEval be2 = bound_eval(family, m.at_prec(2 * bits + 8), p2, n);
                    Real c1 = (be2.target.v - be2.lower.v) - (be2.target.e + be2.lower.e);
                    Real c2 = (be2.upper.v - be2.target.v) - (be2.target.e + be2.upper.e);
                    if (!(min(c1, c2) > 0)) {
                        rep.status = VerificationReport::Status::fail;
                        rep.witness = "r=" + r.str_digits(20);
                        rep.note = "escalated verdict not confirmed";
                        rep.elapsed_s = t.stop();
                        return rep;
                    }
                }
                if (!have_margin || margin < min_margin) {
                    min_margin = margin.rounded_to(prec.bits);
                    have_margin = true;
                }
                decided = true;
                break;
            }
            // certified violation?
            Real v1 = (be.lower.v - be.target.v) - (be.target.e + be.lower.e);
            Real v2 = (be.target.v - be.upper.v) - (be.target.e + be.upper.e);
            if (v1 > 0 || v2 > 0) {
                rep.status = VerificationReport::Status::fail;
                rep.witness = "r=" + r.str_digits(20) + " L=" + be.lower.v.str_digits(25) +
                              " T=" + be.target.v.str_digits(25) + " U=" + be.upper.v.str_digits(25);
                rep.note = "certified violation";
                rep.elapsed_s = t.stop();
                return rep;
            }
        }
        if (!decided) {
            rep.status = VerificationReport::Status::fail;
            rep.witness = "r=" + r.str_digits(20);
            rep.note = "indeterminate after escalation to " + std::to_string(bits_cap) + " bits";
            rep.elapsed_s = t.stop();
            return rep;
        }
    }
    rep.status = VerificationReport::Status::pass;
    rep.min_margin = detail::fmt_margin(min_margin);
    rep.elapsed_s = t.stop();
    return rep;
}

inline VerificationReport verify_sharpness(const SharpnessCase& c,
                                           const PrecisionConfig& prec) {
    detail::Timer t;
    VerificationReport rep;
    rep.claim_id = c.claim_id;
    rep.kind = "sharpness";
    rep.precision_bits = prec.bits;
    rep.grid = std::string("dyadic sweep toward r=") + (c.end == 0 ? "0" : "1") +
               ", k <= " + std::to_string(prec.bits / 2);
    SharpnessResult res = sharpness_witness(c, prec);
    if (res.found) {
        rep.status = VerificationReport::Status::pass;
        rep.witness = "r=" + res.witness_r.str_digits(20) +
                      " certified violation=" + res.violation.str_digits(6);
        rep.min_margin = res.violation.str_digits(6);
        if (!c.substitutes.empty())
            rep.note = "reachable at this precision (substitutes unnecessary)";
    } else if (!c.substitutes.empty()) {
        rep.status = VerificationReport::Status::not_reachable;
        rep.note = "equality attained at log speed; substitute evidence: " + c.substitutes;
    } else {
        rep.status = VerificationReport::Status::fail;
        rep.note = "no witness found though the constant is polynomially sharp";
    }
    rep.elapsed_s = t.stop();
    return rep;
}

// ---- suites ----

enum class Suite { acceptance, conjecture, full };

inline Suite parse_suite(const std::string& s) {
    if (s == "acceptance") return Suite::acceptance;
    if (s == "conjecture") return Suite::conjecture;
    if (s == "full") return Suite::full;
    throw std::invalid_argument("unknown suite: " + s);
}

namespace detail {

inline void add_registry_claims(std::vector<VerificationReport>& out,
                                const PrecisionConfig& prec,
                                const GridSpec& sweep, const GridSpec& convex_grid,
                                const ClaimFilter& want) {
    struct Inst {
        std::string name;
        FnParam param;
    };
    std::vector<Inst> insts;
    for (const auto& info : list_functions()) {
        if (!info.needs_param) {
            insts.push_back({info.name, {}});
        } else if (info.name == "g") {
            insts.push_back({"g", exact::frac(1, 320)});
            insts.push_back({"g", exact::frac(1, 4)});
            insts.push_back({"g", exact::Rational(1)});
        } else {
            insts.push_back({info.name, exact::Rational(1)});
            insts.push_back({info.name, exact::Rational(2)});
        }
    }
    for (const auto& inst : insts) {
        const ClaimSet claims = fn_claims(inst.name, inst.param);
        const std::string tag = param_tag(inst.name, inst.param);
        const std::string prefix = claim_prefix(inst.name) + "-" + tag;
        if (claims.monotone != Monotone::none)
            emit(out, want, prefix + "-monotone", [&] {
                return verify_monotone(prefix + "-monotone", inst.name, inst.param,
                                       claims.monotone, sweep, prec);
            });
        if (claims.convexity != Convexity::none)
            emit(out, want, prefix + "-convexity", [&] {
                return verify_convexity(prefix + "-convexity", inst.name, inst.param,
                                        claims.convexity, convex_grid, prec);
            });
        if (claims.range_lo || claims.range_hi)
            emit(out, want, prefix + "-range", [&] {
                return verify_range(prefix + "-range", inst.name, inst.param, claims,
                                    sweep, prec);
            });
        if (claims.strict_sign)
            emit(out, want, prefix + "-sign", [&] {
                return verify_strict_sign(prefix + "-sign", inst.name, inst.param,
                                          *claims.strict_sign, sweep, prec);
            });
        if (claims.abs_monotone) {
            std::string key = inst.name;
            if (inst.name == "h2")
                key = "h2:" + exact::to_frac_string(*inst.param).substr(0, 1);
            emit(out, want, prefix + "-absmonotone", [&] {
                return verify_coeff_positivity(prefix + "-absmonotone", key, 500);
            });
        }
    }
}

inline void add_exact_claims(std::vector<VerificationReport>& out,
                             const PrecisionConfig& prec, const ClaimFilter& want) {
    using exact::SequenceId;
    using exact::frac;
    using exact::Rational;
    emit(out, want, "Lem2.4.1-c-decreasing",
         [&] { return verify_sequence("Lem2.4.1-c-decreasing", SequenceId::c, false, 10000); });
    emit(out, want, "Lem2.4.1-c-limit", [&] {
        return verify_seq_limit_trend("Lem2.4.1-c-limit", SequenceId::c,
                                      ConstExpr::inv_pi(Rational(2)), true, prec);
    });
    emit(out, want, "Lem2.4.2-ctilde-decreasing", [&] {
        return verify_sequence("Lem2.4.2-ctilde-decreasing", SequenceId::c_tilde, false, 10000);
    });
    emit(out, want, "Lem2.4.2-ctilde-limit", [&] {
        return verify_seq_limit_trend("Lem2.4.2-ctilde-limit", SequenceId::c_tilde,
                                      ConstExpr::inv_pi(frac(88, 8069)), true, prec);
    });
    emit(out, want, "Lem2.4.3-d-increasing",
         [&] { return verify_sequence("Lem2.4.3-d-increasing", SequenceId::d, true, 10000); });
    emit(out, want, "Lem2.4.3-d-limit", [&] {
        return verify_seq_limit_trend("Lem2.4.3-d-limit", SequenceId::d,
                                      ConstExpr::rat(Rational(2549)) -
                                          ConstExpr::inv_pi(Rational(5760)),
                                      false, prec);
    });
    emit(out, want, "Lem2.3-b-closedform",
         [&] { return verify_seq_closed_form("Lem2.3-b-closedform", SequenceId::b, 1000); });
    emit(out, want, "Lem2.3-C-closedform",
         [&] { return verify_seq_closed_form("Lem2.3-C-closedform", SequenceId::C, 1000); });
    emit(out, want, "Lem2.4.3-d-closedform",
         [&] { return verify_seq_closed_form("Lem2.4.3-d-closedform", SequenceId::d, 1000); });
    emit(out, want, "Lem2.3-C-increasing",
         [&] { return verify_sequence("Lem2.3-C-increasing", SequenceId::C, true, 10000); });
    emit(out, want, "Lem2.3-b-positive",
         [&] { return verify_sequence_positive("Lem2.3-b-positive", SequenceId::b, 0, 1000); });
    emit(out, want, "Th1.7.2-atilde-positive", [&] {
        return verify_sequence_positive("Th1.7.2-atilde-positive", SequenceId::a_tilde, 2, 1000);
    });

    // atilde_{m+1} = (3/4 - c_m)/(2m+3), exact, ties the two families together
    emit(out, want, "Th1.7.2-atilde-c-identity", [&] {
        Timer t;
        VerificationReport rep;
        rep.claim_id = "Th1.7.2-atilde-c-identity";
        rep.kind = "sequence-identity";
        rep.grid = "m <= 1000 (exact)";
        rep.status = VerificationReport::Status::pass;
        rep.min_margin = "exact";
        for (std::size_t mm = 0; mm <= 1000; mm++) {
            exact::Rational lhs = exact::seq(SequenceId::a_tilde, mm + 1);
            exact::Rational rhs = (frac(3, 4) - exact::seq(SequenceId::c, mm)) /
                                  Rational(2 * static_cast<long>(mm) + 3);
            if (lhs != rhs) {
                rep.status = VerificationReport::Status::fail;
                rep.witness = "m=" + std::to_string(mm);
                rep.min_margin.clear();
                break;
            }
        }
        rep.elapsed_s = t.stop();
        return rep;
    });

    // printed coefficient displays, re-derived mechanically
    emit(out, want, "Sec5.vi-Serf-coeffs", [&] {
        return verify_series_coeffs(
            "Sec5.vi-Serf-coeffs", "f",
            {frac(1, 320), frac(517, 201600), frac(767341, 387072000),
             frac("4277471797", "2682408960000"),
             frac("1851483120061", "1394852659200000"),
             frac("2989339649544551", "2636271525888000000")});
    });
    emit(out, want, "Sec5.vi-SerG-coeffs", [&] {
        return verify_series_coeffs(
            "Sec5.vi-SerG-coeffs", "G",
            {frac(3, 4), frac(1, 320), frac(517, 201600), frac(767341, 387072000),
             frac("4277471797", "2682408960000"),
             frac("1851483120061", "1394852659200000"),
             frac("2989339649544551", "2636271525888000000")});
    });
    emit(out, want, "Sec5.vi-Ser1-coeffs", [&] {
        return verify_series_coeffs(
            "Sec5.vi-Ser1-coeffs", "h11",
            {frac(79, 960), frac(421, 12096), frac(690961, 33177600),
             frac(18414493, 1277337600), frac("164673431213", "15216574464000")});
    });
    emit(out, want, "Sec5.vi-Ser2-coeffs", [&] {
        return verify_series_coeffs(
            "Sec5.vi-Ser2-coeffs", "h12",
            {frac(517, 604800), frac(239497, 232243200), frac(741527, 709632000),
             frac("168874886801", "167382319104000"),
             frac("2405137262477", "2510734786560000")});
    });

    // the quoted closed form for the h10 series, against the algebraic route
    emit(out, want, "Sec5.v-h10-series-closedform", [&] {
        Timer t;
        VerificationReport rep;
        rep.claim_id = "Sec5.v-h10-series-closedform";
        rep.kind = "series-coeffs";
        rep.grid = "orders 0..100 (exact)";
        rep.status = VerificationReport::Status::pass;
        rep.min_margin = "exact";
        exact::PowerSeries s = build_registry_series("h10", 100);
        for (long n = 0; n <= 100; n++) {
            exact::Rational quoted =
                Rational(244712) * n * n * n + Rational(749388) * n * n +
                Rational(408406) * n - 161595;
            quoted /= Rational(2 * n + 1) * (2 * n + 3) * (2 * n + 5) * (2 * n + 7);
            if (s[static_cast<std::size_t>(n)] * 241920 != quoted) {
                rep.status = VerificationReport::Status::fail;
                rep.witness = "n=" + std::to_string(n);
                rep.min_margin.clear();
                break;
            }
        }
        rep.elapsed_s = t.stop();
        return rep;
    });
}

inline void add_invariant_claims(std::vector<VerificationReport>& out,
                                 const PrecisionConfig& prec, const ClaimFilter& want) {
    for (const auto& info : list_functions()) {
        if (!info.has_series) continue;
        FnParam param;
        if (info.name == "g") param = exact::frac(1, 4);
        if (info.name == "h2" || info.name == "h3") param = exact::Rational(1);
        const std::string id = "Inv-dualpath-" + info.name;
        emit(out, want, id,
             [&] { return verify_dual_path(id, info.name, param, 100, prec); });
    }
    emit(out, want, "Th1.6.3-G-identity",
         [&] { return verify_g_identity("Th1.6.3-G-identity", 1000, prec); });
    emit(out, want, "Inv-K-series-vs-agm",
         [&] { return verify_k_routes("Inv-K-series-vs-agm", 1000, prec); });
    emit(out, want, "Inv-dKdr-fd",
         [&] { return verify_derivative_fd("Inv-dKdr-fd", true, 100, prec); });
    emit(out, want, "Inv-dEdr-fd",
         [&] { return verify_derivative_fd("Inv-dEdr-fd", false, 100, prec); });

    // KArth1 at n=1 collapses to KArth3 exactly; two codepaths, one object
    emit(out, want, "Inv-KArth1n1-eq-KArth3", [&] {
        Timer t;
        VerificationReport rep;
        rep.claim_id = "Inv-KArth1n1-eq-KArth3";
        rep.kind = "identity";
        rep.precision_bits = prec.bits;
        GridSpec g = GridSpec::uniform_n(100, "0.02", "0.98");
        rep.grid = g.describe();
        rep.status = VerificationReport::Status::pass;
        const Real tol_rel = Real::pow2(-(prec.bits - 8), prec.bits + 8);
        for (const Real& r : make_grid(g, prec.bits + 8)) {
            Modulus m(r);
            BoundEval a = bound_eval("KArth1", m, prec, 1);
            BoundEval b = bound_eval("KArth3", m, prec, 1);
            Real dl = abs(a.lower.v - b.lower.v);
            Real du = abs(a.upper.v - b.upper.v);
            Real tol_l = tol_rel + a.lower.e + b.lower.e;
            Real tol_u = tol_rel + a.upper.e + b.upper.e;
            if (!(dl <= tol_l) || !(du <= tol_u)) {
                rep.status = VerificationReport::Status::fail;
                rep.witness = "r=" + r.str_digits(20);
                break;
            }
        }
        rep.elapsed_s = t.stop();
        return rep;
    });
}

inline void add_bound_claims(std::vector<VerificationReport>& out,
                             const PrecisionConfig& prec, const GridSpec& sweep,
                             const ClaimFilter& want) {
    auto family = [&](const std::string& id, const char* fam, long n) {
        emit(out, want, id, [&, fam, n] { return verify_bounds(id, fam, n, sweep, prec); });
    };
    family("Eq6-AVV-bounds", "AVV", 0);
    family("Eq7-AQ-bounds", "AQ", 0);
    family("Eq9-KS-bounds", "KS", 0);
    family("Th1.6.4-Ineq1-bounds", "Ineq1", 0);
    family("Th1.6.4-Ineq2-bounds", "Ineq2", 0);
    for (long n : {1L, 2L, 3L, 4L, 8L})
        family("Th1.7-KArth1n" + std::to_string(n) + "-bounds", "KArth1", n);
    family("Th1.7-KArth2-bounds", "KArth2", 0);
    family("Th1.7-KArth3-bounds", "KArth3", 0);
    family("Eq28-Bound1OfK-bounds", "Bound1OfK", 0);
    family("Th3.1-EK_PQ-bounds", "EK_PQ", 0);
    family("Th3.2.4-F24-bounds", "F24", 0);
    family("Col3.3-F25-bounds", "F25", 0);

    for (const auto& c : sharpness_cases())
        emit(out, want, c.claim_id, [&] { return verify_sharpness(c, prec); });

    // crossover radius and the bound ordering flip around it
    emit(out, want, "Sec5.ii-crossover-r0", [&] {
        Timer t;
        VerificationReport rep;
        rep.claim_id = "Sec5.ii-crossover-r0";
        rep.kind = "crossover";
        rep.precision_bits = prec.bits;
        rep.grid = "bisection to 2^-(p+20)";
        Crossover cx = crossover_r0(prec);
        Real tol = Real::pow2(-(prec.bits - 6), prec.bits + 8);
        if (cx.residual <= tol) {
            rep.status = VerificationReport::Status::pass;
            rep.min_margin = cx.residual.str_digits(4);
            rep.witness = "r0=" + cx.r0.str_digits(24);
        } else {
            rep.status = VerificationReport::Status::fail;
            rep.witness = "r0=" + cx.r0.str_digits(24) + " residual=" + cx.residual.str_digits(8);
        }
        rep.elapsed_s = t.stop();
        return rep;
    });
    emit(out, want, "Sec5.ii-crossover-order", [&] {
        Timer t2;
        VerificationReport ord;
        ord.claim_id = "Sec5.ii-crossover-order";
        ord.kind = "crossover";
        ord.precision_bits = prec.bits;
        ord.grid = "r0/2 and (1+r0)/2";
        ord.status = VerificationReport::Status::pass;
        const long wb = prec.bits + 16;
        Crossover cx = crossover_r0(prec);
        auto diff_at = [&](const Real& r) {
            Modulus m(r.rounded_to(wb));
            BoundEval i1 = bound_eval("Ineq1", m, prec);
            BoundEval i2 = bound_eval("Ineq2", m, prec);
            // Ineq2 bounds K; normalize to the 2K/pi scale
            Approx l2 = i2.lower * 2 / pi_approx(wb);
            return i1.lower - l2;
        };
        Approx below = diff_at(cx.r0 / 2);
        Approx above = diff_at((1 + cx.r0) / 2);
        if (!(below.v - below.e > 0) || !(above.v + above.e < 0)) {
            ord.status = VerificationReport::Status::fail;
            ord.witness = "below=" + below.v.str_digits(10) + " above=" + above.v.str_digits(10);
        } else {
            ord.witness = "below=" + below.v.str_digits(8) + " above=" + above.v.str_digits(8);
            ord.min_margin = fmt_margin(min(below.v - below.e, -(above.v + above.e)));
        }
        ord.elapsed_s = t2.stop();
        return ord;
    });

    // sign-change scans: these combinations genuinely flip sign, so neither
    // one-sided comparison of the adjacent bound families can hold globally
    for (const auto& sc_case :
         {std::tuple<const char*, int, int>{"h9", +1, -1},
          std::tuple<const char*, int, int>{"h10", -1, +1}}) {
        const std::string id = std::string("Sec5.v-") + std::get<0>(sc_case) + "-signchange";
        emit(out, want, id, [&, sc_case] {
            Timer t;
            VerificationReport rep;
            rep.claim_id = id;
            rep.kind = "sign-scan";
            rep.precision_bits = prec.bits;
            rep.grid = "200-pt scan + bisection";
            SignScan sc = sign_change_scan(std::get<0>(sc_case), 200, prec);
            if (sc.found && sc.sign_lo == std::get<1>(sc_case) &&
                sc.sign_hi == std::get<2>(sc_case)) {
                rep.status = VerificationReport::Status::pass;
                rep.witness = "sign flips inside [" + sc.lo.str_digits(12) + ", " +
                              sc.hi.str_digits(12) + "]";
            } else {
                rep.status = VerificationReport::Status::fail;
                rep.note = sc.found ? "unexpected sign pattern" : "no certified sign change found";
            }
            rep.elapsed_s = t.stop();
            return rep;
        });
    }

    // domination chains between families that share a side
    emit(out, want, "Inv-chain-Ineq1-dominates-AQ", [&] {
        Timer t;
        VerificationReport rep;
        rep.claim_id = "Inv-chain-Ineq1-dominates-AQ";
        rep.kind = "chain";
        rep.precision_bits = prec.bits;
        GridSpec g = GridSpec::uniform_n(200, "0.01", "0.99");
        rep.grid = g.describe();
        rep.status = VerificationReport::Status::pass;
        for (const Real& r : make_grid(g, prec.bits + 8)) {
            Modulus m(r);
            BoundEval a = bound_eval("Ineq1", m, prec);
            BoundEval b = bound_eval("AQ", m, prec);
            // sharper family: lower above, upper below
            if (!(a.lower.v - a.lower.e >= b.lower.v + b.lower.e) ||
                !(a.upper.v + a.upper.e <= b.upper.v - b.upper.e)) {
                rep.status = VerificationReport::Status::fail;
                rep.witness = "r=" + r.str_digits(20);
                break;
            }
        }
        rep.elapsed_s = t.stop();
        return rep;
    });
}

inline void add_negative_controls(std::vector<VerificationReport>& out,
                                  const PrecisionConfig& prec, const ClaimFilter& want) {
    GridSpec small{300, "0.01", "0.99", GridSpacing::uniform};
    std::vector<VerificationReport> ran;
    if (!want || want("CTRL-f-monotone-reversed")) {
        VerificationReport a = verify_monotone("CTRL-f-monotone-reversed", "f", {},
                                               Monotone::decreasing, small, prec);
        a.control = true;
        a.note = "negative control: claims f decreasing, must fail; " + a.note;
        ran.push_back(a);
    }
    if (!want || want("CTRL-c-claimed-increasing")) {
        VerificationReport b = verify_sequence("CTRL-c-claimed-increasing",
                                               exact::SequenceId::c, true, 100);
        b.control = true;
        b.note = "negative control: claims c_n increasing, must fail";
        ran.push_back(b);
    }
    if (!want || want("CTRL-Serf-perturbed")) {
        VerificationReport c = verify_series_coeffs(
            "CTRL-Serf-perturbed", "f",
            {exact::frac(1, 320), exact::frac(517, 201601)});
        c.control = true;
        c.note = "negative control: perturbed printed coefficient, must fail";
        ran.push_back(c);
    }
    for (const auto& rep : ran) {
        if (rep.status != VerificationReport::Status::fail) {
            std::fprintf(stderr,
                         "FATAL: negative control %s did not fail; harness is broken\n",
                         rep.claim_id.c_str());
            std::abort();
        }
        out.push_back(rep);
    }
}

inline void add_conjecture_claims(std::vector<VerificationReport>& out,
                                  const PrecisionConfig& prec,
                                  const GridSpec& sweep, const GridSpec& convex_grid,
                                  const ClaimFilter& want) {
    std::vector<VerificationReport> batch;
    emit(batch, want, "Conj5.1.1-f-convexity", [&] {
        return verify_convexity("Conj5.1.1-f-convexity", "f", {}, Convexity::convex,
                                convex_grid, prec);
    });
    emit(batch, want, "Conj5.1.2-h11-monotone", [&] {
        return verify_monotone("Conj5.1.2-h11-monotone", "h11", {},
                               Monotone::increasing, sweep, prec);
    });
    emit(batch, want, "Conj5.1.2-h11-convexity", [&] {
        return verify_convexity("Conj5.1.2-h11-convexity", "h11", {},
                                Convexity::convex, convex_grid, prec);
    });
    emit(batch, want, "Conj5.1.2-h11-range", [&] {
        ClaimSet cs;
        cs.monotone = Monotone::increasing;
        cs.range_lo = ConstExpr::rat(exact::frac(79, 960));
        cs.range_hi = ConstExpr::log_pi_half(exact::Rational(1));
        return verify_range("Conj5.1.2-h11-range", "h11", {}, cs, sweep, prec);
    });
    emit(batch, want, "Conj5.1.2-h12-monotone", [&] {
        return verify_monotone("Conj5.1.2-h12-monotone", "h12", {},
                               Monotone::increasing, sweep, prec);
    });
    emit(batch, want, "Conj5.1.2-h12-convexity", [&] {
        return verify_convexity("Conj5.1.2-h12-convexity", "h12", {},
                                Convexity::convex, convex_grid, prec);
    });
    emit(batch, want, "Conj5.1.2-h12-range", [&] {
        ClaimSet cs;
        cs.monotone = Monotone::increasing;
        cs.range_lo = ConstExpr::rat(exact::frac(517, 604800));
        return verify_range("Conj5.1.2-h12-range", "h12", {}, cs, sweep, prec);
    });
    for (const char* nm : {"f", "G", "f7", "h11", "h12", "h13"}) {
        const std::string id = std::string("Conj5.1.3-coeffpos-") + nm;
        emit(batch, want, id, [&, nm] { return verify_coeff_positivity(id, nm, 200); });
    }
    emit(batch, want, "ConjEq31-Conj1-bounds",
         [&] { return verify_bounds("ConjEq31-Conj1-bounds", "Conj1", 0, sweep, prec); });
    emit(batch, want, "ConjEq32-Conj2-bounds",
         [&] { return verify_bounds("ConjEq32-Conj2-bounds", "Conj2", 0, sweep, prec); });
    for (auto& rep : batch) {
        rep.gating = false;
        rep.note = rep.note.empty() ? "conjecture evidence (non-gating)"
                                    : rep.note + "; conjecture evidence (non-gating)";
        out.push_back(rep);
    }
}

}  // namespace detail

inline std::vector<VerificationReport> run_all(Suite suite, const PrecisionConfig& prec,
                                               long sweep_n = 10000, long convex_n = 1000,
                                               const ClaimFilter& want = {}) {
    std::vector<VerificationReport> out;
    GridSpec sweep = GridSpec::composite_default();
    sweep.n_points = sweep_n;
    const GridSpec convex_grid = GridSpec::uniform_n(convex_n);
    if (suite == Suite::acceptance || suite == Suite::full) {
        detail::add_registry_claims(out, prec, sweep, convex_grid, want);
        detail::add_exact_claims(out, prec, want);
        detail::add_invariant_claims(out, prec, want);
        detail::add_bound_claims(out, prec, sweep, want);
        detail::add_negative_controls(out, prec, want);
    }
    if (suite == Suite::conjecture || suite == Suite::full) {
        detail::add_conjecture_claims(out, prec, sweep, convex_grid, want);
    }
    std::sort(out.begin(), out.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  return a.claim_id < b.claim_id;
              });
    return out;
}

// Overall verdict: gating claims all pass; negative controls all fail.
inline bool aggregate_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) {
        if (r.control) {
            if (r.status != VerificationReport::Status::fail) return false;
        } else if (r.gating) {
            if (r.status == VerificationReport::Status::fail) return false;
        }
    }
    return true;
}

}  // namespace ellint
