// Acceptance gate: twelve criteria, one pass/fail line each, exit 0 only if
// every gated criterion holds. Grid sweeps and escalation all run at the
// pinned defaults (128 bits, 10^4-point composite grid, 10^3-point uniform
// convexity grid); tolerances live next to each check.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "ellint/verifier.hpp"

using namespace ellint;

namespace {

int g_failures = 0;

void line(int idx, bool ok, const std::string& what, double secs, double budget) {
    const bool in_budget = budget <= 0 || secs <= budget;
    if (!ok || !in_budget) g_failures++;
    std::printf("criterion %2d: %s  %s (%.2fs%s)\n", idx,
                ok ? (in_budget ? "PASS" : "FAIL") : "FAIL", what.c_str(), secs,
                !ok            ? ""
                : in_budget    ? ""
                               : ", over budget");
}

using ReportMap = std::map<std::string, const VerificationReport*>;

bool all_pass(const ReportMap& by_id, const std::vector<std::string>& ids,
              double* secs, std::string* why) {
    bool ok = true;
    for (const auto& id : ids) {
        auto it = by_id.find(id);
        if (it == by_id.end()) {
            ok = false;
            *why += " missing:" + id;
            continue;
        }
        *secs += it->second->elapsed_s;
        if (it->second->status != VerificationReport::Status::pass) {
            ok = false;
            *why += " " + id + "=" + status_name(it->second->status);
        }
    }
    return ok;
}

Real eval_at(const char* name, const char* r, const PrecisionConfig& prec,
             const FnParam& p = {}) {
    return fn_eval(name, Modulus(Real::from_decimal(r, prec.bits + 32)), prec, p).value;
}

}  // namespace

int main() {
    const PrecisionConfig prec(128);
    detail::Timer total;

    std::printf("running full verification suite (10^4-point sweeps, 128 bits)...\n");
    detail::Timer suite_t;
    std::vector<VerificationReport> reports = run_all(Suite::full, prec, 10000, 1000);
    const double suite_secs = suite_t.stop();
    ReportMap by_id;
    for (const auto& r : reports) by_id[r.claim_id] = &r;
    std::printf("suite: %zu reports in %.1fs\n\n", reports.size(), suite_secs);

    // 1. printed Maclaurin coefficients re-derived exactly
    {
        double secs = 0;
        std::string why;
        bool ok = all_pass(by_id,
                           {"Sec5.vi-Serf-coeffs", "Sec5.vi-SerG-coeffs",
                            "Sec5.vi-Ser1-coeffs", "Sec5.vi-Ser2-coeffs"},
                           &secs, &why);
        line(1, ok, "exact coefficient reproduction (f, G, h11, h12)" + why, secs, 5);
    }

    // 2. b_n closed form and positivity, n <= 1000
    {
        double secs = 0;
        std::string why;
        bool ok = all_pass(by_id, {"Lem2.3-b-closedform", "Lem2.3-b-positive"}, &secs, &why);
        line(2, ok, "b_n closed-form identity and positivity" + why, secs, 5);
    }

    // 3. sequence monotonicity to 10^4, exact initials, limit-gap shrinkage
    {
        detail::Timer t;
        using exact::SequenceId;
        bool init = exact::seq(SequenceId::c, 0) == exact::frac(3, 4) &&
                    exact::seq(SequenceId::c_tilde, 0) == exact::frac(217875, 50475008) &&
                    exact::seq(SequenceId::d, 0) == exact::frac(4355, 84);
        double secs = t.stop();
        std::string why = init ? "" : " initial-values";
        bool ok = all_pass(by_id,
                           {"Lem2.4.1-c-decreasing", "Lem2.4.1-c-limit",
                            "Lem2.4.2-ctilde-decreasing", "Lem2.4.2-ctilde-limit",
                            "Lem2.4.3-d-increasing", "Lem2.4.3-d-limit"},
                           &secs, &why) &&
                  init;
        line(3, ok, "sequence directions, initials, limit approach" + why, secs, 30);
    }

    // 4. the twelve inequality families on the full grid
    {
        double secs = 0;
        std::string why;
        bool ok = all_pass(by_id,
                           {"Eq6-AVV-bounds", "Eq7-AQ-bounds", "Eq9-KS-bounds",
                            "Th1.6.4-Ineq1-bounds", "Th1.6.4-Ineq2-bounds",
                            "Th1.7-KArth1n1-bounds", "Th1.7-KArth1n2-bounds",
                            "Th1.7-KArth1n3-bounds", "Th1.7-KArth1n4-bounds",
                            "Th1.7-KArth2-bounds", "Th1.7-KArth3-bounds",
                            "Th3.1-EK_PQ-bounds", "Th3.2.4-F24-bounds",
                            "Col3.3-F25-bounds", "Eq28-Bound1OfK-bounds"},
                           &secs, &why);
        line(4, ok, "inequality sweeps, strict margins" + why, secs, 300);
    }

    // 5. endpoint constants via series at r = 1e-3, |gap| <= 1e-5
    {
        detail::Timer t;
        const Real tol = Real::from_decimal("1e-5", 64);
        struct Probe {
            const char* name;
            ConstExpr target;
            FnParam param;
        };
        using exact::frac;
        const std::vector<Probe> probes = {
            {"f", ConstExpr::rat(frac(1, 320)), {}},
            {"g2", ConstExpr::rat(frac(79, 320)), {}},
            {"f19", ConstExpr::rat(frac(41, 2048)), {}},
            {"f22", ConstExpr::pi(frac(1, 30)), {}},
            {"f23", ConstExpr::pi(frac(4, 3)), {}},
            {"f24", ConstExpr::rat(frac(1, 40)), {}},
            {"h4", ConstExpr::pi(frac(871, 96768)), {}},
            {"f18", ConstExpr::pi(frac(41, 4096)), {}},
            {"h2", ConstExpr::rat(frac(3, 320)), exact::Rational(1)},
        };
        bool ok = true;
        std::string why;
        for (const auto& p : probes) {
            Real gap = abs(eval_at(p.name, "0.001", prec, p.param) - p.target.eval(160));
            if (!(gap < tol)) {
                ok = false;
                why += std::string(" ") + p.name + " gap=" + gap.str_digits(3);
            }
        }
        line(5, ok, "endpoint constants at r=1e-3" + why, t.stop(), 0);
    }

    // 6. every registered monotonicity/convexity claim
    {
        double secs = 0;
        std::string why;
        bool ok = true;
        long n_claims = 0;
        for (const auto& rep : reports) {
            const bool is_mono = rep.claim_id.find("-monotone") != std::string::npos;
            const bool is_cvx = rep.claim_id.find("-convexity") != std::string::npos;
            if (!is_mono && !is_cvx) continue;
            if (rep.control || !rep.gating) continue;
            n_claims++;
            secs += rep.elapsed_s;
            if (rep.status != VerificationReport::Status::pass) {
                ok = false;
                why += " " + rep.claim_id;
            }
        }
        ok = ok && n_claims >= 40;  // all instances present, incl. g at 3 params
        line(6, ok,
             "monotonicity/convexity suite (" + std::to_string(n_claims) + " claims)" + why,
             secs, 600);
    }

    // 7. sharpness witnesses: 2 named reachable, 2 named substituted
    {
        detail::Timer t;
        bool ok = true;
        std::string why;
        auto expect = [&](const std::string& id, bool reachable) {
            auto it = by_id.find(id);
            if (it == by_id.end()) {
                ok = false;
                why += " missing:" + id;
                return;
            }
            auto want = reachable ? VerificationReport::Status::pass
                                  : VerificationReport::Status::not_reachable;
            if (it->second->status != want) {
                ok = false;
                why += " " + id + "=" + status_name(it->second->status);
            }
        };
        expect("Th1.6.4-Ineq1-lower-sharp", true);    // alpha -> 1/320 + 1e-3
        expect("Th1.7.4-KArth3-upper-sharp", true);   // eta -> 1/80 + 1e-3
        expect("Th1.6.4-Ineq1-upper-sharp", false);   // beta = 1/4, log-speed
        expect("Th1.7.4-KArth3-lower-sharp", false);  // delta = 1 - 8/(3pi)
        // witness location for the hardened-alpha case: near r ~ 0.1
        for (const auto& c : sharpness_cases()) {
            if (c.claim_id != "Th1.6.4-Ineq1-lower-sharp") continue;
            SharpnessResult res = sharpness_witness(c, prec);
            if (!res.found || res.witness_r > Real::from_decimal("0.3", 64) ||
                res.witness_r < Real::from_decimal("0.01", 64)) {
                ok = false;
                why += " alpha-witness-off (r=" + res.witness_r.str_digits(6) + ")";
            }
        }
        // the substitute evidence itself must have passed
        std::string why2;
        double secs2 = 0;
        ok = all_pass(by_id, {"Th1.6.3-f-monotone", "Th1.6.3-f-range"}, &secs2, &why2) && ok;
        line(7, ok, "sharpness witnesses and substitutes" + why + why2, t.stop(), 0);
    }

    // 8. crossover radius and bound-ordering flip
    {
        detail::Timer t;
        Crossover cx = crossover_r0(prec);
        bool res_ok = cx.residual <= Real::pow2(-124, 64);
        double secs = t.stop();
        std::string why = res_ok ? "" : " residual=" + cx.residual.str_digits(4);
        bool ok = all_pass(by_id, {"Sec5.ii-crossover-r0", "Sec5.ii-crossover-order"},
                           &secs, &why) &&
                  res_ok;
        line(8, ok, "crossover r0, residual <= 2^-124, ordering flip" + why, secs, 0);
    }

    // 9. h9/h10 sign structure: scaled limits at r = 1e-2, signs near 1
    {
        detail::Timer t;
        bool ok = true;
        std::string why;
        const Real r2 = Real::from_decimal("1e-4", 200);  // x at r = 1e-2

        Real h9v = eval_at("h9", "0.01", prec);
        Real lim9 = (ConstExpr::rat(exact::frac(2133, 960)) -
                     ConstExpr::inv_pi(exact::Rational(6)))
                        .eval(160);
        Real gap9 = abs(3 * h9v / (r2 * r2) - lim9);
        if (!(gap9 < Real::from_decimal("1e-3", 64))) {
            ok = false;
            why += " h9-limit gap=" + gap9.str_digits(3);
        }
        EvalResult h9n = fn_eval("h9", Modulus(Real::from_decimal("0.999999", 200)), prec);
        if (!(h9n.value + h9n.err_bound < 0)) {
            ok = false;
            why += " h9(1-1e-6) not certified negative";
        }

        Real h10v = eval_at("h10", "0.01", prec);
        Real scaled10 = 241920 * h10v / (r2 * r2 * r2);
        if (!(abs(scaled10 + 1539) < 1)) {
            ok = false;
            why += " h10-limit scaled=" + scaled10.str_digits(8);
        }
        EvalResult h10n = fn_eval("h10", Modulus(Real::from_decimal("0.999999", 200)), prec);
        if (!(h10n.value - h10n.err_bound > 0)) {
            ok = false;
            why += " h10(1-1e-6) not certified positive";
        }
        double secs = t.stop();
        std::string why2;
        bool scans_ok =
            all_pass(by_id, {"Sec5.v-h9-signchange", "Sec5.v-h10-signchange"}, &secs, &why2);
        line(9, ok && scans_ok, "h9/h10 sign-change structure" + why + why2, secs, 0);
    }

    // 10. oracle agreement: K series vs AGM, dK/dr vs finite differences
    {
        double secs = 0;
        std::string why;
        bool ok = all_pass(by_id, {"Inv-K-series-vs-agm", "Inv-dKdr-fd", "Inv-dEdr-fd"},
                           &secs, &why);
        line(10, ok, "K route agreement and derivative cross-check" + why, secs, 0);
    }

    // 11. conjecture suite runs and stays non-gating
    {
        double secs = 0;
        bool ok = true;
        std::string why;
        long n_conj = 0, n_pass = 0;
        for (const auto& rep : reports) {
            if (rep.claim_id.rfind("Conj", 0) != 0) continue;
            n_conj++;
            secs += rep.elapsed_s;
            if (rep.gating) {
                ok = false;
                why += " " + rep.claim_id + " gating";
            }
            if (rep.status == VerificationReport::Status::pass) n_pass++;
        }
        ok = ok && n_conj >= 10;  // (31), (32), convexity/monotone evidence, coeff positivity
        line(11, ok,
             "conjecture suite non-gating (" + std::to_string(n_pass) + "/" +
                 std::to_string(n_conj) + " hold)" + why,
             secs, 0);
    }

    // 12. negative controls all fail
    {
        double secs = 0;
        bool ok = true;
        std::string why;
        long n_ctrl = 0;
        for (const auto& rep : reports) {
            if (!rep.control) continue;
            n_ctrl++;
            secs += rep.elapsed_s;
            if (rep.status != VerificationReport::Status::fail) {
                ok = false;
                why += " " + rep.claim_id + "=" + status_name(rep.status);
            }
        }
        ok = ok && n_ctrl == 3;
        line(12, ok, "negative controls rejected (" + std::to_string(n_ctrl) + "/3)" + why,
             secs, 0);
    }

    const bool agg = aggregate_pass(reports);
    if (!agg) g_failures++;
    std::printf("\naggregate suite verdict: %s\n", agg ? "PASS" : "FAIL");
    std::printf("acceptance: %s (%d failing criteria, %.1fs total)\n",
                g_failures == 0 ? "PASS" : "FAIL", g_failures, total.stop());
    return g_failures == 0 ? 0 : 1;
}
