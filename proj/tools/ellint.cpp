// Command-line front end: evaluation, exact coefficient derivation, bound
// comparison, claim verification, crossover/scan utilities, and a small
// benchmark. Exit codes: 0 success, 1 computational/verification failure,
// 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellint/verifier.hpp"

using nlohmann::json;
using namespace ellint;

namespace {

exact::Rational parse_rational(const std::string& s) {
    try {
        exact::Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational: " + s);
    }
}

json claims_json(const ClaimSet& c) {
    json j;
    j["monotone"] = c.monotone == Monotone::increasing   ? "increasing"
                    : c.monotone == Monotone::decreasing ? "decreasing"
                                                         : "none";
    j["convexity"] = c.convexity == Convexity::convex    ? "convex"
                     : c.convexity == Convexity::concave ? "concave"
                                                         : "none";
    j["range_lo"] = c.range_lo ? json(c.range_lo->str()) : json(nullptr);
    j["range_hi"] = c.range_hi ? json(c.range_hi->str()) : json(nullptr);
    if (c.strict_sign)
        j["strict_sign"] = {{"dir", c.strict_sign->first},
                            {"threshold", c.strict_sign->second.str()}};
    else
        j["strict_sign"] = nullptr;
    j["abs_monotone"] = c.abs_monotone;
    return j;
}

int dump_registry() {
    json out = json::array();
    for (const auto& e : list_functions()) {
        json j;
        j["name"] = e.name;
        j["param_arity"] = e.needs_param ? 1 : 0;
        j["source"] = e.source;
        if (!e.needs_param) {
            j["claims"] = claims_json(fn_claims(e.name));
        } else if (e.name == "g") {
            json inst = json::array();
            for (const char* c : {"1/320", "1/4", "1"}) {
                exact::Rational q = parse_rational(c);
                inst.push_back({{"param", c}, {"claims", claims_json(fn_claims("g", q))}});
            }
            j["instances"] = inst;
        } else {  // h2/h3: claim shape is the same for every admissible n
            j["instances"] = json::array(
                {{{"param", "1"}, {"claims", claims_json(fn_claims(e.name, exact::Rational(1)))}}});
        }
        out.push_back(j);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

// Split a "k=v k=v ..." witness into the (up to) three components the report
// schema expects; the tail is folded into the third slot.
json witness_triple(const std::string& w) {
    std::vector<std::string> parts;
    std::istringstream is(w);
    std::string tok;
    while (is >> tok) {
        if (parts.size() < 3)
            parts.push_back(tok);
        else
            parts.back() += " " + tok;
    }
    while (parts.size() < 3) parts.emplace_back("");
    return json::array({parts[0], parts[1], parts[2]});
}

int cmd_eval(const std::string& fn, const std::string& rstr,
             const std::string& param_str, long bits, long grid_n,
             const std::string& lo, const std::string& hi) {
    PrecisionConfig prec(bits);
    FnParam param;
    if (!param_str.empty()) param = parse_rational(param_str);

    if (grid_n > 0) {
        GridSpec gs;
        gs.n_points = grid_n;
        gs.lo = lo;
        gs.hi = hi;
        std::cout << "r,value,err_bound\n";
        for (const Real& r : make_grid(gs, prec.bits + 16)) {
            EvalResult v = fn_eval(fn, Modulus(r), prec, param);
            std::cout << r.rounded_to(prec.bits).str() << "," << v.value.str()
                      << "," << v.err_bound.str_digits(6) << "\n";
        }
        return 0;
    }
    Real r = Real::from_decimal(rstr, prec.bits + 16);
    EvalResult v = fn_eval(fn, Modulus(r), prec, param);
    std::cout << "value     = " << v.value.str() << "\n";
    std::cout << "err_bound = " << v.err_bound.str_digits(6) << "\n";
    std::cout << "terms     = " << v.terms_used << "\n";
    return 0;
}

int cmd_coeffs(const std::string& series, long order, const std::string& format) {
    exact::PowerSeries s = exact::paper_series(series, static_cast<std::size_t>(order));
    if (format == "json") {
        json j;
        j["series"] = series;
        j["order"] = order;
        json arr = json::array();
        for (long n = 0; n <= order; n++)
            arr.push_back(exact::to_frac_string(s[static_cast<std::size_t>(n)]));
        j["coefficients"] = arr;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (long n = 0; n <= order; n++) {
        if (n) std::cout << ", ";
        std::cout << exact::to_frac_string(s[static_cast<std::size_t>(n)]);
    }
    std::cout << "\n";
    return 0;
}

void print_bound_row(const std::string& family, const BoundEval& be, long digits) {
    Real ml = be.target.v - be.lower.v;
    Real mu = be.upper.v - be.target.v;
    std::cout << family << "\n"
              << "  lower  = " << be.lower.v.str_digits(digits) << "\n"
              << "  target = " << be.target.v.str_digits(digits) << "\n"
              << "  upper  = " << be.upper.v.str_digits(digits) << "\n"
              << "  margins: target-lower = " << ml.str_digits(6)
              << ", upper-target = " << mu.str_digits(6) << "\n";
}

int cmd_bounds(const std::string& rstr, const std::string& family, long bits, long n) {
    PrecisionConfig prec(bits);
    Modulus m(Real::from_decimal(rstr, prec.bits + 16));
    const long digits = 30;
    if (!family.empty()) {
        print_bound_row(family + (family == "KArth1" ? " (n=" + std::to_string(n) + ")" : ""),
                        bound_eval(family, m, prec, n), digits);
        return 0;
    }
    for (const std::string& f : bound_families()) {
        if (f == "KArth1") {
            for (long k = 1; k <= 4; k++)
                print_bound_row("KArth1 (n=" + std::to_string(k) + ")",
                                bound_eval(f, m, prec, k), digits);
        } else {
            print_bound_row(f, bound_eval(f, m, prec), digits);
        }
    }
    return 0;
}

int cmd_verify(const std::string& suite_s, const std::string& claim, long grid_n,
               long bits, const std::string& report_path) {
    PrecisionConfig prec(bits);
    Suite suite = parse_suite(suite_s);
    ClaimFilter want;
    if (!claim.empty())
        want = [claim](const std::string& id) { return id.find(claim) != std::string::npos; };
    const long convex_n = std::max<long>(100, grid_n / 10);

    std::vector<VerificationReport> reports = run_all(suite, prec, grid_n, convex_n, want);
    for (const auto& rep : reports) {
        std::printf("%-44s %-14s %7.2fs%s%s\n", rep.claim_id.c_str(),
                    status_name(rep.status), rep.elapsed_s,
                    rep.control ? "  [control]" : "", rep.gating ? "" : "  [non-gating]");
        if (rep.status == VerificationReport::Status::fail && !rep.control &&
            !rep.witness.empty())
            std::printf("    witness: %s\n", rep.witness.c_str());
    }
    const bool ok = aggregate_pass(reports);
    std::printf("%zu claims, aggregate %s\n", reports.size(), ok ? "PASS" : "FAIL");

    if (!report_path.empty()) {
        json arr = json::array();
        for (const auto& rep : reports) {
            json j;
            j["claim_id"] = rep.claim_id;
            j["status"] = status_name(rep.status);
            j["precision_bits"] = rep.precision_bits;
            j["min_margin"] = rep.min_margin;
            j["witness"] = witness_triple(rep.witness);
            j["elapsed_ms"] = rep.elapsed_s * 1000.0;
            arr.push_back(j);
        }
        std::ofstream os(report_path);
        if (!os) {
            std::cerr << "cannot write report: " << report_path << "\n";
            return 1;
        }
        os << arr.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_crossover(long bits) {
    Crossover cx = crossover_r0(PrecisionConfig(bits));
    std::cout << "r0       = " << cx.r0.str() << "\n";
    std::cout << "residual = " << cx.residual.str_digits(6) << "\n";
    return 0;
}

int cmd_scan(const std::string& target, long pts, long bits) {
    SignScan sc = sign_change_scan(target, pts, PrecisionConfig(bits));
    if (!sc.found) {
        std::cerr << "no certified sign change found for " << target << "\n";
        return 1;
    }
    std::cout << target << ": sign " << (sc.sign_lo > 0 ? "+" : "-")
              << " up to r = " << sc.lo.str_digits(20) << ", sign "
              << (sc.sign_hi > 0 ? "+" : "-") << " from r = " << sc.hi.str_digits(20)
              << "\n";
    std::cout << "change inside [" << sc.lo.str_digits(20) << ", "
              << sc.hi.str_digits(20) << "]\n";
    return 0;
}

int cmd_bench(long reps, long bits) {
    PrecisionConfig prec(bits);
    std::vector<Modulus> ms;
    for (int i = 1; i <= 9; i++)
        ms.emplace_back(Real::from_decimal("0." + std::to_string(i), prec.bits + 16));

    struct Row {
        std::string name;
        long evals;
        double secs;
    };
    std::vector<Row> rows;
    auto time_loop = [&](const std::string& name, auto&& body) {
        detail::Timer t;
        long n = 0;
        for (long k = 0; k < reps; k++)
            for (const Modulus& m : ms) {
                body(m);
                n++;
            }
        rows.push_back({name, n, t.stop()});
    };

    time_loop("K oracle (series/AGM)", [&](const Modulus& m) { ell_k(m, prec); });
    for (const std::string& f : bound_families())
        time_loop(f, [&](const Modulus& m) { bound_eval(f, m, prec); });

    std::printf("%-24s %8s %10s %12s\n", "evaluation", "evals", "total ms", "evals/s");
    for (const Row& r : rows)
        std::printf("%-24s %8ld %10.2f %12.0f\n", r.name.c_str(), r.evals,
                    r.secs * 1e3, r.evals / (r.secs > 0 ? r.secs : 1e-9));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified elliptic-integral approximant toolkit"};
    app.require_subcommand(0, 1);

    long default_bits = 128;
    try {
        default_bits = PrecisionConfig::from_env().bits;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    bool registry = false;
    app.add_flag("--registry", registry, "dump the function registry as JSON");

    auto* c_eval = app.add_subcommand("eval", "evaluate a registered function");
    std::string e_fn, e_r = "0.5", e_param, e_lo = "1e-6", e_hi = "0.999999";
    long e_prec = default_bits, e_grid = 0;
    c_eval->add_option("--fn", e_fn, "function id")->required();
    c_eval->add_option("--r", e_r, "modulus r as a decimal string");
    c_eval->add_option("--param", e_param, "parameter (c for g, integer n for h2/h3)");
    c_eval->add_option("--prec", e_prec, "precision in bits");
    c_eval->add_option("--grid", e_grid, "emit CSV over an n-point grid instead");
    c_eval->add_option("--lo", e_lo, "grid lower endpoint");
    c_eval->add_option("--hi", e_hi, "grid upper endpoint");

    auto* c_coeffs = app.add_subcommand("coeffs", "derived exact Maclaurin coefficients");
    std::string k_series, k_format = "csv";
    long k_order = 32;
    c_coeffs->add_option("--series", k_series, "series key")
        ->required()
        ->check(CLI::IsMember({"f", "G", "h11", "h12"}));
    c_coeffs->add_option("--order", k_order, "highest order")->check(CLI::Range(0, 256));
    c_coeffs->add_option("--format", k_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* c_bounds = app.add_subcommand("bounds", "evaluate bound families at r");
    std::string b_r, b_family;
    long b_prec = default_bits, b_n = 1;
    c_bounds->add_option("--r", b_r, "modulus r")->required();
    c_bounds->add_option("--family", b_family, "restrict to one family")
        ->check(CLI::IsMember(bound_families()));
    c_bounds->add_option("--n", b_n, "truncation depth for KArth1")->check(CLI::Range(1, 8));
    c_bounds->add_option("--prec", b_prec, "precision in bits");

    auto* c_verify = app.add_subcommand("verify", "run the claim verification suite");
    std::string v_suite = "acceptance", v_claim, v_report;
    long v_grid = 10000, v_prec = default_bits;
    c_verify->add_option("--suite", v_suite, "acceptance|conjecture|full")
        ->check(CLI::IsMember({"acceptance", "conjecture", "full"}));
    c_verify->add_option("--claim", v_claim, "only claims whose id contains this");
    c_verify->add_option("--grid", v_grid, "sweep grid size");
    c_verify->add_option("--prec", v_prec, "precision in bits");
    c_verify->add_option("--report", v_report, "write JSON report here");

    auto* c_cross = app.add_subcommand("crossover", "solve arth(r)/r = (pi/2)^(320/79)");
    long x_prec = default_bits;
    c_cross->add_option("--prec", x_prec, "precision in bits");

    auto* c_scan = app.add_subcommand("scan", "locate a certified sign change");
    std::string s_target;
    long s_pts = 200, s_prec = default_bits;
    c_scan->add_option("--target", s_target, "h9|h10")
        ->required()
        ->check(CLI::IsMember({"h9", "h10"}));
    c_scan->add_option("--points", s_pts, "scan grid size");
    c_scan->add_option("--prec", s_prec, "precision in bits");

    auto* c_bench = app.add_subcommand("bench", "bound evaluation throughput");
    long t_reps = 10, t_prec = default_bits;
    c_bench->add_option("--reps", t_reps, "repetitions per grid point")->check(CLI::Range(1, 100000));
    c_bench->add_option("--prec", t_prec, "precision in bits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (registry) return dump_registry();
        if (c_eval->parsed()) return cmd_eval(e_fn, e_r, e_param, e_prec, e_grid, e_lo, e_hi);
        if (c_coeffs->parsed()) return cmd_coeffs(k_series, k_order, k_format);
        if (c_bounds->parsed()) return cmd_bounds(b_r, b_family, b_prec, b_n);
        if (c_verify->parsed()) return cmd_verify(v_suite, v_claim, v_grid, v_prec, v_report);
        if (c_cross->parsed()) return cmd_crossover(x_prec);
        if (c_scan->parsed()) return cmd_scan(s_target, s_pts, s_prec);
        if (c_bench->parsed()) return cmd_bench(t_reps, t_prec);
        std::cerr << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
