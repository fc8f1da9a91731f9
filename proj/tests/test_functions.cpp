// Function registry: the 45 entries, their evaluators on both routes, claim
// metadata, parameter validation, and the small-r limits that anchor the
// endpoint constants.

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ellint/functions.hpp"

using namespace ellint;

namespace {

const PrecisionConfig kPrec(128);

EvalResult at(const std::string& name, const char* r, const FnParam& p = {}) {
    return fn_eval(name, Modulus(Real::from_decimal(r, 160)), kPrec, p);
}

void check_close(const EvalResult& got, const char* want_s, long digits_prec = 150) {
    Real want = Real::from_decimal(want_s, digits_prec);
    Real dev = abs(got.value - want);
    INFO("value " << got.value.str() << " want " << want_s << " dev "
                  << dev.str_digits(4) << " bound " << got.err_bound.str_digits(4));
    CHECK(dev <= got.err_bound + want.ulp());
}

}  // namespace

TEST_CASE("registry shape") {
    const auto& table = list_functions();
    CHECK(table.size() == 45);
    std::set<std::string> names;
    for (const auto& e : table) names.insert(e.name);
    CHECK(names.size() == table.size());
    CHECK(fn_info("f15").switch_r == exact::frac(1, 2));
    CHECK(fn_info("f1").switch_r == exact::frac(3, 10));
    CHECK(fn_info("g").needs_param);
    CHECK_FALSE(fn_info("h5").has_series);
    CHECK_THROWS_AS(fn_info("f26"), UnknownFunction);
}

TEST_CASE("reference values") {
    check_close(at("h1", "0.5"), "1.5344360992505341558087555195686924129788");
    check_close(at("f", "0.1"), "0.0031508446917419636358938122041303525202216264894895");
}

TEST_CASE("parameter validation") {
    Modulus m(Real::from_decimal("0.5", 160));
    CHECK_THROWS_AS(fn_eval("g", m, kPrec), ParamRequired);
    CHECK_THROWS_AS(fn_eval("h2", m, kPrec), ParamRequired);
    CHECK_THROWS_AS(fn_eval("h2", m, kPrec, exact::Rational(0)), ParamOutOfRange);
    CHECK_THROWS_AS(fn_eval("h2", m, kPrec, exact::Rational(9)), ParamOutOfRange);
    CHECK_THROWS_AS(fn_eval("h3", m, kPrec, exact::frac(1, 2)), ParamOutOfRange);
    CHECK_THROWS_AS(fn_eval("g", m, kPrec, exact::Rational(-1)), ParamOutOfRange);
    CHECK_NOTHROW(fn_eval("g", m, kPrec, exact::frac(1, 320)));
    CHECK_NOTHROW(fn_eval("h2", m, kPrec, exact::Rational(8)));
}

TEST_CASE("every entry evaluates on a mid-range point") {
    for (const auto& info : list_functions()) {
        FnParam p;
        if (info.name == "g") p = exact::frac(1, 4);
        if (info.name == "h2" || info.name == "h3") p = exact::Rational(2);
        EvalResult v = at(info.name, "0.37", p);
        INFO(info.name);
        CHECK(v.value.is_finite());
        CHECK(v.err_bound.sign() >= 0);
        CHECK(v.err_bound < abs(v.value) + Real(64, 1));  // bound is meaningful
    }
}

TEST_CASE("dual routes agree where both exist") {
    PrecisionConfig prec(128);
    for (const char* name : {"f1", "f5", "f7", "f22", "g1", "g4", "h1", "h12"}) {
        // straddle the 3/10 switch: series forced at 0.29, direct forced there too
        Modulus m(Real::from_decimal("0.29", 256));
        EvalResult s = fn_eval_path(name, m, prec, true);
        EvalResult d = fn_eval_path(name, m, prec, false);
        Real gap = abs(s.value - d.value);
        Real tol = s.err_bound + d.err_bound +
                   Real::pow2(-120, 64) * (1 + abs(s.value));
        INFO(name << " gap " << gap.str_digits(4) << " tol " << tol.str_digits(4));
        CHECK(gap <= tol);
    }
    Modulus m(Real::from_decimal("0.29", 256));
    CHECK_THROWS_AS(fn_eval_path("h5", m, prec, true), std::domain_error);
}

TEST_CASE("G ties to f by the defining identity") {
    for (const char* rs : {"0.05", "0.3", "0.7", "0.95"}) {
        Modulus m(Real::from_decimal(rs, 200));
        EvalResult G = fn_eval("G", m, kPrec);
        EvalResult f = fn_eval("f", m, kPrec);
        Approx rhs = f.approx() * Approx::exact(m.x().rounded_to(160)) +
                     detail::frac_approx(3, 4, 160);
        Real gap = abs(G.value - rhs.v);
        CHECK(gap <= G.err_bound + rhs.e + Real::pow2(-124, 64) * abs(G.value));
    }
}

TEST_CASE("claim metadata endpoints") {
    // eval(128) promises "a few ulp" at 128 bits; allow 2^-124 absolute
    const Real endty = Real::pow2(-124, 64);
    ClaimSet f20 = fn_claims("f20");
    REQUIRE(f20.range_hi.has_value());
    Real want = log(Real(200, 2));
    CHECK(abs(f20.range_hi->eval(128) - want) <= endty);
    CHECK(f20.convexity == Convexity::convex);

    ClaimSet h3 = fn_claims("h3", exact::Rational(1));
    REQUIRE(h3.range_hi.has_value());
    Real h3hi = Real::from_decimal("0.75", 200) - 2 / Real::pi(200);
    CHECK(abs(h3.range_hi->eval(128) - h3hi) <= endty);

    // strict-sign carriers
    CHECK(fn_claims("f10").strict_sign.has_value());
    CHECK(fn_claims("f12").strict_sign->first == -1);
    CHECK(fn_claims("h8").strict_sign->first == +1);
    CHECK_FALSE(fn_claims("f21").strict_sign.has_value());

    // every claimed interval is ordered
    for (const auto& info : list_functions()) {
        FnParam p;
        if (info.needs_param) p = exact::Rational(1);
        ClaimSet c = fn_claims(info.name, p);
        if (c.range_lo && c.range_hi) {
            INFO(info.name);
            CHECK(c.range_lo->eval(128) < c.range_hi->eval(128));
        }
    }
}

TEST_CASE("small-r limits approach the endpoint constants") {
    // series-path evaluations at r = 1e-3 against the exact limits
    const Real tol = Real::from_decimal("1e-5", 64);
    auto limit_gap = [&](const char* name, const ConstExpr& c, const FnParam& p = {}) {
        EvalResult v = at(name, "0.001", p);
        return abs(v.value - c.eval(160));
    };
    CHECK(limit_gap("f", ConstExpr::rat(exact::frac(1, 320))) < tol);
    CHECK(limit_gap("g2", ConstExpr::rat(exact::frac(79, 320))) < tol);
    CHECK(limit_gap("f22", ConstExpr::pi(exact::frac(1, 30))) < tol);
    CHECK(limit_gap("f24", ConstExpr::rat(exact::frac(1, 40))) < tol);
    CHECK(limit_gap("h2", ConstExpr::rat(exact::frac(3, 320)), exact::Rational(1)) < tol);
}
