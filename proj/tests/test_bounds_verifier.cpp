// Bound families, sharpness machinery, crossover, sign scans, and the
// verification harness itself (small grids; the full-size sweeps live in the
// acceptance binary).

#include <catch2/catch_amalgamated.hpp>

#include "ellint/verifier.hpp"

using namespace ellint;

namespace {

const PrecisionConfig kPrec(128);

Modulus mk(const char* r) { return Modulus(Real::from_decimal(r, 160)); }

// lower < target < upper with certified gaps
void check_ordered(const BoundEval& be) {
    CHECK(be.target.v - be.lower.v > be.target.e + be.lower.e);
    CHECK(be.upper.v - be.target.v > be.target.e + be.upper.e);
}

}  // namespace

TEST_CASE("bound family list is closed") {
    CHECK(bound_families().size() == 14);
    CHECK_THROWS_AS(bound_eval("nosuch", mk("0.5"), kPrec), std::invalid_argument);
}

TEST_CASE("all families hold strictly at r = 1/2") {
    for (const std::string& fam : bound_families()) {
        INFO(fam);
        if (fam == "KArth1") {
            for (long n = 1; n <= 8; n++) check_ordered(bound_eval(fam, mk("0.5"), kPrec, n));
        } else {
            check_ordered(bound_eval(fam, mk("0.5"), kPrec));
        }
    }
}

TEST_CASE("Ineq1 endpoints at r = 1/2 match the reference") {
    BoundEval be = bound_eval("Ineq1", mk("0.5"), kPrec);
    Real lo = Real::from_decimal("1.07316190852435454376841345582387938570020814", 160);
    Real hi = Real::from_decimal("1.07940920595707142518022625657776958492520727", 160);
    Real f0 = Real::from_decimal("1.07318200714936437505284170797034979566952682", 160);
    CHECK(abs(be.lower.v - lo) <= be.lower.e + lo.ulp());
    CHECK(abs(be.upper.v - hi) <= be.upper.e + hi.ulp());
    CHECK(abs(be.target.v - f0) <= be.target.e + f0.ulp());
}

TEST_CASE("EK_PQ target is E/K") {
    BoundEval be = bound_eval("EK_PQ", mk("0.5"), kPrec);
    Real want = Real::from_decimal("0.870509803038163463574389222394049818225951933", 160);
    CHECK(abs(be.target.v - want) <= be.target.e + want.ulp());
}

TEST_CASE("sharpness cases split 6 reachable / 6 substituted") {
    long found = 0, substituted = 0;
    for (const auto& c : sharpness_cases()) {
        SharpnessResult res = sharpness_witness(c, kPrec);
        INFO(c.claim_id);
        if (c.substitutes.empty()) {
            CHECK(res.found);
            found++;
        } else {
            CHECK_FALSE(res.found);
            substituted++;
        }
    }
    CHECK(found == 6);
    CHECK(substituted == 6);
}

TEST_CASE("hardened-alpha witness sits near r = 0.1") {
    for (const auto& c : sharpness_cases()) {
        if (c.claim_id != "Th1.6.4-Ineq1-lower-sharp") continue;
        SharpnessResult res = sharpness_witness(c, kPrec);
        REQUIRE(res.found);
        CHECK(res.witness_r >= Real::from_decimal("0.01", 64));
        CHECK(res.witness_r <= Real::from_decimal("0.3", 64));
        CHECK(res.violation.sign() > 0);
    }
}

TEST_CASE("crossover radius") {
    Crossover cx = crossover_r0(kPrec);
    Real want =
        Real::from_decimal("0.999992224324392514707520534942772145988837108", 200);
    CHECK(abs(cx.r0 - want) < Real::from_decimal("1e-30", 64));
    CHECK(cx.residual <= Real::pow2(-124, 64));
}

TEST_CASE("sign-change scans bracket the known roots") {
    SignScan s9 = sign_change_scan("h9", 200, kPrec);
    REQUIRE(s9.found);
    CHECK(s9.sign_lo == +1);
    CHECK(s9.sign_hi == -1);
    Real r9 = Real::from_decimal("0.669949132960770570783474902233227", 160);
    CHECK(s9.lo <= r9);
    CHECK(r9 <= s9.hi);

    SignScan s10 = sign_change_scan("h10", 200, kPrec);
    REQUIRE(s10.found);
    CHECK(s10.sign_lo == -1);
    CHECK(s10.sign_hi == +1);
    Real r10 = Real::from_decimal("0.718858430091838426250356332759478", 160);
    CHECK(s10.lo <= r10);
    CHECK(r10 <= s10.hi);
}

TEST_CASE("verifier primitives on small grids") {
    GridSpec sweep = GridSpec::composite_default();
    sweep.n_points = 120;

    VerificationReport mono =
        verify_monotone("t-f-mono", "f", {}, Monotone::increasing, sweep, kPrec);
    CHECK(mono.status == VerificationReport::Status::pass);

    VerificationReport rng = verify_range("t-f21-range", "f21", {}, fn_claims("f21"),
                                          sweep, kPrec);
    CHECK(rng.status == VerificationReport::Status::pass);

    VerificationReport cvx = verify_convexity("t-f20-cvx", "f20", {}, Convexity::convex,
                                              GridSpec::uniform_n(80), kPrec);
    CHECK(cvx.status == VerificationReport::Status::pass);
    CHECK_THROWS_AS(verify_convexity("t", "f20", {}, Convexity::convex, sweep, kPrec),
                    std::invalid_argument);

    VerificationReport sgn =
        verify_strict_sign("t-f12-sign", "f12", {}, *fn_claims("f12").strict_sign,
                           sweep, kPrec);
    CHECK(sgn.status == VerificationReport::Status::pass);

    // falsified claim must come back fail, with a witness
    VerificationReport bad =
        verify_monotone("t-f-reversed", "f", {}, Monotone::decreasing, sweep, kPrec);
    CHECK(bad.status == VerificationReport::Status::fail);
    CHECK_FALSE(bad.witness.empty());
}

TEST_CASE("claim filter narrows the suite and controls stay matched") {
    std::vector<VerificationReport> reports =
        run_all(Suite::acceptance, kPrec, 100, 60, [](const std::string& id) {
            return id.find("Serf") != std::string::npos;
        });
    REQUIRE(reports.size() == 2);  // the claim and its perturbed control
    for (const auto& rep : reports) {
        if (rep.control)
            CHECK(rep.status == VerificationReport::Status::fail);
        else
            CHECK(rep.status == VerificationReport::Status::pass);
    }
    CHECK(aggregate_pass(reports));
}

TEST_CASE("suite parsing") {
    CHECK(parse_suite("acceptance") == Suite::acceptance);
    CHECK(parse_suite("conjecture") == Suite::conjecture);
    CHECK(parse_suite("full") == Suite::full);
    CHECK_THROWS_AS(parse_suite("bogus"), std::invalid_argument);
}
