// Certified evaluation core: Real/Approx plumbing and the elliptic-integral
// evaluators against independently computed 40-digit reference values. Each
// reference check also asserts the reported err_bound covers the actual
// deviation, which is the property the whole verifier leans on.

#include <catch2/catch_amalgamated.hpp>

#include "ellint/elliptic.hpp"

using namespace ellint;

namespace {

const PrecisionConfig kPrec(128);

Real ref(const char* s) { return Real::from_decimal(s, 200); }

void check_against(const EvalResult& got, const Real& want) {
    Real dev = abs(got.value - want);
    INFO("value " << got.value.str() << " want " << want.str_digits(40)
                  << " dev " << dev.str_digits(4) << " bound "
                  << got.err_bound.str_digits(4));
    CHECK(dev <= got.err_bound + want.ulp());
    CHECK(got.err_bound < Real::pow2(-100, 64));  // bound itself stays tiny
}

}  // namespace

TEST_CASE("Real basics") {
    Real a = Real::from_decimal("0.125", 128);
    CHECK(a.to_double() == 0.125);
    CHECK(Real::pow2(-3, 64).to_double() == 0.125);
    CHECK_THROWS_AS(Real::from_decimal("zebra", 64), std::invalid_argument);
    CHECK(Real(64, 0).ulp().sign() > 0);  // zero-safe ulp
    Real wide = Real::pi(256);
    Real narrow = wide.rounded_to(64);
    CHECK(abs(wide - narrow) <= narrow.ulp());
}

TEST_CASE("Approx propagation is defensive") {
    Approx one = Approx::exact(Real(128, 1));
    Approx tiny = Approx::with_err(Real::pow2(-200, 128), Real::pow2(-190, 128));
    CHECK_THROWS_AS(one / tiny, std::domain_error);          // divisor ~ 0
    CHECK_THROWS_AS(log(tiny), std::domain_error);           // log near 0
    Approx near1 = Approx::with_err(Real(128, 1) - Real::pow2(-100, 128),
                                    Real::pow2(-90, 128));
    CHECK_THROWS_AS(atanh(near1), std::domain_error);        // envelope hits 1
    Approx sum = one + one;
    CHECK(sum.v.to_double() == 2.0);
    CHECK(sum.e.sign() > 0);  // op slack always charged
}

TEST_CASE("K and E at r = 1/2") {
    Modulus m(Real::from_decimal("0.5", 160));
    check_against(ell_k(m, kPrec), ref("1.68575035481259604287120365779907698950080089"));
    check_against(ell_e(m, kPrec), ref("1.46746220933942715545979526699091613602536175"));
}

TEST_CASE("derived elliptic quantities at r = 1/2") {
    Modulus m(Real::from_decimal("0.5", 160));
    check_against(e_minus_rp2k_over_r2(m, kPrec),
                  ref("0.812597772919920493225570094566433575599044326"));
    check_against(dk_dr(m, kPrec), ref("0.541731848613280328817046729710955717066029551"));
    check_against(de_dr(m, kPrec), ref("-0.436576290946337774822816781616321706950878284"));
}

TEST_CASE("agm and the arth ratio") {
    PrecisionConfig prec(128);
    EvalResult g = agm(Real(160, 1), sqrt(Real::from_decimal("0.75", 160)), prec);
    check_against(g, ref("0.931808391622448271177844515512135297578766428"));
    Modulus close(Real::from_decimal("0.999999", 200));
    check_against(arth_ratio(close, kPrec),
                  ref("7.25433587359792080466256174619809064659706453"));
}

TEST_CASE("K series route vs AGM route across the switch") {
    // r = 0.70 stays on the series side (x = 0.49), r = 0.72 crosses to AGM
    Modulus ms(Real::from_decimal("0.70", 160));
    Modulus ma(Real::from_decimal("0.72", 160));
    check_against(ell_k(ms, kPrec), ref("1.84569399837472351758652865488421983531816042"));
    check_against(ell_k(ma, kPrec), ref("1.86998540054880426938490203187986382651654862"));

    // force both routes at one point and compare them to each other
    Modulus m(Real::from_decimal("0.5", 160));
    PrecisionConfig wp(144);
    EvalResult series = ell_k(m, wp);
    Approx direct = detail::pi_approx(160) /
                    (2 * agm(Real(160, 1), m.rp().rounded_to(160), wp).approx());
    Real gap = abs(series.value - direct.v);
    CHECK(gap <= series.err_bound + direct.e);
    CHECK(gap <= abs(series.value) * Real::pow2(-120, 64));
}

TEST_CASE("hypergeometric cross-checks at x = 0.3") {
    PrecisionConfig prec(128);
    Real x = Real::from_decimal("0.3", 160);
    auto [g0, g1] = g0_g1(x, prec);
    check_against(g0, ref("1.04253045200635781990630860929680973418091296"));
    check_against(g1, ref("1.06931102837413937805146085005022345479673706"));
}

TEST_CASE("2K/pi against its reference") {
    Modulus m(Real::from_decimal("0.5", 160));
    EvalResult k = ell_k(m, kPrec);
    Approx f0 = k.approx() * 2 / detail::pi_approx(144);
    Real want = ref("1.07318200714936437505284170797034979566952682");
    CHECK(abs(f0.v - want) <= f0.e + want.ulp());
}

TEST_CASE("term cap turns into NonConvergent") {
    PrecisionConfig strangled(128, 2, 40);
    Real x = Real::from_decimal("0.999999", 160);
    CHECK_THROWS_AS(
        hyp_series(exact::frac(1, 2), exact::frac(1, 2), exact::Rational(1), x, strangled),
        NonConvergent);
}

TEST_CASE("evaluators reject out-of-range moduli") {
    CHECK_THROWS_AS(Modulus(Real(128, 2)), std::domain_error);
    CHECK_THROWS_AS(Modulus(Real(128, -1)), std::domain_error);
}
