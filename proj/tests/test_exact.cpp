// Exact layer: sequences, closed forms, power-series algebra, and the
// re-derived printed coefficients. Everything here is rational arithmetic;
// any failure is a hard identity violation, not a tolerance question.

#include <catch2/catch_amalgamated.hpp>

#include "ellint/known_series.hpp"
#include "ellint/sequences.hpp"

using namespace ellint::exact;

TEST_CASE("sequence initial values") {
    CHECK(seq(SequenceId::a_tilde, 0) == frac(-1, 4));
    CHECK(seq(SequenceId::a_tilde, 1) == Rational(0));
    CHECK(seq(SequenceId::a_tilde, 2) == frac(3, 320));
    CHECK(seq(SequenceId::a_tilde, 3) == frac(17, 1792));
    CHECK(seq(SequenceId::b, 0) == frac(41, 2048));
    CHECK(seq(SequenceId::c, 0) == frac(3, 4));
    CHECK(seq(SequenceId::c_tilde, 0) == frac(217875, 50475008));
    CHECK(seq(SequenceId::d, 0) == frac(4355, 84));
}

TEST_CASE("closed forms agree with the recurrences") {
    CHECK(seq_closed_form_check(SequenceId::b, 200));
    CHECK(seq_closed_form_check(SequenceId::C, 200));
    CHECK(seq_closed_form_check(SequenceId::d, 200));
}

TEST_CASE("atilde ties to the c sequence") {
    for (std::size_t m = 0; m <= 200; m++) {
        Rational rhs = (frac(3, 4) - seq(SequenceId::c, m)) /
                       Rational(2 * static_cast<long>(m) + 3);
        CHECK(seq(SequenceId::a_tilde, m + 1) == rhs);
    }
}

TEST_CASE("sequence directions on a prefix") {
    for (std::size_t n = 0; n < 100; n++) {
        CHECK(seq(SequenceId::c, n + 1) < seq(SequenceId::c, n));
        CHECK(seq(SequenceId::c_tilde, n + 1) < seq(SequenceId::c_tilde, n));
        CHECK(seq(SequenceId::d, n + 1) > seq(SequenceId::d, n));
        CHECK(seq(SequenceId::b, n) > 0);
    }
    for (std::size_t n = 2; n <= 100; n++) CHECK(seq(SequenceId::a_tilde, n) > 0);
}

TEST_CASE("power series algebra round-trips") {
    const std::size_t N = 24;
    const PowerSeries F1 = ps_F1(N);
    PowerSeries one(N);
    one[0] = Rational(1);

    SECTION("division inverts multiplication") {
        PowerSeries q = ps_div(ps_mul(F1, ps_F0(N)).truncated(N), ps_F0(N)).truncated(N);
        for (std::size_t i = 0; i <= N; i++) CHECK(q[i] == F1[i]);
    }
    SECTION("reciprocal against itself") {
        PowerSeries p = ps_mul(ps_div(one, F1), F1).truncated(N);
        CHECK(p[0] == Rational(1));
        for (std::size_t i = 1; i <= N; i++) CHECK(p[i] == Rational(0));
    }
    SECTION("shift up then down") {
        PowerSeries s = ps_shift_down(ps_shift_up(F1, 2), 2);
        for (std::size_t i = 0; i <= N; i++) CHECK(s[i] == F1[i]);
    }
    SECTION("derivative of integral") {
        PowerSeries d = ps_derivative(ps_integrate(F1));
        for (std::size_t i = 0; i <= N; i++) CHECK(d[i] == F1[i]);
    }
}

TEST_CASE("two log routes agree") {
    const std::size_t N = 32;
    PowerSeries via_series = ps_log(ps_F0(N));
    PowerSeries via_deriv = ps_log_via_derivative(ps_F0(N));
    for (std::size_t i = 0; i <= N; i++) CHECK(via_series[i] == via_deriv[i]);
}

TEST_CASE("printed coefficient displays") {
    SECTION("f") {
        PowerSeries s = paper_series("f", 5);
        CHECK(s[0] == frac(1, 320));
        CHECK(s[1] == frac(517, 201600));
        CHECK(s[2] == frac(767341, 387072000));
        CHECK(s[3] == frac("4277471797", "2682408960000"));
        CHECK(s[4] == frac("1851483120061", "1394852659200000"));
        CHECK(s[5] == frac("2989339649544551", "2636271525888000000"));
    }
    SECTION("G = x f + 3/4 at the coefficient level") {
        PowerSeries G = paper_series("G", 7);
        PowerSeries f = paper_series("f", 6);
        CHECK(G[0] == frac(3, 4));
        for (std::size_t i = 0; i <= 6; i++) CHECK(G[i + 1] == f[i]);
    }
    SECTION("h11") {
        PowerSeries s = paper_series("h11", 4);
        CHECK(s[0] == frac(79, 960));
        CHECK(s[1] == frac(421, 12096));
        CHECK(s[2] == frac(690961, 33177600));
        CHECK(s[3] == frac(18414493, 1277337600));
        CHECK(s[4] == frac("164673431213", "15216574464000"));
    }
    SECTION("h12") {
        PowerSeries s = paper_series("h12", 4);
        CHECK(s[0] == frac(517, 604800));
        CHECK(s[1] == frac(239497, 232243200));
        CHECK(s[2] == frac(741527, 709632000));
        CHECK(s[3] == frac("168874886801", "167382319104000"));
        CHECK(s[4] == frac("2405137262477", "2510734786560000"));
    }
    SECTION("f7 and h13 leading terms") {
        PowerSeries f7 = paper_series("f7", 4);
        CHECK(f7[0] == frac(1, 3));
        CHECK(f7[1] == frac(13, 90));
        CHECK(f7[2] == frac(251, 2835));
        CHECK(f7[3] == frac(3551, 56700));
        CHECK(f7[4] == frac(22417, 467775));
        PowerSeries h13 = paper_series("h13", 4);
        CHECK(h13[0] == frac(1, 4));
        CHECK(h13[1] == frac(7, 64));
        CHECK(h13[2] == frac(13, 192));
        CHECK(h13[3] == frac(791, 16384));
        CHECK(h13[4] == frac(1523, 40960));
    }
}

TEST_CASE("coefficient positivity prefixes") {
    for (const char* key : {"f", "G", "f7", "h11", "h12", "h13"}) {
        PowerSeries s = paper_series(key, 100);
        for (std::size_t n = 0; n <= 100; n++) {
            INFO(key << " at n=" << n);
            CHECK(s[n] > 0);
        }
    }
}

TEST_CASE("unknown series key throws") {
    CHECK_THROWS_AS(paper_series("nope", 4), std::invalid_argument);
    CHECK_THROWS_AS(ps_from_known("nope", 4), std::invalid_argument);
}
