#include "tqmzv/qseries.hpp"
#include "tqmzv/tpoly.hpp"
#include "tqmzv/zeta.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace tqmzv;

TEST_CASE("t-polynomial arithmetic") {
    const TPoly t = TPoly::monomial(Rational(1), 1);
    CHECK(TPoly().is_zero());
    CHECK((t - t).is_zero());
    CHECK((t * t) == TPoly::monomial(Rational(1), 2));
    CHECK((t + TPoly(1)) * (t - TPoly(1)) ==
          TPoly::monomial(Rational(1), 2) - TPoly(1));
    CHECK((t * Rational(0)).is_zero());
    CHECK(t.degree() == 1);
    CHECK(TPoly(5).degree() == 0);
    CHECK((TPoly(1) + t * Rational(2)).eval(Rational(3)) == Rational(7));
    CHECK(t.subst_t(Rational(1, 2)) == TPoly(Rational(1, 2)));
    CHECK(TPoly().str() == "0");
    CHECK(TPoly(2).str() == "2");
    CHECK((TPoly(1) - t * Rational(2)).str() == "1 - 2*t^1");
    CHECK_THROWS_AS(TPoly::monomial(Rational(1), -1), std::invalid_argument);
}

TEST_CASE("series construction and basic identities") {
    CHECK_THROWS_AS(QSeries(-1), std::invalid_argument);
    CHECK(QSeries(5).is_zero());
    CHECK(QSeries::constant(TPoly(1), 0).order() == 0);

    QSeries one_plus_q = QSeries::constant(TPoly(1), 3);
    one_plus_q.add_coeff(1, TPoly(1));
    const QSeries prod = one_plus_q * QSeries::one_minus_q_pow(1, 3);
    QSeries want(3);
    want.set_coeff(0, TPoly(1));
    want.set_coeff(2, TPoly(-1));
    CHECK(prod == want);

    CHECK(QSeries::one_minus_q_pow(0, 4) == QSeries::constant(TPoly(1), 4));
    // (1-q)^3 expanded vs multiplied out.
    const QSeries lin = QSeries::one_minus_q_pow(1, 6);
    CHECK(QSeries::one_minus_q_pow(3, 6) == lin * lin * lin);
}

TEST_CASE("mixed orders truncate to the smaller one") {
    QSeries a(5);
    a.set_coeff(5, TPoly(7));
    a.set_coeff(1, TPoly(1));
    QSeries b(3);
    b.set_coeff(1, TPoly(2));
    const QSeries sum = a + b;
    CHECK(sum.order() == 3);
    CHECK(sum.coeff(1) == TPoly(3));
    CHECK((a * b).order() == 3);
    CHECK(a.truncated(2).order() == 2);
    CHECK(a.truncated(9).order() == 5);   // never widens
}

TEST_CASE("coefficient substitution and float evaluation") {
    QSeries s(2);
    s.set_coeff(1, TPoly(1) + TPoly::monomial(Rational(2), 1));   // (1+2t) q
    s.set_coeff(2, TPoly::monomial(Rational(1), 2));              // t^2 q^2
    const QSeries at_half = s.subst_t(Rational(1, 2));
    CHECK(at_half.coeff(1) == TPoly(2));
    CHECK(at_half.coeff(2) == TPoly(Rational(1, 4)));
    CHECK(s.eval_double(0.5, 0.5) == doctest::Approx(2 * 0.5 + 0.25 * 0.25));
}

TEST_CASE("series printing") {
    QSeries s(4);
    s.set_coeff(1, TPoly(1));
    s.set_coeff(2, TPoly(1));
    s.set_coeff(3, TPoly(-1));
    s.set_coeff(4, TPoly(2));
    CHECK(s.str() == "q + q^2 - q^3 + 2*q^4");
    CHECK(QSeries(3).str() == "0");
    QSeries m(1);
    m.set_coeff(1, TPoly(1) - TPoly::monomial(Rational(2), 1));
    CHECK(m.str() == "(1 - 2*t^1)*q");
    QSeries n(1);
    n.set_coeff(0, TPoly(-3));
    n.set_coeff(1, TPoly::monomial(Rational(-1), 1));
    CHECK(n.str() == "-3 - 1*t^1*q");
}

TEST_CASE("first differing power") {
    QSeries a(4), b(4);
    a.set_coeff(2, TPoly(1));
    b.set_coeff(2, TPoly(1));
    CHECK(QSeries::first_difference(a, b) == -1);
    b.set_coeff(3, TPoly(5));
    CHECK(QSeries::first_difference(a, b) == 3);
    // Orders beyond the common one are ignored.
    QSeries c(8);
    c.set_coeff(2, TPoly(1));
    c.set_coeff(7, TPoly(9));
    CHECK(QSeries::first_difference(a, c) == -1);
}

TEST_CASE("coefficients of h and t map into series") {
    CHECK(qseries_from_coef(CoefPoly::h(), 3) == QSeries::one_minus_q_pow(1, 3));
    // 1 + h t -> 1 + t (1 - q).
    const QSeries got = qseries_from_coef(CoefPoly(1) + CoefPoly::h() * CoefPoly::t(), 2);
    QSeries want(2);
    want.set_coeff(0, TPoly(1) + TPoly::monomial(Rational(1), 1));
    want.set_coeff(1, TPoly::monomial(Rational(-1), 1));
    CHECK(got == want);
}

TEST_CASE("inverse bracket powers") {
    // 1/[1]^k = 1 for every k.
    for (int k = 1; k <= 4; ++k)
        CHECK(inv_qbracket_pow(1, k, 5) == QSeries::constant(TPoly(1), 5));
    // 1/[2] = (1-q)/(1-q^2) = 1/(1+q).
    QSeries want(3);
    want.set_coeff(0, TPoly(1));
    want.set_coeff(1, TPoly(-1));
    want.set_coeff(2, TPoly(1));
    want.set_coeff(3, TPoly(-1));
    CHECK(inv_qbracket_pow(2, 1, 3) == want);
    // 1/[2]^2 = 1 - 2q + 3q^2 - 4q^3 + ...
    QSeries want2(3);
    want2.set_coeff(0, TPoly(1));
    want2.set_coeff(1, TPoly(-2));
    want2.set_coeff(2, TPoly(3));
    want2.set_coeff(3, TPoly(-4));
    CHECK(inv_qbracket_pow(2, 2, 3) == want2);
    // Multiplying back by (1-q^m)^k recovers (1-q)^k.
    for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= 3; ++k) {
            QSeries bracket(8);   // (1-q^m) as a series
            bracket.set_coeff(0, TPoly(1));
            bracket.add_coeff(m, TPoly(-1));
            QSeries prod = inv_qbracket_pow(m, k, 8);
            for (int i = 0; i < k; ++i) prod = prod * bracket;
            CHECK(prod == QSeries::one_minus_q_pow(k, 8));
        }
}
