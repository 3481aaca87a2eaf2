#include "tqmzv/coef_poly.hpp"
#include "tqmzv/enumerate.hpp"
#include "tqmzv/nc_poly.hpp"
#include "tqmzv/rational.hpp"
#include "tqmzv/word.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace tqmzv;

TEST_CASE("rational arithmetic stays canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(3, 4) * Rational(2, 3)) == Rational(1, 2));
    CHECK((Rational(1) / Rational(4)) == Rational(1, 4));
    CHECK(Rational(-3, 7).abs() == Rational(3, 7));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-2).pow(2) == Rational(4));
    CHECK(Rational(7).sgn() == 1);
    CHECK(Rational(-7, 2).sgn() == -1);
    CHECK(Rational().is_zero());
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parse and print round-trip") {
    for (const char* s : {"0", "5", "-5", "5/2", "-7/3", "100000000000000000001/3"}) {
        CHECK(Rational::parse(s).str() == s);
    }
    CHECK(Rational::parse("4/2") == Rational(2));
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1 2"), std::invalid_argument);
}

TEST_CASE("binomial coefficients") {
    CHECK(Rational::binomial(0, 0) == Rational(1));
    CHECK(Rational::binomial(5, 2) == Rational(10));
    CHECK(Rational::binomial(10, 10) == Rational(1));
    CHECK(Rational::binomial(3, 5) == Rational(0));
}

TEST_CASE("coefficient polynomials in h and t") {
    const CoefPoly h = CoefPoly::h();
    const CoefPoly t = CoefPoly::t();
    CHECK((h * t) == (t * h));
    CHECK((h + t - h) == t);
    CHECK(((h + t) * (h - t)) == (h * h - t * t));
    CHECK(CoefPoly(0).is_zero());
    CHECK(CoefPoly(1).is_one());
    CHECK((h - h).is_zero());
    CHECK(CoefPoly(7).is_constant());
    CHECK(CoefPoly(7).constant_value() == Rational(7));
    CHECK_FALSE(h.is_constant());
    CHECK_THROWS_AS(h.constant_value(), std::logic_error);
    CHECK_THROWS_AS(CoefPoly::monomial(Rational(1), -1, 0), std::invalid_argument);

    const CoefPoly p = CoefPoly(1) + h * t * Rational(2) + t.pow(2) * Rational(-3);
    CHECK(p.max_h_deg() == 1);
    CHECK(p.max_t_deg() == 2);
    CHECK(p.eval(Rational(1), Rational(2)) == Rational(1 + 4 - 12));
    CHECK(p.subst_t(Rational(0)) == CoefPoly(1));
    CHECK(p.subst_h(Rational(0)) == CoefPoly(1) - CoefPoly::monomial(Rational(3), 0, 2));
    CHECK(p.pow(0).is_one());
    CHECK(p.pow(2) == p * p);
}

TEST_CASE("coefficient printing") {
    CHECK(CoefPoly(0).str() == "0");
    CHECK(CoefPoly(1).str() == "1");
    CHECK(CoefPoly(Rational(3, 2)).str() == "3/2");
    CHECK(CoefPoly::monomial(Rational(3, 2), 1, 2).str() == "3/2*h^1*t^2");
    CHECK((CoefPoly(1) - CoefPoly::monomial(Rational(2), 0, 1)).str() == "1 - 2*t^1");
}

TEST_CASE("word classification") {
    CHECK(is_valid_word(""));
    CHECK(is_valid_word("xyxy"));
    CHECK_FALSE(is_valid_word("xyz"));
    CHECK(word_weight("xxy") == 3);
    CHECK(word_depth("xyxyy") == 3);
    CHECK(is_h1_word(""));
    CHECK(is_h1_word("xy"));
    CHECK_FALSE(is_h1_word("yx"));
    CHECK(is_h0_word(""));
    CHECK(is_h0_word("xyy"));
    CHECK_FALSE(is_h0_word("y"));
    CHECK_FALSE(is_h0_word("xyx"));
    CHECK(is_y_power("yyy"));
    CHECK_FALSE(is_y_power("xy"));
    CHECK_FALSE(is_y_power(""));
    CHECK(is_hcheck1_word("xy"));
    CHECK(is_hcheck1_word("yxy"));
    CHECK_FALSE(is_hcheck1_word("yy"));
    CHECK_FALSE(is_hcheck1_word("xyx"));
}

TEST_CASE("words and indices convert both ways") {
    CHECK(word_from_index({2, 1}) == "xyy");
    CHECK(word_from_index({1, 1, 1}) == "yyy");
    CHECK(word_from_index({4}) == "xxxy");
    CHECK(index_from_word("xyy") == Index{2, 1});
    CHECK(index_from_word("y") == Index{1});
    for (const Word& w : h1_words_up_to(6)) {
        if (w.empty()) continue;
        CHECK(word_from_index(index_from_word(w)) == w);
    }
    CHECK_THROWS_AS(index_from_word("xyx"), std::invalid_argument);
    CHECK_THROWS_AS(index_from_word(""), std::invalid_argument);
    CHECK(split_leading_z("xxyxy") == std::pair<int, Word>{3, "xy"});
    CHECK(split_leading_z("y") == std::pair<int, Word>{1, ""});
    CHECK_THROWS_AS(split_leading_z("xx"), std::invalid_argument);
}

TEST_CASE("index helpers") {
    CHECK(index_weight({2, 1}) == 3);
    CHECK(index_depth({2, 1}) == 2);
    CHECK(is_admissible({2, 1}));
    CHECK_FALSE(is_admissible({1, 2}));
    CHECK_FALSE(is_admissible({}));
    CHECK(is_all_ones({1, 1}));
    CHECK_FALSE(is_all_ones({2, 1}));
    CHECK(index_str({2, 1}) == "2,1");
    CHECK(index_parse("2,1") == Index{2, 1});
    CHECK_THROWS_AS(index_parse(" 3 , 2 "), std::invalid_argument);
    CHECK_THROWS_AS(index_parse(""), std::invalid_argument);
    CHECK_THROWS_AS(index_parse("2,0"), std::invalid_argument);
    CHECK_THROWS_AS(index_parse("2,,1"), std::invalid_argument);
    CHECK_THROWS_AS(index_parse("a"), std::invalid_argument);
}

TEST_CASE("word combinations behave like a ring") {
    const NcPoly x = NcPoly::from_letter('x');
    const NcPoly y = NcPoly::from_letter('y');
    const NcPoly one = NcPoly::unit();

    CHECK(x * y == NcPoly::from_word("xy"));
    CHECK(x * y != y * x);
    CHECK((x + y) * (x + y) ==
          NcPoly::from_word("xx") + NcPoly::from_word("xy") + NcPoly::from_word("yx") +
              NcPoly::from_word("yy"));
    CHECK(one * x == x);
    CHECK((x - x).is_zero());
    CHECK(((x * y) * y) == (x * (y * y)));

    const NcPoly p = NcPoly::z(2).scaled(CoefPoly::h()) + NcPoly::z(3);
    CHECK(p.coeff("xy") == CoefPoly::h());
    CHECK(p.coeff("xxy") == CoefPoly(1));
    CHECK(p.coeff("y").is_zero());
    CHECK(p.max_weight() == 3);
    CHECK(p.max_depth() == 1);
    CHECK(p.all_words_h1());
    CHECK(p.all_words_h0());
    CHECK(p.all_words_single_z());
    CHECK_FALSE((p + NcPoly::from_word("xyy")).all_words_single_z());

    CHECK(NcPoly::from_index({2, 1}) == NcPoly::from_word("xyy"));
    CHECK(NcPoly::z(1) == y);
    CHECK_THROWS_AS(NcPoly::from_word("ab"), std::invalid_argument);
    CHECK_THROWS_AS(NcPoly::z(0), std::invalid_argument);
}

TEST_CASE("scalar terms multiply through words") {
    const NcPoly c = NcPoly::scalar(CoefPoly::h());
    const NcPoly w = NcPoly::from_word("xy");
    CHECK(c * w == w.scaled(CoefPoly::h()));
    CHECK(w * c == w.scaled(CoefPoly::h()));
    CHECK(NcPoly::scalar(CoefPoly(0)).is_zero());
}

TEST_CASE("word combination printing") {
    CHECK(NcPoly().str() == "0");
    CHECK(NcPoly::unit().str() == "1");
    CHECK(NcPoly::from_word("xy").str() == "xy");
    CHECK((-NcPoly::from_word("xy")).str() == "-1*xy");
    CHECK((NcPoly::from_word("y") + NcPoly::from_word("xy").scaled(Rational(2))).str() ==
          "y + 2*xy");
    const NcPoly mixed =
        NcPoly::from_word("xy").scaled(CoefPoly(1) - CoefPoly::monomial(Rational(2), 0, 1));
    CHECK(mixed.str() == "(1 - 2*t^1)*xy");
}

TEST_CASE("enumeration grids have the expected sizes") {
    CHECK(all_words(3).size() == 8);
    CHECK(h1_words_up_to(4).size() == 16);   // unit word plus 1+2+4+8
    CHECK(hy_words_up_to(4).size() == 15);
    CHECK(admissible_words_up_to(4).size() == 7);
    CHECK(compositions(4).size() == 8);
    CHECK(compositions(4, 2).size() == 4);   // (4),(1,3),(2,2),(3,1)
    CHECK(admissible_indices_up_to(4).size() == 7);
    for (const Index& idx : admissible_indices_up_to(6)) CHECK(is_admissible(idx));
}
