#include "tqmzv/cyclic.hpp"
#include "tqmzv/enumerate.hpp"
#include "tqmzv/maps.hpp"
#include "tqmzv/nc_poly.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace tqmzv;

namespace {

const CoefPoly kT = CoefPoly::t();
const CoefPoly kH = CoefPoly::h();

TensorElem pure(std::vector<Word> slots, const CoefPoly& c = CoefPoly(1)) {
    TensorElem out(static_cast<int>(slots.size()));
    out.add_term(slots, c);
    return out;
}

NcPoly word(const char* w) { return NcPoly::from_word(w); }

}  // namespace

TEST_CASE("tensor arithmetic") {
    const TensorElem a = pure({"x", "y"});
    CHECK(a.slots() == 2);
    CHECK_FALSE(a.is_zero());
    CHECK((a - a).is_zero());
    CHECK(a + a == a.scaled(CoefPoly(2)));
    CHECK(a.scaled(CoefPoly(0)).is_zero());
    CHECK_THROWS_AS(pure({"x", "y"}) + pure({"x", "y", "y"}), std::invalid_argument);
    CHECK_THROWS_AS(TensorElem(1), std::invalid_argument);
}

TEST_CASE("tensor extension is bilinear") {
    const TensorElem base = pure({"x", "y"});
    CHECK(base.append_factor(word("xy")) == pure({"x", "y", "xy"}));
    CHECK(base.append_factor(word("xy") + word("yy").scaled(CoefPoly(2))) ==
          pure({"x", "y", "xy"}) + pure({"x", "y", "yy"}, CoefPoly(2)));
    CHECK(base.append_factor(NcPoly::unit()) == pure({"x", "y", ""}));
    CHECK(base.append_factor(NcPoly()).is_zero());
}

TEST_CASE("diamond actions touch the outer slots") {
    const TensorElem T = pure({"xy", "y", "x"});
    CHECK(diamond_left(word("x"), T) == pure({"xy", "y", "xx"}));
    CHECK(diamond_right(T, word("y")) == pure({"xyy", "y", "x"}));
    // Left and right actions commute.
    const NcPoly a = word("x") + word("yy");
    const NcPoly b = word("xy").scaled(kT);
    CHECK(diamond_left(a, diamond_right(T, b)) == diamond_right(diamond_left(a, T), b));
}

TEST_CASE("cyclic extension on letters") {
    CHECK(c_map(1, word("x")) == pure({"x", "y"}));
    CHECK(c_map(1, word("y")) == -pure({"x", "y"}));
    CHECK(c_map(1, NcPoly::unit()).is_zero());
    CHECK(c_map(2, NcPoly::unit()).is_zero());
    // n = 2 inserts one middle factor (1-t)x + y - h t.
    CHECK(c_map(2, word("x")) == pure({"x", "x", "y"}, CoefPoly(1) - kT) +
                                     pure({"x", "y", "y"}) +
                                     pure({"x", "", "y"}, -(kH * kT)));
    CHECK_THROWS_AS(c_map(0, word("x")), std::invalid_argument);
}

TEST_CASE("cyclic extension of a two-letter word") {
    const TensorElem got = c_map(1, word("xy"));
    const TensorElem want = pure({"xy", "y"}) - pure({"xx", "y"}, kT) -
                            pure({"x", "y"}, kH * kT) - pure({"x", "xy"});
    CHECK(got == want);
}

TEST_CASE("multiplication map concatenates slots") {
    CHECK(m_map(pure({"xy", "y"})) == word("xyy"));
    CHECK(m_map(pure({"x", "", "y"}, kT)) == word("xy").scaled(kT));
    CHECK(m_map(TensorElem(2)).is_zero());
}

TEST_CASE("cyclic evaluation of a two-letter word") {
    // rho_1(xy) = z_2 z_1 - (1+t) z_3 - h t z_2.
    const NcPoly got = rho_map(1, word("xy"));
    const NcPoly want = NcPoly::from_index({2, 1}) -
                        NcPoly::z(3).scaled(CoefPoly(1) + kT) -
                        NcPoly::z(2).scaled(kH * kT);
    CHECK(got == want);
}

TEST_CASE("closed form matches the operator route at n = 1") {
    for (const Word& w : words_filtered(1, 5, [](const Word&) { return true; })) {
        CHECK(rho_map(1, NcPoly::from_word(w)) == rho1_closed_form(w));
    }
    CHECK_THROWS_AS(rho1_closed_form(""), std::invalid_argument);
}

TEST_CASE("cyclic evaluation lands in H0") {
    for (int n = 1; n <= 3; ++n)
        for (const Word& w : words_filtered(1, 4, [](const Word&) { return true; })) {
            CHECK(rho_map(n, NcPoly::from_word(w)).all_words_h0());
        }
}

TEST_CASE("cyclic evaluation only sees the cyclic class") {
    for (const Word& w : words_filtered(1, 5, [](const Word&) { return true; })) {
        const NcPoly ref = rho_map(1, NcPoly::from_word(w));
        for (const Word& r : cyclic_rotations(w)) {
            CHECK(rho_map(1, NcPoly::from_word(r)) == ref);
        }
    }
}

TEST_CASE("specializing the interpolation weight to zero") {
    // rho_{n,0} = S o rho_{n,t}, checked both by rebuilding the operator at
    // s = 0 and by substituting t := 0 in the coefficients.
    for (int n = 1; n <= 2; ++n)
        for (const Word& w : words_filtered(1, 4, [](const Word&) { return true; })) {
            const NcPoly p = NcPoly::from_word(w);
            const NcPoly at_zero = rho_map(n, p, CoefPoly(0));
            CHECK(at_zero == s_map(rho_map(n, p)));
            CHECK(rho_map(n, p).map_coeffs([](const CoefPoly& c) {
                return c.subst_t(Rational(0));
            }) == at_zero);
        }
}

TEST_CASE("kernel elements agree between operator and expanded form") {
    for (const Index& idx : {Index{2}, Index{3}, Index{2, 1}, Index{2, 2}, Index{3, 1}}) {
        CHECK(csf_kernel_element(idx) == csf_kernel_explicit(idx));
    }
    CHECK_THROWS_AS(csf_kernel_element(Index{1, 1}), std::domain_error);
    CHECK_THROWS_AS(csf_kernel_explicit(Index{1}), std::domain_error);
}

TEST_CASE("kernel element via direct construction") {
    // For the index (2): rho_{1,t}(gamma(z_2) - t x (x + h)).
    const NcPoly arg = gamma_map(NcPoly::z(2)) -
                       (word("x") * (word("x") + NcPoly::scalar(kH))).scaled(kT);
    CHECK(csf_kernel_element(Index{2}) == rho_map(1, arg));
}

TEST_CASE("word rotations deduplicate") {
    CHECK(cyclic_rotations("xy") == std::vector<Word>{"xy", "yx"});
    CHECK(cyclic_rotations("xx") == std::vector<Word>{"xx"});
    CHECK(cyclic_rotations("xyxy") == std::vector<Word>{"xyxy", "yxyx"});
    CHECK(cyclic_rotations("xxy") == std::vector<Word>{"xxy", "xyx", "yxx"});
    CHECK_THROWS_AS(cyclic_rotations(""), std::invalid_argument);
}
