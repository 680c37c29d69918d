#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swanforge/field.hpp"
#include "testutil.hpp"

using namespace swanforge;
using testutil::Rng;

namespace {
const FieldConfig F22(2, 2, {"s", "t"});

RatFunc S() { return RatFunc::variable(F22, 0); }
RatFunc T() { return RatFunc::variable(F22, 1); }
}  // namespace

TEST_CASE("field arithmetic basics") {
    RatFunc s = S(), t = T();
    CHECK((s + s).is_zero());                      // characteristic-2 cancellation
    CHECK(((s + t).inv() * (s + t)).is_one());     // inverse law
    // (s^2 + st)/s == s + t after reduction
    RatFunc lhs = (s * s + s * t) / s;
    CHECK(lhs == s + t);
    CHECK_THROWS_AS(RatFunc::zero(F22).inv(), DivisionByZero);
}

TEST_CASE("field arithmetic over p = 3") {
    FieldConfig F(3, 2, {"x", "y"});
    RatFunc x = RatFunc::variable(F, 0);
    RatFunc two = RatFunc::constant(F, 2);
    CHECK((x + x + x).is_zero());
    CHECK((two * two) == RatFunc::constant(F, 1));
    CHECK((x.pow(3) / x) == x * x);
}

TEST_CASE("eq consistent with cross-multiplication") {
    Rng rng(101);
    for (int k = 0; k < 500; ++k) {
        RatFunc a = rng.ratfunc(F22), b = rng.ratfunc(F22);
        bool eq = (a == b);
        bool cross = (a.num() * b.den()) == (b.num() * a.den());
        CHECK(eq == cross);
        CHECK(a == a);
        if (eq) CHECK(b == a);
    }
}

TEST_CASE("partial derivatives") {
    RatFunc s = S(), t = T();
    CHECK(partial_derivative(s * t, 0) == t);
    CHECK(partial_derivative(s * s, 0).is_zero());  // derivative of a square
    RatFunc f = (s + t).inv();
    CHECK(partial_derivative(f, 1) == (s + t).pow(-2));
}

TEST_CASE("derivative kills p-th powers") {
    Rng rng(102);
    for (int k = 0; k < 100; ++k) {
        RatFunc f = rng.ratfunc(F22);
        CHECK(partial_derivative(f * f, 0).is_zero());
        CHECK(partial_derivative(f * f, 1).is_zero());
    }
}

TEST_CASE("frobenius decomposition examples") {
    RatFunc s = S(), t = T();
    auto dec = frobenius_decompose(s * s + t, F22);
    REQUIRE(dec.size() == 2);
    Mono a00, a01;
    a01.e[1] = 1;
    CHECK(dec.at(a00) == s);
    CHECK(dec.at(a01).is_one());

    dec = frobenius_decompose(t, F22);
    REQUIRE(dec.size() == 1);
    CHECK(dec.at(a01).is_one());

    dec = frobenius_decompose((s + t).inv(), F22);
    REQUIRE(dec.size() == 2);
    Mono a10;
    a10.e[0] = 1;
    CHECK(dec.at(a10) == (s + t).inv());
    CHECK(dec.at(a01) == (s + t).inv());
}

TEST_CASE("frobenius recomposition is exact") {
    Rng rng(103);
    for (int k = 0; k < 500; ++k) {
        RatFunc f = rng.ratfunc(F22);
        CHECK(frobenius_recompose(frobenius_decompose(f, F22), F22) == f);
    }
    FieldConfig F3(3, 2, {"x", "y"});
    Rng rng3(104);
    for (int k = 0; k < 50; ++k) {
        RatFunc f = rng3.ratfunc(F3);
        CHECK(frobenius_recompose(frobenius_decompose(f, F3), F3) == f);
    }
}

TEST_CASE("pth_root examples") {
    RatFunc s = S(), t = T();
    auto r = pth_root(s * s * t * t, F22);
    REQUIRE(r.has_value());
    CHECK(*r == s * t);
    CHECK_FALSE(pth_root(s, F22).has_value());
    r = pth_root((s + t).pow(2) / s.pow(4), F22);
    REQUIRE(r.has_value());
    CHECK(*r == (s + t) / (s * s));
}

TEST_CASE("pth_root inverts frobenius") {
    Rng rng(105);
    for (int k = 0; k < 200; ++k) {
        RatFunc f = rng.ratfunc(F22);
        auto r = pth_root(f * f, F22);
        REQUIRE(r.has_value());
        CHECK(*r == f);
    }
}

TEST_CASE("artin-schreier examples") {
    RatFunc s = S();
    auto y = artin_schreier_is_trivial(s * s + s, F22);
    REQUIRE(y.has_value());
    CHECK(*y * *y + *y == s * s + s);
    y = artin_schreier_is_trivial(RatFunc::zero(F22), F22);
    REQUIRE(y.has_value());
    CHECK(y->is_zero());
    CHECK_FALSE(artin_schreier_is_trivial(s, F22).has_value());
}

TEST_CASE("artin-schreier solves all wedges of P") {
    Rng rng(106);
    for (int k = 0; k < 200; ++k) {
        RatFunc y = rng.ratfunc(F22, 5, 4);
        RatFunc f = y * y + y;
        auto w = artin_schreier_is_trivial(f, F22);
        REQUIRE(w.has_value());
        CHECK(*w * *w + *w == f);
    }
}
