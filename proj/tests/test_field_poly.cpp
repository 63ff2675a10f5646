#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include "reesdiff/parse.hpp"
#include "reesdiff/poly.hpp"

using namespace reesdiff;
using namespace reesdiff::testutil;

TEST_CASE("field arithmetic stays exact") {
    FieldSpec q(0);
    FieldElem half = FieldElem::from_rational(q, BigRat(1, 2));
    FieldElem third = FieldElem::from_rational(q, BigRat(1, 3));
    CHECK((half + third).rational() == BigRat(5, 6));
    CHECK((half * third).rational() == BigRat(1, 6));
    CHECK((half / third).rational() == BigRat(3, 2));

    FieldSpec f5(5);
    FieldElem a = FieldElem::from_integer(f5, 7);  // = 2
    CHECK(a.residue() == 2);
    CHECK((a * a).residue() == 4);
    CHECK(a.inv().residue() == 3);  // 2*3 = 6 = 1
    CHECK((-a).residue() == 3);
    CHECK_THROWS(FieldElem::zero(f5).inv());
    CHECK_THROWS(FieldSpec(4));
    CHECK_THROWS(FieldSpec(9));
}

TEST_CASE("binomials are taken over the integers before reduction") {
    CHECK(binomial(BigInt(3), 1) == 3);
    CHECK(binomial(BigInt(4), 2) == 6);
    CHECK(binomial(BigInt(2), 3) == 0);
    CHECK(multi_binomial({3, 2}, {1, 1}) == 6);
}

TEST_CASE("hasse derivative: stated examples") {
    auto rq = qring({"x"});
    // (x^3, alpha=(1)) -> 3x^2 over Q
    CHECK(hasse_derivative(pp(rq, "x^3"), {1}) == pp(rq, "3*x^2"));

    auto r2 = pring(2, {"x"});
    // (x^2, alpha=(2)) -> 1 and (x^2, alpha=(1)) -> 0 over F_2
    CHECK(hasse_derivative(pp(r2, "x^2"), {2}) == pp(r2, "1"));
    CHECK(hasse_derivative(pp(r2, "x^2"), {1}).is_zero());

    CHECK_THROWS(hasse_derivative(pp(rq, "x"), {1, 0}));
}

TEST_CASE("hasse derivative (x y^2, (1,1)) matches the doubled-ring oracle") {
    auto r = qring({"x", "y"});
    Poly f = pp(r, "x*y^2");
    // oracle: expand f(x+u, y+v) and read the u*v coefficient
    auto dbl = qring({"x", "y", "u", "v"});
    Poly shifted = substitute(f, dbl, {pp(dbl, "x+u"), pp(dbl, "y+v")});
    std::vector<Term> picked;
    for (const auto& t : shifted.terms())
        if (t.exp[2] == 1 && t.exp[3] == 1)
            picked.push_back({{t.exp[0], t.exp[1]}, t.coeff});
    Poly expected = Poly::from_terms(r, std::move(picked));
    CHECK(expected == pp(r, "2*y"));
    CHECK(hasse_derivative(f, {1, 1}) == expected);
}

TEST_CASE("log hasse derivative: stated examples") {
    auto rq = qring({"x"});
    CHECK(log_hasse_derivative(pp(rq, "x^3"), {1}) == pp(rq, "3*x^3"));
    auto r2 = pring(2, {"x"});
    CHECK(log_hasse_derivative(pp(r2, "x^2"), {2}) == pp(r2, "x^2"));
    auto rxy = qring({"x", "y"});
    CHECK(log_hasse_derivative(pp(rxy, "y"), {1, 0}).is_zero());
}

TEST_CASE("order at a point") {
    auto r = qring({"x", "y"});
    Poly f = pp(r, "x^2 + y^3");
    std::vector<FieldElem> origin{FieldElem::zero(r->field()), FieldElem::zero(r->field())};
    std::vector<FieldElem> one{FieldElem::one(r->field()), FieldElem::one(r->field())};
    CHECK(order_at(f, origin) == 2);
    CHECK(order_at(f, one) == 0);  // f(1,1) = 2 != 0
    CHECK(order_at(Poly::zero(r), origin) == kOrderInfinity);
}

TEST_CASE("substitution is a ring homomorphism") {
    auto r = qring({"x", "y"});
    auto line = qring({"t"});
    // (x^2+y^3, x -> t^3, y -> t^2) -> 2 t^6: direct expansion gives t^6 + t^6
    Poly img = substitute(pp(r, "x^2 + y^3"), line, {pp(line, "t^3"), pp(line, "t^2")});
    CHECK(img == pp(line, "2*t^6"));

    Poly f = pp(r, "x^2*y - 3*x + 1");
    Poly idt = substitute(f, r, {pp(r, "x"), pp(r, "y")});
    CHECK(idt == f);

    CHECK(substitute(pp(r, "x - y"), r, {pp(r, "y"), pp(r, "y")}).is_zero());
    CHECK_THROWS(substitute(f, r, {pp(r, "x")}));                      // arity
    CHECK_THROWS(substitute(f, line, {pp(line, "t"), pp(r, "y")}));    // mixed targets
}

TEST_CASE("parser on the stated examples") {
    auto r = qring({"x", "y"});
    CHECK(pp(r, "x^2 + y^3") == pp(r, "y^3 + x^2"));
    CHECK(pp(r, "2*x - 2*x").is_zero());
    auto r2 = pring(2, {"x"});
    CHECK(pp(r2, "3*x^2") == pp(r2, "x^2"));  // 3 = 1 mod 2

    CHECK(pp(r, "(x + y)^2") == pp(r, "x^2 + 2*x*y + y^2"));
    CHECK(pp(r, "-x") == -pp(r, "x"));
}

TEST_CASE("parser reports byte offsets") {
    auto r = qring({"x", "y"});
    CHECK_THROWS_AS(pp(r, "x + z"), ParseError);
    try {
        pp(r, "x + z");
    } catch (const ParseError& e) {
        CHECK(e.offset == 4);
    }
    try {
        pp(r, "x^y");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }
    try {
        pp(r, "(x + y");
    } catch (const ParseError& e) {
        CHECK(e.offset == 0);
    }
    CHECK_THROWS_AS(pp(r, "x y"), ParseError);  // implicit multiplication
}

TEST_CASE("render/parse round trip on random polynomials") {
    for (std::uint32_t ch : {0u, 2u, 5u}) {
        Rng rng(11 + ch);
        auto r = make_ring(FieldSpec(ch), {"x", "y", "z"});
        for (int i = 0; i < 200; ++i) {
            Poly f = random_poly(rng, r, 5, 6);
            CHECK(parse_poly(render_poly(f), r) == f);
        }
    }
}

TEST_CASE("hasse calculus laws on random instances") {
    for (std::uint32_t ch : {0u, 2u, 5u}) {
        Rng rng(100 + ch);
        auto r = make_ring(FieldSpec(ch), {"x", "y"});
        for (int i = 0; i < 100; ++i) {
            Poly f = random_poly(rng, r, 4, 4);
            Poly g = random_poly(rng, r, 4, 4);
            ExpVec alpha = random_exp(rng, 2, 3);
            ExpVec beta = random_exp(rng, 2, 3);

            // Leibniz: Delta^a(fg) = sum_{b+c=a} Delta^b f Delta^c g
            Poly lhs = hasse_derivative(f * g, alpha);
            Poly rhs = Poly::zero(r);
            ExpVec b(2, 0);
            for (b[0] = 0; b[0] <= alpha[0]; ++b[0])
                for (b[1] = 0; b[1] <= alpha[1]; ++b[1])
                    rhs = rhs + hasse_derivative(f, b) *
                                    hasse_derivative(g, exp_sub(alpha, b));
            CHECK(lhs == rhs);

            // composition with integral binomial, then commutation
            Poly comp = hasse_derivative(hasse_derivative(f, alpha), beta);
            FieldElem coef = FieldElem::from_integer(
                r->field(), multi_binomial(exp_add(alpha, beta), alpha));
            CHECK(comp == hasse_derivative(f, exp_add(alpha, beta)).scaled(coef));
            CHECK(comp == hasse_derivative(hasse_derivative(f, beta), alpha));
        }
    }
}

TEST_CASE("taylor identity reconstructs f(x+U) exactly") {
    for (std::uint32_t ch : {0u, 3u}) {
        Rng rng(7 + ch);
        auto r = make_ring(FieldSpec(ch), {"x", "y"});
        auto dbl = make_ring(FieldSpec(ch), {"x", "y", "u", "v"});
        std::vector<Poly> shift{pp(dbl, "x+u"), pp(dbl, "y+v")};
        std::vector<Poly> incl{pp(dbl, "x"), pp(dbl, "y")};
        for (int i = 0; i < 50; ++i) {
            Poly f = random_poly(rng, r, 4, 4);
            Poly lhs = substitute(f, dbl, shift);
            Poly rhs = Poly::zero(dbl);
            ExpVec a(2, 0);
            for (a[0] = 0; a[0] <= f.degree_in(0); ++a[0])
                for (a[1] = 0; a[1] <= f.degree_in(1); ++a[1]) {
                    Poly da = substitute(hasse_derivative(f, a), dbl, incl);
                    rhs = rhs + da * Poly::monomial(dbl, ExpVec{0, 0, a[0], a[1]},
                                                    FieldElem::one(r->field()));
                }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("order is additive at points (domain)") {
    for (std::uint32_t ch : {0u, 5u}) {
        Rng rng(31 + ch);
        auto r = make_ring(FieldSpec(ch), {"x", "y"});
        for (int i = 0; i < 60; ++i) {
            Poly f = random_poly(rng, r, 3, 3, true);
            Poly g = random_poly(rng, r, 3, 3, true);
            auto p = random_point(rng, r);
            CHECK(order_at(f * g, p) == order_at(f, p) + order_at(g, p));
        }
    }
}
