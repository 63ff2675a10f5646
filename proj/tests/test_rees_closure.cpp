#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include "reesdiff/coeff.hpp"
#include "reesdiff/diff_closure.hpp"
#include "reesdiff/grobner.hpp"
#include "reesdiff/rees.hpp"

using namespace reesdiff;
using namespace reesdiff::testutil;

namespace {

ReesAlgebra alg(const RingPtr& r, std::vector<std::pair<std::string, std::uint32_t>> gens) {
    std::vector<WeightedGen> ws;
    for (auto& [s, w] : gens) ws.push_back({pp(r, s), w});
    return ReesAlgebra(r, std::move(ws));
}

}  // namespace

TEST_CASE("presentation normalization: zero and duplicate generators dropped") {
    auto r = qring({"x"});
    ReesAlgebra g = alg(r, {{"0", 2}, {"x", 1}, {"x", 1}, {"x^2", 2}});
    CHECK(g.gens().size() == 2);
    CHECK_THROWS(alg(r, {{"x", 0}}));
}

TEST_CASE("saturate_weights: stated examples") {
    auto r = qring({"x"});
    CHECK(saturate_weights(alg(r, {{"x^2", 2}})) == alg(r, {{"x^2", 1}, {"x^2", 2}}));
    CHECK(saturate_weights(alg(r, {{"x", 1}})) == alg(r, {{"x", 1}}));
    CHECK(saturate_weights(alg(r, {{"x^3", 3}})) ==
          alg(r, {{"x^3", 1}, {"x^3", 2}, {"x^3", 3}}));
}

TEST_CASE("graded_piece: stated examples") {
    auto r = qring({"x"});
    ReesAlgebra g = alg(r, {{"x^2", 2}});

    auto p4 = graded_piece(g, 4, PieceMode::Exact);
    REQUIRE(p4.gens.size() == 1);
    CHECK(p4.gens[0] == pp(r, "x^4"));

    CHECK(graded_piece(g, 3, PieceMode::Exact).gens.empty());

    // weights 1+2 give x^4 (and 1+1+1 the redundant x^6); the ideal is <x^4>
    auto p3 = graded_piece(saturate_weights(g), 3, PieceMode::Exact);
    auto reduced = buchberger(p3.gens);
    REQUIRE(reduced.basis.size() == 1);
    CHECK(reduced.basis[0] == pp(r, "x^4"));
}

TEST_CASE("piece_member: stated examples") {
    auto r = qring({"x"});
    ReesAlgebra g = alg(r, {{"x^2", 2}});
    CHECK(piece_member(pp(r, "x^5"), g, 4, PieceMode::Exact));
    CHECK_FALSE(piece_member(pp(r, "x^3"), g, 4, PieceMode::Exact));

    auto r2 = pring(2, {"x"});
    ReesAlgebra g2 = alg(r2, {{"x^2", 2}});
    CHECK(piece_member(pp(r2, "2*x"), g2, 4, PieceMode::Exact));  // 2x = 0
}

TEST_CASE("veronese: stated examples") {
    auto r = qring({"x", "y"});
    auto rx = qring({"x"});
    CHECK(veronese(alg(rx, {{"x", 1}}), 2) == alg(rx, {{"x^2", 2}}));
    CHECK(veronese(alg(rx, {{"x^2", 2}}), 2) == alg(rx, {{"x^2", 2}}));
    CHECK(veronese(alg(r, {{"x", 1}, {"y", 2}}), 2) == alg(r, {{"x^2", 2}, {"y", 2}}));
    CHECK_THROWS(veronese(alg(r, {{"x", 1}, {"y", 2}}), 3));  // not a common multiple
}

TEST_CASE("integral_witness: stated examples") {
    auto r = qring({"x", "y"});
    auto w = integral_witness(pp(r, "x^2"), 2);
    CHECK(w.element == pp(r, "x^2"));
    CHECK(w.element_weight == 1);
    CHECK(w.power == 2);
    CHECK(w.rhs == pp(r, "x^4"));
    CHECK(w.rhs_weight == 2);

    w = integral_witness(pp(r, "y^3"), 3);
    CHECK(w.element_weight == 2);
    CHECK(w.rhs == pp(r, "y^9"));
    CHECK(w.rhs_weight == 6);

    w = integral_witness(Poly::zero(r), 2);
    CHECK(w.element.is_zero());
    CHECK(w.rhs.is_zero());
    CHECK_THROWS(integral_witness(pp(r, "x"), 1));
}

TEST_CASE("piece ladder generates the same ideals as product enumeration") {
    for (std::uint32_t ch : {0u, 5u}) {
        Rng rng(901 + ch);
        auto r = make_ring(FieldSpec(ch), {"x", "y"});
        for (int i = 0; i < 12; ++i) {
            ReesAlgebra g = random_algebra(rng, r, 2, 3, 3, 2);
            for (auto mode : {PieceMode::Exact, PieceMode::Saturated}) {
                PieceLadder ladder(g, mode);
                for (std::uint32_t n = 1; n <= 5; ++n) {
                    auto direct = buchberger(graded_piece(g, n, mode, 16).gens);
                    const auto& via_ladder = ladder.piece(n);
                    REQUIRE(direct.basis.size() == via_ladder.basis.size());
                    for (std::size_t k = 0; k < direct.basis.size(); ++k)
                        CHECK(direct.basis[k] == via_ladder.basis[k]);
                }
            }
        }
    }
}

TEST_CASE("piece products multiply into the summed piece") {
    Rng rng(77);
    auto r = qring({"x", "y"});
    for (int i = 0; i < 8; ++i) {
        ReesAlgebra g = random_algebra(rng, r, 2, 2, 2, 2);
        for (std::uint32_t k = 1; k <= 2; ++k)
            for (std::uint32_t s = 1; s <= 2; ++s) {
                auto pk = graded_piece(g, k, PieceMode::Exact);
                auto ps = graded_piece(g, s, PieceMode::Exact);
                for (const auto& a : pk.gens)
                    for (const auto& b : ps.gens)
                        CHECK(piece_member(a * b, g, k + s, PieceMode::Exact));
            }
    }
}

TEST_CASE("saturated pieces are nested") {
    Rng rng(78);
    auto r = qring({"x", "y"});
    for (int i = 0; i < 10; ++i) {
        ReesAlgebra g = random_algebra(rng, r, 2, 3, 3, 2);
        PieceLadder ladder(g, PieceMode::Saturated);
        for (std::uint32_t k = 1; k <= 4; ++k)
            for (const auto& b : ladder.piece(k + 1).basis)
                CHECK(ladder.member(b, k));
    }
}

TEST_CASE("veronese pieces: degree kM equals the k-th power of I_M") {
    auto r = qring({"x", "y"});
    ReesAlgebra g = alg(r, {{"x", 1}, {"y", 2}});
    ReesAlgebra v = veronese(g, 2);
    PieceLadder lv(v, PieceMode::Exact);
    // (I_2)^k generators: k-fold products of {x^2, y}
    auto i2 = graded_piece(g, 2, PieceMode::Exact);
    for (std::uint32_t k = 1; k <= 3; ++k) {
        std::vector<Poly> powers;
        std::vector<std::size_t> idx(k, 0);
        for (;;) {
            Poly prod = Poly::constant(r, 1);
            for (auto j : idx) prod = prod * i2.gens[j];
            powers.push_back(prod);
            std::size_t i = 0;
            while (i < k && ++idx[i] == i2.gens.size()) idx[i++] = 0;
            if (i == k) break;
        }
        auto direct = buchberger(powers);
        const auto& via = lv.piece(2 * k);
        REQUIRE(direct.basis.size() == via.basis.size());
        for (std::size_t j = 0; j < direct.basis.size(); ++j)
            CHECK(direct.basis[j] == via.basis[j]);
    }
}

TEST_CASE("graded pieces ignore generator list order") {
    auto r = qring({"x", "y"});
    ReesAlgebra a = alg(r, {{"x^2 + y", 1}, {"y^3", 2}});
    ReesAlgebra b = alg(r, {{"y^3", 2}, {"x^2 + y", 1}});
    CHECK(a == b);
    CHECK(bounded_pieces_equal(a, b, 4));
}

TEST_CASE("diff_close absolute: stated examples") {
    auto r = qring({"x"});
    ReesAlgebra g = alg(r, {{"x^2", 2}});
    ReesAlgebra c = diff_close(g);
    CHECK(c == alg(r, {{"2*x", 1}, {"x^2", 1}, {"x^2", 2}}));
    // pieces up to degree 4 match the Rees ring of <x>
    CHECK(bounded_pieces_equal(c, alg(r, {{"x", 1}}), 4));

    auto r2 = pring(2, {"x"});
    ReesAlgebra c2 = diff_close(alg(r2, {{"x^2", 2}}));
    CHECK(c2 == alg(r2, {{"x^2", 1}, {"x^2", 2}}));  // 2x vanishes in char 2
    PieceLadder l2(c2, PieceMode::Exact);
    REQUIRE(l2.piece(1).basis.size() == 1);
    CHECK(l2.piece(1).basis[0] == pp(r2, "x^2"));

    CHECK(diff_close(alg(r, {{"x", 1}})) == alg(r, {{"x", 1}}));
}

TEST_CASE("is_diff_closed: stated examples") {
    auto r = qring({"x", "y"});
    // Rees ring of <x,y> with weight-1 generators and their weight-2 products
    ReesAlgebra rees = alg(r, {{"x", 1},
                               {"y", 1},
                               {"x^2", 2},
                               {"x*y", 2},
                               {"y^2", 2}});
    CHECK(is_diff_closed(rees));

    auto rx = qring({"x"});
    CHECK_FALSE(is_diff_closed(alg(rx, {{"x^2", 2}})));

    auto r2 = pring(2, {"x"});
    CHECK(is_diff_closed(diff_close(alg(r2, {{"x^2", 2}}))));
}

TEST_CASE("logarithmic closure keeps the stated generator") {
    auto r = qring({"x"});
    ReesAlgebra c = diff_close(alg(r, {{"x^3", 2}}),
                               ClosureOptions::logarithmic({0}));
    bool found = false;
    for (const auto& wg : c.gens())
        if (wg.weight == 1 && wg.g == pp(r, "3*x^3")) found = true;
    CHECK(found);
    CHECK(is_diff_closed(c, ClosureOptions::logarithmic({0})));
}

TEST_CASE("relative closure only differentiates the leading block") {
    auto r = qring({"x", "y"});
    ReesAlgebra g = alg(r, {{"x^2 + y^2", 2}});
    ReesAlgebra rel = diff_close(g, ClosureOptions::relative(1));
    // d/dx contributes 2x W; no y-derivative generator appears
    bool has_dx = false, has_dy = false;
    for (const auto& wg : rel.gens()) {
        if (wg.g == pp(r, "2*x")) has_dx = true;
        if (wg.g == pp(r, "2*y")) has_dy = true;
    }
    CHECK(has_dx);
    CHECK_FALSE(has_dy);
    CHECK(is_diff_closed(rel, ClosureOptions::relative(1)));
    CHECK_FALSE(is_diff_closed(rel));  // not absolutely closed
    CHECK_THROWS(diff_close(g, ClosureOptions::relative(3)));
}

TEST_CASE("order-free closure: derivatives of every order at full weight") {
    auto r = qring({"x"});
    ReesAlgebra g = alg(r, {{"x^2", 2}});
    ReesAlgebra of = diff_close(g, ClosureOptions::order_free());
    CHECK(is_diff_closed(of, ClosureOptions::order_free()));
    // Delta^2(x^2) = 1 lands at weight 2, so pieces collapse to the unit ideal
    PieceLadder l(of, PieceMode::Exact);
    CHECK(l.member(Poly::constant(r, 1), 2));
    // {xW} is not order-free closed: Delta^1(x) = 1 is not in <x>
    CHECK_FALSE(is_diff_closed(alg(r, {{"x", 1}}), ClosureOptions::order_free()));
    // but logarithmically it is closed: x * Delta^1(x) = x
    CHECK(is_diff_closed(alg(r, {{"x", 1}}), ClosureOptions::logarithmic({0})));
}

TEST_CASE("closure extension and closedness on random algebras, all variants") {
    for (std::uint32_t ch : {0u, 2u, 5u}) {
        Rng rng(501 + ch);
        auto r = make_ring(FieldSpec(ch), {"x", "y"});
        for (int i = 0; i < 6; ++i) {
            ReesAlgebra g = random_algebra(rng, r, 2, 3, 3, 2);
            std::vector<ClosureOptions> variants{
                ClosureOptions::absolute(), ClosureOptions::relative(1),
                ClosureOptions::logarithmic({0, 1}), ClosureOptions::order_free()};
            for (const auto& opts : variants) {
                ReesAlgebra c = diff_close(g, opts);
                CHECK(is_diff_closed(c, opts));
                // extension: original generators live in the closure's pieces
                PieceLadder ladder(c, PieceMode::Exact);
                for (const auto& wg : g.gens())
                    CHECK(ladder.member(wg.g, wg.weight));
            }
        }
    }
}

TEST_CASE("closure is idempotent at bounded degree") {
    for (std::uint32_t ch : {0u, 2u}) {
        Rng rng(601 + ch);
        auto r = make_ring(FieldSpec(ch), {"x", "y"});
        for (int i = 0; i < 5; ++i) {
            ReesAlgebra g = random_algebra(rng, r, 2, 3, 3, 2);
            ReesAlgebra c = diff_close(g);
            CHECK(bounded_pieces_equal(c, diff_close(c), 5));
        }
    }
}

TEST_CASE("minimality: intermediate presentations close to the same algebra") {
    Rng rng(701);
    auto r = qring({"x", "y"});
    for (int i = 0; i < 5; ++i) {
        ReesAlgebra g = random_algebra(rng, r, 2, 3, 3, 2);
        ReesAlgebra c = diff_close(g);
        // adjoin a strict subset of the closure generators to g
        std::vector<WeightedGen> mid = g.gens();
        for (const auto& wg : c.gens())
            if (rng.flip()) mid.push_back(wg);
        ReesAlgebra between(r, std::move(mid));
        CHECK(bounded_pieces_equal(diff_close(between), c, 4));
    }
}

TEST_CASE("pruned closure presents the same bounded pieces") {
    auto r = qring({"x"});
    ClosureOptions pruned;
    pruned.prune = true;
    ReesAlgebra c = diff_close(alg(r, {{"x^2", 2}}), pruned);
    CHECK(c == alg(r, {{"2*x", 1}}));
    CHECK(bounded_pieces_equal(c, diff_close(alg(r, {{"x^2", 2}})), 4));
}

TEST_CASE("lambda is preserved by closure and saturation in one variable") {
    for (std::uint32_t ch : {0u, 2u, 5u}) {
        Rng rng(801 + ch);
        auto line = make_ring(FieldSpec(ch), {"t"});
        for (int i = 0; i < 20; ++i) {
            ReesAlgebra g = random_sing_algebra_1d(rng, line, 3, 4);
            LambdaValue l = lambda_invariant(g);
            CHECK(lambda_invariant(saturate_weights(g)) == l);
            CHECK(lambda_invariant(diff_close(g)) == l);
        }
    }
}
