#pragma once

#include "reesdiff/poly.hpp"

#include <vector>

namespace reesdiff {

enum class OrderKind { Grevlex, Lex };

/// Total order on monomials, compatible with multiplication, 1 minimal.
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;

    bool less(const ExpVec& a, const ExpVec& b) const {
        return kind == OrderKind::Grevlex ? grevlex_less(a, b) : lex_less(a, b);
    }
    bool operator==(const MonomialOrder&) const = default;
};

/// Reduced Groebner basis: monic elements, pairwise reduced, sorted by
/// descending leading monomial. Unique for (ideal, order).
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Poly> basis;
};

/// Buchberger's algorithm, normal selection strategy with deterministic
/// (degree, pair index) tie-break. Zero generators are ignored; the zero
/// ideal yields the empty basis.
GroebnerBasis buchberger(const std::vector<Poly>& gens,
                         MonomialOrder order = MonomialOrder{});

/// Remainder of f under multivariate division by gb.
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

bool ideal_member(const Poly& f, const GroebnerBasis& gb);

/// Degree-bounded membership by exact linear algebra: decides whether
/// f = sum h_i g_i with deg h_i <= bound. Sound; complete only up to the
/// bound. Independent of the Groebner route.
bool member_bounded(const Poly& f, const std::vector<Poly>& gens,
                    std::uint32_t cofactor_degree_bound);

}  // namespace reesdiff
