#pragma once

#include "reesdiff/grobner.hpp"
#include "reesdiff/poly.hpp"

#include <map>
#include <vector>

namespace reesdiff {

/// One generator g W^n of a Rees algebra presentation.
struct WeightedGen {
    Poly g;
    std::uint32_t weight = 1;  // n >= 1
};

/// A Rees algebra of B[W] presented by finitely many weighted generators.
/// The semantic object is the B-subalgebra generated by {g_i W^{n_i}};
/// presentation equality is NOT algebra equality. Zero and duplicate
/// generators are dropped, the list is kept in a canonical order.
class ReesAlgebra {
public:
    ReesAlgebra(RingPtr ring, std::vector<WeightedGen> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<WeightedGen>& gens() const { return gens_; }
    bool empty() const { return gens_.empty(); }
    std::uint32_t max_weight() const;

    /// Presentation equality (canonical generator lists).
    bool operator==(const ReesAlgebra& o) const;

private:
    RingPtr ring_;
    std::vector<WeightedGen> gens_;
};

enum class PieceMode { Exact, Saturated };

/// The ideal I_N (exact) or I'_N = sum_{r>=N} I_r (saturated), presented by
/// a finite list of weighted-homogeneous products of generators.
struct GradedPiece {
    std::uint32_t degree = 0;
    PieceMode mode = PieceMode::Exact;
    std::vector<Poly> gens;
};

/// Relist every generator at all weights 1..n_i; presents the saturated
/// algebra with nested pieces, a finite extension of the input.
ReesAlgebra saturate_weights(const ReesAlgebra& g);

/// Enumerates generator multisets with weight sum N (exact) or in
/// [N, N + max_i n_i - 1] (saturated; any heavier product factors through
/// that window). Throws when a product would need more than max_factors
/// factors.
GradedPiece graded_piece(const ReesAlgebra& g, std::uint32_t n, PieceMode mode,
                         std::uint32_t max_factors = 12);

/// f in the ideal generated by graded_piece(g, n, mode)?
bool piece_member(const Poly& f, const ReesAlgebra& g, std::uint32_t n, PieceMode mode);

/// The Rees ring of I_M inside g; M must be a common multiple of all
/// generator weights, making g finite over the result.
ReesAlgebra veronese(const ReesAlgebra& g, std::uint32_t m);

/// The Remark-2.2-style integrality certificate for g in I_k: the element
/// g W^{k-1} satisfies Z^k - g^k W^{k(k-1)} = 0.
struct IntegralWitness {
    Poly element;
    std::uint32_t element_weight;  // k - 1
    std::uint32_t power;           // k
    Poly rhs;                      // g^k
    std::uint32_t rhs_weight;      // k (k - 1)
};

IntegralWitness integral_witness(const Poly& g, std::uint32_t k);

/// Reduced Groebner bases of the graded pieces I_1..I_N, computed by the
/// recursion I_N = sum_i g_i * I_{N-n_i} with every level replaced by its
/// reduced basis (same ideals as the product enumeration, far smaller
/// generator lists). Grevlex throughout; membership is order-independent.
class PieceLadder {
public:
    PieceLadder(const ReesAlgebra& g, PieceMode mode);

    /// Reduced basis of the degree-n piece (computed and cached on demand).
    const GroebnerBasis& piece(std::uint32_t n);
    bool member(const Poly& f, std::uint32_t n);

private:
    const GroebnerBasis& exact_piece(std::uint32_t n);

    ReesAlgebra alg_;
    PieceMode mode_;
    std::map<std::uint32_t, GroebnerBasis> exact_;
    std::map<std::uint32_t, GroebnerBasis> pieces_;
};

/// Reduced bases of pieces 1..bound coincide for the two presentations.
bool bounded_pieces_equal(const ReesAlgebra& a, const ReesAlgebra& b,
                          std::uint32_t bound, PieceMode mode = PieceMode::Exact);

}  // namespace reesdiff
