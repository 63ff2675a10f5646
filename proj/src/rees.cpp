#include "reesdiff/rees.hpp"

#include <algorithm>
#include <set>

namespace reesdiff {

ReesAlgebra::ReesAlgebra(RingPtr ring, std::vector<WeightedGen> gens)
    : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("ReesAlgebra: null ring");
    for (auto& wg : gens) {
        if (wg.weight < 1) throw std::invalid_argument("generator weight must be >= 1");
        if (!same_ring(wg.g.ring(), ring_))
            throw std::invalid_argument("generator from a different ring");
        if (wg.g.is_zero()) continue;
        gens_.push_back(std::move(wg));
    }
    std::sort(gens_.begin(), gens_.end(), [](const WeightedGen& a, const WeightedGen& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return Poly::cmp(a.g, b.g) < 0;
    });
    gens_.erase(std::unique(gens_.begin(), gens_.end(),
                            [](const WeightedGen& a, const WeightedGen& b) {
                                return a.weight == b.weight && a.g == b.g;
                            }),
                gens_.end());
}

std::uint32_t ReesAlgebra::max_weight() const {
    std::uint32_t m = 0;
    for (const auto& wg : gens_) m = std::max(m, wg.weight);
    return m;
}

bool ReesAlgebra::operator==(const ReesAlgebra& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (gens_.size() != o.gens_.size()) return false;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].weight != o.gens_[i].weight || gens_[i].g != o.gens_[i].g)
            return false;
    return true;
}

ReesAlgebra saturate_weights(const ReesAlgebra& g) {
    std::vector<WeightedGen> out;
    for (const auto& wg : g.gens())
        for (std::uint32_t w = 1; w <= wg.weight; ++w) out.push_back({wg.g, w});
    return ReesAlgebra(g.ring(), std::move(out));
}

namespace {

struct PolyCmp {
    bool operator()(const Poly& a, const Poly& b) const { return Poly::cmp(a, b) < 0; }
};

void enumerate_products(const ReesAlgebra& g, std::uint32_t lo, std::uint32_t hi,
                        std::uint32_t max_factors, std::set<Poly, PolyCmp>& out) {
    const auto& gens = g.gens();
    Poly acc = Poly::constant(g.ring(), 1);
    auto rec = [&](auto&& self, std::size_t idx, std::uint32_t wsum,
                   std::uint32_t factors, const Poly& prod) -> void {
        if (factors > max_factors)
            throw std::runtime_error("graded_piece: product factor cap (" +
                                     std::to_string(max_factors) + ") exceeded");
        if (wsum >= lo && wsum <= hi && factors > 0) out.insert(prod);
        if (idx == gens.size() || wsum >= hi) return;
        // skip this generator
        self(self, idx + 1, wsum, factors, prod);
        // or use one more copy of it
        std::uint32_t w = gens[idx].weight;
        if (wsum + w <= hi)
            self(self, idx, wsum + w, factors + 1, prod * gens[idx].g);
    };
    rec(rec, 0, 0, 0, acc);
}

}  // namespace

GradedPiece graded_piece(const ReesAlgebra& g, std::uint32_t n, PieceMode mode,
                         std::uint32_t max_factors) {
    if (n < 1) throw std::invalid_argument("graded_piece: degree must be >= 1");
    GradedPiece piece{n, mode, {}};
    if (g.empty()) return piece;
    std::uint32_t hi = mode == PieceMode::Exact ? n : n + g.max_weight() - 1;
    std::set<Poly, PolyCmp> prods;
    enumerate_products(g, n, hi, max_factors, prods);
    piece.gens.assign(prods.begin(), prods.end());
    return piece;
}

bool piece_member(const Poly& f, const ReesAlgebra& g, std::uint32_t n, PieceMode mode) {
    if (!same_ring(f.ring(), g.ring()))
        throw std::invalid_argument("piece_member: ring mismatch");
    if (f.is_zero()) return true;
    PieceLadder ladder(g, mode);
    return ladder.member(f, n);
}

ReesAlgebra veronese(const ReesAlgebra& g, std::uint32_t m) {
    if (m < 1) throw std::invalid_argument("veronese: M must be >= 1");
    for (const auto& wg : g.gens())
        if (m % wg.weight != 0)
            throw std::invalid_argument(
                "veronese: M must be a common multiple of the generator weights");
    GradedPiece piece = graded_piece(g, m, PieceMode::Exact,
                                     std::max<std::uint32_t>(12, m));
    std::vector<WeightedGen> out;
    for (const auto& p : piece.gens) out.push_back({p, m});
    return ReesAlgebra(g.ring(), std::move(out));
}

IntegralWitness integral_witness(const Poly& g, std::uint32_t k) {
    if (k < 2) throw std::invalid_argument("integral_witness: k must be >= 2");
    return IntegralWitness{g, k - 1, k, g.pow(k), k * (k - 1)};
}

PieceLadder::PieceLadder(const ReesAlgebra& g, PieceMode mode) : alg_(g), mode_(mode) {}

const GroebnerBasis& PieceLadder::exact_piece(std::uint32_t n) {
    auto it = exact_.find(n);
    if (it != exact_.end()) return it->second;
    std::vector<Poly> gens;
    for (const auto& wg : alg_.gens()) {
        if (wg.weight == n) {
            gens.push_back(wg.g);
        } else if (wg.weight < n) {
            const GroebnerBasis& sub = exact_piece(n - wg.weight);
            for (const auto& b : sub.basis) gens.push_back(wg.g * b);
        }
    }
    GroebnerBasis gb = buchberger(gens);
    if (!gb.ring) gb.ring = alg_.ring();
    return exact_.emplace(n, std::move(gb)).first->second;
}

const GroebnerBasis& PieceLadder::piece(std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("PieceLadder: degree must be >= 1");
    if (mode_ == PieceMode::Exact) return exact_piece(n);
    auto it = pieces_.find(n);
    if (it != pieces_.end()) return it->second;
    std::vector<Poly> gens;
    for (const auto& wg : alg_.gens()) {
        if (wg.weight >= n) {
            gens.push_back(wg.g);
        } else {
            const GroebnerBasis& sub = piece(n - wg.weight);
            for (const auto& b : sub.basis) gens.push_back(wg.g * b);
        }
    }
    GroebnerBasis gb = buchberger(gens);
    if (!gb.ring) gb.ring = alg_.ring();
    return pieces_.emplace(n, std::move(gb)).first->second;
}

bool PieceLadder::member(const Poly& f, std::uint32_t n) {
    return ideal_member(f, piece(n));
}

bool bounded_pieces_equal(const ReesAlgebra& a, const ReesAlgebra& b,
                          std::uint32_t bound, PieceMode mode) {
    PieceLadder la(a, mode), lb(b, mode);
    for (std::uint32_t n = 1; n <= bound; ++n) {
        const auto& ba = la.piece(n).basis;
        const auto& bb = lb.piece(n).basis;
        if (ba.size() != bb.size()) return false;
        for (std::size_t i = 0; i < ba.size(); ++i)
            if (ba[i] != bb[i]) return false;
    }
    return true;
}

}  // namespace reesdiff
