#include "reesdiff/coeff.hpp"

#include <algorithm>

namespace reesdiff {

LambdaValue LambdaValue::ratio(std::int64_t order, std::uint32_t weight) {
    if (order == kOrderInfinity) return infinity();
    return of(BigRat(order, weight));
}

bool LambdaValue::operator<(const LambdaValue& o) const {
    if (is_infinite()) return false;
    if (o.is_infinite()) return true;
    return *value < *o.value;
}

std::string LambdaValue::str() const {
    if (is_infinite()) return "inf";
    return value->str();
}

RingPtr trailing_ring(const RingPtr& ring, Split split) {
    const std::size_t d = ring->nvars();
    if (split.h < 1 || split.h >= d)
        throw std::invalid_argument("split: need 1 <= h <= d-1");
    std::vector<std::string> vars(ring->vars().begin() + split.h, ring->vars().end());
    return make_ring(ring->field(), std::move(vars));
}

Poly restrict_to_trailing(const Poly& f, Split split, const RingPtr& target) {
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        bool killed = false;
        for (std::uint32_t i = 0; i < split.h; ++i)
            if (t.exp[i] != 0) {
                killed = true;
                break;
            }
        if (killed) continue;
        ExpVec e(t.exp.begin() + split.h, t.exp.end());
        out.push_back({std::move(e), t.coeff});
    }
    return Poly::from_terms(target, std::move(out));
}

namespace {

std::vector<ExpVec> leading_alphas(const Poly& g, Split split, std::uint32_t below) {
    // alpha supported on the first h coordinates with |alpha| < below,
    // bounded by g's degree profile
    const std::size_t d = g.ring()->nvars();
    std::vector<ExpVec> out;
    ExpVec cur(d, 0);
    auto rec = [&](auto&& self, std::uint32_t i, std::uint32_t used) -> void {
        if (i == split.h) {
            out.push_back(cur);
            return;
        }
        std::uint32_t top = std::min(g.degree_in(i), below - 1 - used);
        for (std::uint32_t e = 0; e <= top; ++e) {
            cur[i] = e;
            self(self, i + 1, used + e);
        }
        cur[i] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace

CoeffAlgebra coefficient_algebra(const ReesAlgebra& g, Split split, CoeffRecipe recipe) {
    RingPtr target = trailing_ring(g.ring(), split);
    std::vector<WeightedGen> out;
    for (const auto& wg : g.gens()) {
        for (const auto& alpha : leading_alphas(wg.g, split, wg.weight)) {
            Poly a = restrict_to_trailing(hasse_derivative(wg.g, alpha), split, target);
            if (a.is_zero()) continue;
            std::uint32_t top = wg.weight - static_cast<std::uint32_t>(exp_total(alpha));
            if (recipe == CoeffRecipe::F1Prime) {
                out.push_back({a, top});
            } else {
                for (std::uint32_t w = 1; w <= top; ++w) out.push_back({a, w});
            }
        }
    }
    return CoeffAlgebra{ReesAlgebra(target, std::move(out)), recipe};
}

LambdaValue sl(const Poly& g, std::uint32_t n, Split split) {
    const std::size_t d = g.ring()->nvars();
    if (split.h + 1 != d)
        throw std::invalid_argument("sl: split must leave exactly one trailing variable");
    RingPtr target = trailing_ring(g.ring(), split);
    LambdaValue best = LambdaValue::infinity();
    for (const auto& alpha : leading_alphas(g, split, n)) {
        Poly a = restrict_to_trailing(hasse_derivative(g, alpha), split, target);
        if (a.is_zero()) continue;
        std::uint32_t w = n - static_cast<std::uint32_t>(exp_total(alpha));
        LambdaValue v = LambdaValue::ratio(a.order_at_origin(), w);
        if (v < best) best = v;
    }
    return best;
}

LambdaValue lambda_invariant(const ReesAlgebra& g) {
    if (g.ring()->nvars() != 1)
        throw std::invalid_argument("lambda: algebra must live in one variable");
    LambdaValue best = LambdaValue::infinity();
    for (const auto& wg : g.gens()) {
        LambdaValue v = LambdaValue::ratio(wg.g.order_at_origin(), wg.weight);
        if (v < best) best = v;
    }
    return best;
}

bool integral_member_1d(std::uint64_t n, std::uint64_t m, const ReesAlgebra& g) {
    if (m < 1) throw std::invalid_argument("integral_member_1d: weight must be >= 1");
    LambdaValue lam = lambda_invariant(g);
    if (lam.is_infinite()) return false;  // zero algebra: nothing finite is integral
    return BigRat(n, m) >= *lam.value;
}

bool same_closure_1d(const ReesAlgebra& a, const ReesAlgebra& b) {
    return lambda_invariant(a) == lambda_invariant(b);
}

}  // namespace reesdiff
