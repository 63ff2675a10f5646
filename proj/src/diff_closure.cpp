#include "reesdiff/diff_closure.hpp"

#include <algorithm>
#include <set>

namespace reesdiff {

ClosureOptions ClosureOptions::relative(std::uint32_t h) {
    ClosureOptions o;
    o.variant = ClosureVariant::Relative;
    o.relative_h = h;
    return o;
}

ClosureOptions ClosureOptions::logarithmic(std::vector<std::size_t> vars) {
    ClosureOptions o;
    o.variant = ClosureVariant::Logarithmic;
    o.log_vars = std::move(vars);
    return o;
}

ClosureOptions ClosureOptions::order_free() {
    ClosureOptions o;
    o.variant = ClosureVariant::OrderFree;
    return o;
}

namespace {

void validate(const ClosureOptions& opts, const RingPtr& ring) {
    const std::size_t d = ring->nvars();
    if (opts.variant == ClosureVariant::Relative) {
        if (opts.relative_h < 1 || opts.relative_h > d)
            throw std::invalid_argument("relative closure: h must satisfy 1 <= h <= d");
    }
    if (opts.variant == ClosureVariant::Logarithmic) {
        if (opts.log_vars.empty())
            throw std::invalid_argument("logarithmic closure: variable subset is empty");
        for (auto i : opts.log_vars)
            if (i >= d) throw std::invalid_argument("logarithmic closure: bad variable index");
    }
}

/// Multi-indices alpha != 0 with alpha <= box componentwise, restricted to
/// the allowed variable positions, and |alpha| <= total_cap.
std::vector<ExpVec> alpha_range(const ExpVec& box, const std::vector<std::size_t>& allowed,
                                std::uint64_t total_cap) {
    std::vector<ExpVec> out;
    ExpVec cur(box.size(), 0);
    auto rec = [&](auto&& self, std::size_t k, std::uint64_t used) -> void {
        if (k == allowed.size()) {
            if (used > 0) out.push_back(cur);
            return;
        }
        std::size_t v = allowed[k];
        for (std::uint32_t e = 0; e <= box[v] && used + e <= total_cap; ++e) {
            cur[v] = e;
            self(self, k + 1, used + e);
        }
        cur[v] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<std::size_t> all_vars(std::size_t d) {
    std::vector<std::size_t> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = i;
    return v;
}

ExpVec degree_box(const Poly& g) {
    ExpVec box(g.ring()->nvars(), 0);
    for (std::size_t i = 0; i < box.size(); ++i) box[i] = g.degree_in(i);
    return box;
}

}  // namespace

ReesAlgebra diff_close(const ReesAlgebra& g, const ClosureOptions& opts) {
    validate(opts, g.ring());
    const std::size_t d = g.ring()->nvars();
    std::vector<std::size_t> allowed;
    switch (opts.variant) {
        case ClosureVariant::Relative:
            for (std::size_t i = 0; i < opts.relative_h; ++i) allowed.push_back(i);
            break;
        case ClosureVariant::Logarithmic:
            allowed = opts.log_vars;
            break;
        default:
            allowed = all_vars(d);
    }
    const bool weight_kept = opts.variant == ClosureVariant::Logarithmic ||
                             opts.variant == ClosureVariant::OrderFree;

    std::vector<WeightedGen> out;
    for (const auto& wg : g.gens()) {
        const std::uint32_t n = wg.weight;
        ExpVec box = degree_box(wg.g);
        std::uint64_t cap = weight_kept ? exp_total(box) : n - 1;
        std::vector<ExpVec> alphas = alpha_range(box, allowed, cap);
        alphas.push_back(ExpVec(d, 0));  // alpha = 0: the generator itself
        for (const auto& alpha : alphas) {
            Poly der = opts.variant == ClosureVariant::Logarithmic
                           ? log_hasse_derivative(wg.g, alpha)
                           : hasse_derivative(wg.g, alpha);
            if (der.is_zero()) continue;
            std::uint32_t top = weight_kept
                                    ? n
                                    : n - static_cast<std::uint32_t>(exp_total(alpha));
            for (std::uint32_t w = 1; w <= top; ++w) out.push_back({der, w});
        }
    }

    // zero and duplicate generators are dropped by construction; anything
    // deeper (constant multiples included) is the job of opt-in pruning
    ReesAlgebra closed(g.ring(), std::move(out));

    if (opts.prune) {
        std::vector<WeightedGen> gens = closed.gens();
        for (std::size_t i = 0; i < gens.size();) {
            std::vector<WeightedGen> rest;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) rest.push_back(gens[j]);
            ReesAlgebra without(g.ring(), rest);
            if (!without.empty() && piece_member(gens[i].g, without, gens[i].weight,
                                                 PieceMode::Exact))
                gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
            else
                ++i;
        }
        closed = ReesAlgebra(g.ring(), std::move(gens));
    }
    return closed;
}

bool is_diff_closed(const ReesAlgebra& g, const ClosureOptions& opts) {
    validate(opts, g.ring());
    const std::size_t d = g.ring()->nvars();
    std::vector<std::size_t> allowed;
    switch (opts.variant) {
        case ClosureVariant::Relative:
            for (std::size_t i = 0; i < opts.relative_h; ++i) allowed.push_back(i);
            break;
        case ClosureVariant::Logarithmic:
            allowed = opts.log_vars;
            break;
        default:
            allowed = all_vars(d);
    }
    const bool weight_kept = opts.variant == ClosureVariant::Logarithmic ||
                             opts.variant == ClosureVariant::OrderFree;

    PieceLadder ladder(g, PieceMode::Exact);
    for (const auto& wg : g.gens()) {
        const std::uint32_t n = wg.weight;
        for (std::uint32_t np = 1; np < n; ++np)
            if (!ladder.member(wg.g, np)) return false;

        ExpVec box = degree_box(wg.g);
        std::uint64_t cap = weight_kept ? exp_total(box) : n - 1;
        if (cap == 0) continue;
        for (const auto& alpha : alpha_range(box, allowed, cap)) {
            Poly der = opts.variant == ClosureVariant::Logarithmic
                           ? log_hasse_derivative(wg.g, alpha)
                           : hasse_derivative(wg.g, alpha);
            if (der.is_zero()) continue;
            std::uint32_t target = weight_kept
                                       ? n
                                       : n - static_cast<std::uint32_t>(exp_total(alpha));
            if (!ladder.member(der, target)) return false;
        }
    }
    return true;
}

}  // namespace reesdiff
