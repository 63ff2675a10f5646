#include "reesdiff/probe.hpp"

#include "reesdiff/diff_closure.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace reesdiff {

std::vector<std::pair<std::uint32_t, std::uint32_t>> curve_schedule(std::uint32_t limit) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t s = 2; s <= limit; ++s)
        for (std::uint32_t a = 1; a < s; ++a) {
            std::uint32_t b = s - a;
            if (std::gcd(a, b) == 1) out.emplace_back(a, b);
        }
    return out;
}

namespace {

FieldElem draw_nonzero(std::mt19937_64& rng, const FieldSpec& fld) {
    if (fld.is_modular()) {
        std::uint64_t p = fld.characteristic;
        return FieldElem::from_integer(fld, static_cast<long long>(1 + rng() % (p - 1)));
    }
    long long mag = static_cast<long long>(1 + rng() % 9);
    if (rng() & 1u) mag = -mag;
    return FieldElem::from_integer(fld, mag);
}

/// Order each generator's pullback should hit for generic coefficients.
std::int64_t newton_bound(const Poly& g, std::uint32_t a, std::uint32_t b) {
    std::uint64_t m = UINT64_MAX;
    for (const auto& t : g.terms()) m = std::min(m, curve_level(t.exp, a, b));
    return static_cast<std::int64_t>(m);
}

struct PullResult {
    LambdaValue lambda;
    bool degenerate = false;
};

PullResult pull_lambda(const ReesAlgebra& g, const MonomialCurve& c) {
    PullResult res{LambdaValue::infinity(), false};
    RingPtr line = make_ring(g.ring()->field(), {"t"});
    RingMap map = curve_map(g.ring(), c, line);
    for (const auto& wg : g.gens()) {
        Poly pulled = map.apply(wg.g);
        std::int64_t expect = newton_bound(wg.g, c.a, c.b);
        if (pulled.is_zero() || pulled.order_at_origin() != expect) res.degenerate = true;
        LambdaValue v = LambdaValue::ratio(pulled.order_at_origin(), wg.weight);
        if (v < res.lambda) res.lambda = v;
    }
    return res;
}

}  // namespace

ProbeVerdict equal_closure_probe(const ReesAlgebra& g1, const ReesAlgebra& g2,
                                 std::uint32_t trials, std::uint64_t seed) {
    if (!same_ring(g1.ring(), g2.ring()))
        throw std::invalid_argument("equal_closure_probe: algebras over different rings");
    if (trials < 1) throw std::invalid_argument("equal_closure_probe: trials must be >= 1");

    const FieldSpec fld = g1.ring()->field();
    const std::size_t d = g1.ring()->nvars();
    auto schedule = curve_schedule();
    std::mt19937_64 rng(seed);
    const std::uint32_t max_redraws = 8;

    ProbeVerdict verdict;
    for (std::uint32_t t = 0; t < trials; ++t) {
        auto [a, b] = schedule[t % schedule.size()];
        ProbeTrial trial;
        trial.index = t;
        trial.a = a;
        trial.b = b;

        for (std::uint32_t attempt = 0;; ++attempt) {
            MonomialCurve c{a, b, {}};
            for (std::size_t i = 0; i + 1 < d; ++i) c.coeffs.push_back(draw_nonzero(rng, fld));
            PullResult left = pull_lambda(g1, c);
            PullResult right = pull_lambda(g2, c);
            trial.redraws = attempt;
            trial.coeffs.clear();
            for (const auto& l : c.coeffs) trial.coeffs.push_back(l.str());
            trial.lambda_left = left.lambda;
            trial.lambda_right = right.lambda;
            trial.degenerate = left.degenerate || right.degenerate;
            if (!trial.degenerate || attempt >= max_redraws) break;
        }

        if (trial.degenerate) {
            ++verdict.degenerate_count;
        } else if (!(trial.lambda_left == trial.lambda_right)) {
            trial.mismatch = true;
            verdict.refuted = true;
            verdict.witness = trial;
            verdict.trials.push_back(trial);
            return verdict;
        }
        verdict.trials.push_back(trial);
    }
    return verdict;
}

FinitePair saturation_pair(const ReesAlgebra& g) {
    return FinitePair{g, saturate_weights(g), CertKind::Saturation, 0};
}

FinitePair veronese_pair(const ReesAlgebra& g, std::uint32_t m) {
    return FinitePair{veronese(g, m), g, CertKind::Veronese, m};
}

FinitePair witness_pair(const ReesAlgebra& g1, const std::vector<WeightedGen>& extras) {
    std::vector<WeightedGen> gens = g1.gens();
    for (const auto& e : extras) gens.push_back(e);
    return FinitePair{g1, ReesAlgebra(g1.ring(), std::move(gens)), CertKind::IntegralWitness, 0};
}

void verify_certificate(const FinitePair& pair) {
    switch (pair.cert) {
        case CertKind::Saturation: {
            if (!(pair.g2 == saturate_weights(pair.g1)))
                throw std::invalid_argument(
                    "certificate check failed: second algebra is not the weight "
                    "saturation of the first");
            return;
        }
        case CertKind::Veronese: {
            if (pair.veronese_m < 1)
                throw std::invalid_argument("certificate check failed: missing Veronese degree");
            if (!(pair.g1 == veronese(pair.g2, pair.veronese_m)))
                throw std::invalid_argument(
                    "certificate check failed: first algebra is not the degree-" +
                    std::to_string(pair.veronese_m) + " Veronese of the second");
            return;
        }
        case CertKind::IntegralWitness: {
            // G2 must extend G1 and every extra generator g W^m must satisfy
            // g in I_{m+1}(G1), giving the monic relation Z^{m+1} = g^{m+1} W^{m(m+1)}.
            std::vector<WeightedGen> extras;
            for (const auto& wg : pair.g2.gens()) {
                bool in_g1 = false;
                for (const auto& og : pair.g1.gens())
                    if (og.weight == wg.weight && og.g == wg.g) {
                        in_g1 = true;
                        break;
                    }
                if (!in_g1) extras.push_back(wg);
            }
            for (const auto& og : pair.g1.gens()) {
                bool found = false;
                for (const auto& wg : pair.g2.gens())
                    if (og.weight == wg.weight && og.g == wg.g) found = true;
                if (!found)
                    throw std::invalid_argument(
                        "certificate check failed: second algebra drops a generator");
            }
            for (const auto& e : extras) {
                IntegralWitness w = integral_witness(e.g, e.weight + 1);
                if (!piece_member(w.element, pair.g1, w.element_weight + 1, PieceMode::Exact))
                    throw std::invalid_argument(
                        "certificate check failed: extra generator is not integral "
                        "(not in the graded piece one weight up)");
            }
            return;
        }
    }
}

MainCheckReport main_theorem_check(const FinitePair& pair, std::uint32_t trials,
                                   std::uint64_t seed, std::uint32_t bound,
                                   std::optional<Split> split) {
    verify_certificate(pair);

    ReesAlgebra c1 = diff_close(pair.g1);
    ReesAlgebra c2 = diff_close(pair.g2);

    MainCheckReport report;
    report.bound = bound;
    report.probe = equal_closure_probe(c1, c2, trials, seed);

    if (bound >= 1) {
        PieceLadder l1(c1, PieceMode::Exact), l2(c2, PieceMode::Exact);
        for (std::uint32_t n = 1; n <= bound && report.containment_ok; ++n)
            for (const auto& f : l1.piece(n).basis)
                if (!l2.member(f, n)) {
                    report.containment_ok = false;
                    break;
                }
    }

    const std::size_t d = pair.g1.ring()->nvars();
    if (split && split->h + 1 == d) {
        LambdaValue a =
            lambda_invariant(coefficient_algebra(pair.g1, *split, CoeffRecipe::F1Prime).algebra);
        LambdaValue b =
            lambda_invariant(coefficient_algebra(pair.g2, *split, CoeffRecipe::F1Prime).algebra);
        report.coeff_lambda = std::make_pair(a, b);
        report.coeff_lambda_ok = a == b;
    }
    return report;
}

}  // namespace reesdiff
