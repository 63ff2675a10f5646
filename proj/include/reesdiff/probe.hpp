#pragma once

#include "reesdiff/coeff.hpp"
#include "reesdiff/transforms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reesdiff {

/// Fixed probe schedule: coprime (a, b) with a + b <= limit, ordered by
/// (a + b, a). Trials cycle through it.
std::vector<std::pair<std::uint32_t, std::uint32_t>> curve_schedule(std::uint32_t limit = 12);

struct ProbeTrial {
    std::uint32_t index = 0;
    std::uint32_t a = 1, b = 1;
    std::vector<std::string> coeffs;  // rendered curve coefficients
    LambdaValue lambda_left, lambda_right;
    bool degenerate = false;  // Newton bound missed after all redraws
    std::uint32_t redraws = 0;
    bool mismatch = false;
};

/// Consistent is evidence, not proof (a one-sided test over finitely many
/// curves); refuted is a proof, witnessed by a non-degenerate curve with
/// distinct pullback lambdas.
struct ProbeVerdict {
    bool refuted = false;
    std::optional<ProbeTrial> witness;
    std::vector<ProbeTrial> trials;
    std::uint32_t degenerate_count = 0;
};

ProbeVerdict equal_closure_probe(const ReesAlgebra& g1, const ReesAlgebra& g2,
                                 std::uint32_t trials, std::uint64_t seed);

enum class CertKind { Saturation, Veronese, IntegralWitness };

/// A pair G1 in G2 carrying the construction that certifies finiteness.
struct FinitePair {
    ReesAlgebra g1, g2;
    CertKind cert;
    std::uint32_t veronese_m = 0;
};

FinitePair saturation_pair(const ReesAlgebra& g);
FinitePair veronese_pair(const ReesAlgebra& g, std::uint32_t m);
/// G2 = G1 plus extra generators g W^m with g in I_{m+1}(G1) (each carries
/// the monic-relation witness of Remark-2.2-B type).
FinitePair witness_pair(const ReesAlgebra& g1, const std::vector<WeightedGen>& extras);

/// Structural check of the certificate; throws std::invalid_argument when a
/// pair does not match its claimed construction.
void verify_certificate(const FinitePair& pair);

struct MainCheckReport {
    ProbeVerdict probe;
    bool containment_ok = true;  // pieces N <= bound of close(G1) inside close(G2)
    std::uint32_t bound = 0;
    std::optional<std::pair<LambdaValue, LambdaValue>> coeff_lambda;  // F1' recipe
    bool coeff_lambda_ok = true;
    bool consistent() const {
        return !probe.refuted && containment_ok && coeff_lambda_ok;
    }
};

/// Diff-close both members, probe the closures, check bounded containment,
/// and (when a d-h = 1 split is supplied) compare coefficient-algebra
/// lambdas of the pair itself.
MainCheckReport main_theorem_check(const FinitePair& pair, std::uint32_t trials,
                                   std::uint64_t seed, std::uint32_t bound,
                                   std::optional<Split> split = std::nullopt);

}  // namespace reesdiff
