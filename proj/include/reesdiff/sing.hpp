#pragma once

#include "reesdiff/rees.hpp"

#include <vector>

namespace reesdiff {

using PointK = std::vector<FieldElem>;

/// Per generator g_i W^{n_i}: all Hasse derivatives of order <= n_i - 1.
/// Their common zero set is Sing(G); a nonzero constant derivative forces
/// the empty locus.
struct SingPresentation {
    struct Entry {
        Poly generator;
        std::uint32_t weight;
        std::vector<Poly> derivatives;
    };
    std::vector<Entry> entries;
    bool empty_locus = false;
};

SingPresentation sing_presentation(const ReesAlgebra& g);

/// order_at(g_i, p) >= n_i for every generator.
bool in_sing(const ReesAlgebra& g, const PointK& p);

/// All points of F_p^d in Sing(G), lexicographic order of residue tuples.
/// Requires positive characteristic and p^d <= cap.
std::vector<PointK> sing_points(const ReesAlgebra& g, std::uint64_t cap = 1000000);

}  // namespace reesdiff
