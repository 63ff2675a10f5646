#pragma once

#include "reesdiff/rees.hpp"

#include <vector>

namespace reesdiff {

enum class ClosureVariant {
    Absolute,     // all Hasse operators, weight drops by |alpha|
    Relative,     // operators along the first h coordinates only
    Logarithmic,  // x^alpha * Delta^alpha on chosen variables, weight kept
    OrderFree,    // Delta^alpha of any order, weight kept
};

struct ClosureOptions {
    ClosureVariant variant = ClosureVariant::Absolute;
    std::uint32_t relative_h = 0;          // Relative: 1 <= h <= d
    std::vector<std::size_t> log_vars;     // Logarithmic: nonempty variable indices
    bool simplify = true;                  // drop zero and duplicate generators
    bool prune = false;                    // Groebner-backed redundancy pruning

    static ClosureOptions absolute() { return {}; }
    static ClosureOptions relative(std::uint32_t h);
    static ClosureOptions logarithmic(std::vector<std::size_t> vars);
    static ClosureOptions order_free();
};

/// The smallest extension of G closed under the variant's operators:
/// absolute emits Delta^alpha(g_i) W^{n'-|alpha|} for 0 <= |alpha| < n' <= n_i;
/// relative restricts alpha to the leading h coordinates; logarithmic emits
/// x^alpha Delta^alpha(g_i) and order-free Delta^alpha(g_i), both at every
/// weight 1..n_i with alpha unbounded (finitely many are nonzero).
ReesAlgebra diff_close(const ReesAlgebra& g, const ClosureOptions& opts = {});

/// Checks the closure conditions on the presentation: (a) each generator
/// g W^n lies in the exact piece of every degree n' < n, and (b) each
/// variant operator maps it into the exact piece of the appropriate degree
/// (n - |alpha| for absolute/relative, n for logarithmic/order-free).
bool is_diff_closed(const ReesAlgebra& g, const ClosureOptions& opts = {});

}  // namespace reesdiff
