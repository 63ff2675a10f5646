#pragma once

#include "reesdiff/rees.hpp"

#include <optional>
#include <string>

namespace reesdiff {

/// Coordinate splitting: Z = V(x_1,...,x_h), retraction = projection onto
/// the trailing d-h variables.
struct Split {
    std::uint32_t h = 1;
};

/// Exact nonnegative rational, or infinity (zero algebra).
struct LambdaValue {
    std::optional<BigRat> value;  // nullopt = infinity

    static LambdaValue infinity() { return {}; }
    static LambdaValue of(const BigRat& q) { return {q}; }
    static LambdaValue ratio(std::int64_t order, std::uint32_t weight);

    bool is_infinite() const { return !value.has_value(); }
    bool operator==(const LambdaValue& o) const { return value == o.value; }
    bool operator<(const LambdaValue& o) const;
    bool operator<=(const LambdaValue& o) const { return *this < o || *this == o; }

    std::string str() const;  // "p/q" lowest terms, or "inf"
};

enum class CoeffRecipe { F1Prime, F1 };

/// A Rees algebra over the trailing-variable ring, produced by one of the
/// two coefficient recipes.
struct CoeffAlgebra {
    ReesAlgebra algebra;
    CoeffRecipe recipe;
};

/// Ring in the trailing d-h variables of g's ring.
RingPtr trailing_ring(const RingPtr& ring, Split split);

/// Image of f under x_1,...,x_h -> 0, expressed in the trailing ring.
Poly restrict_to_trailing(const Poly& f, Split split, const RingPtr& target);

/// The coefficients a_alpha = (Delta^{alpha^(1)} g_i)|_{x_(1..h)=0} of each
/// generator, for |alpha^(1)| < N_i, at weight N_i - |alpha^(1)| (F1Prime)
/// or at every weight 1..N_i - |alpha^(1)| (F1).
CoeffAlgebra coefficient_algebra(const ReesAlgebra& g, Split split, CoeffRecipe recipe);

/// min over 0 <= |alpha| < N of nu(a_alpha) / (N - |alpha|) where nu is the
/// order at the origin of the single trailing variable (requires d-h = 1).
LambdaValue sl(const Poly& g, std::uint32_t n, Split split);

/// For a 1-variable algebra: min over generators of nu(g_i)/n_i, which
/// equals inf_r nu(I_r)/r. Determines the integral closure.
LambdaValue lambda_invariant(const ReesAlgebra& g);

/// t^n W^m integral over the (nonzero) 1-variable algebra iff n/m >= lambda.
bool integral_member_1d(std::uint64_t n, std::uint64_t m, const ReesAlgebra& g);

/// Equal lambda = equal integral closure in one variable.
bool same_closure_1d(const ReesAlgebra& a, const ReesAlgebra& b);

}  // namespace reesdiff
