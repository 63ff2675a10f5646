#pragma once

#include "reesdiff/coeff.hpp"
#include "reesdiff/rees.hpp"

#include <vector>

namespace reesdiff {

enum class MapKind {
    SmoothInclusion,
    Restriction,
    TriangularAutomorphism,
    MonomialCurve,
    General,
};

/// Ring homomorphism given by one target-ring image per source variable.
/// Corresponds to the scheme morphism Spec(target) -> Spec(source).
struct RingMap {
    RingPtr source;
    RingPtr target;
    std::vector<Poly> images;
    MapKind kind = MapKind::General;

    Poly apply(const Poly& f) const { return substitute(f, target, images); }
    /// Image in source space of a target-space point.
    std::vector<FieldElem> apply_point(const std::vector<FieldElem>& p) const;
};

RingMap identity_map(const RingPtr& ring);
/// Kill the leading h variables; target is the trailing ring.
RingMap restriction_map(const RingPtr& ring, std::uint32_t h);
/// Source variables must all exist in the (larger) target ring.
RingMap inclusion_map(const RingPtr& source, const RingPtr& target);
/// x_j -> x_j + shift_j for trailing j, shifts polynomial in the leading h
/// variables and vanishing at the origin; leading variables fixed. Always a
/// polynomial automorphism restricting to the identity on V(x_1..x_h).
RingMap triangular_automorphism(const RingPtr& ring, std::uint32_t h,
                                const std::vector<Poly>& shifts);
/// Apply f then g.
RingMap compose(const RingMap& f, const RingMap& g);

/// Generators pulled back through the map, weights unchanged.
ReesAlgebra total_transform(const ReesAlgebra& g, const RingMap& map);

/// x_i -> c_i t^a (i < d), x_d -> t^b: the one-dimensional probe morphism.
struct MonomialCurve {
    std::uint32_t a = 1;
    std::uint32_t b = 1;
    std::vector<FieldElem> coeffs;  // d-1 nonzero coefficients
};

RingMap curve_map(const RingPtr& source, const MonomialCurve& c, const RingPtr& line);
ReesAlgebra curve_pullback(const ReesAlgebra& g, const MonomialCurve& c);

/// Support of the polynomial, grevlex-ascending.
std::vector<ExpVec> newton_support(const Poly& g);

/// l(y) = a(y_1+..+y_{d-1}) + b y_d evaluated on one exponent vector.
std::uint64_t curve_level(const ExpVec& e, std::uint32_t a, std::uint32_t b);

/// Whether each generator's support lies in {l >= a n_i} and touches the
/// boundary hyperplane l = a n_i.
struct HalfspaceReport {
    struct Entry {
        std::uint64_t min_level;  // min l over the support
        std::uint64_t bound;      // a * n_i
        bool inside;
        bool touches;
    };
    std::vector<Entry> entries;
    bool all_inside = true;
    bool any_touches = false;
};

HalfspaceReport halfspace_check(const ReesAlgebra& g, std::uint32_t a, std::uint32_t b);

}  // namespace reesdiff
