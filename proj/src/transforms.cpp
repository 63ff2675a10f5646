#include "reesdiff/transforms.hpp"

#include <algorithm>

namespace reesdiff {

std::vector<FieldElem> RingMap::apply_point(const std::vector<FieldElem>& p) const {
    std::vector<FieldElem> out;
    out.reserve(images.size());
    for (const auto& img : images) out.push_back(eval_at(img, p));
    return out;
}

RingMap identity_map(const RingPtr& ring) {
    std::vector<Poly> images;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        images.push_back(Poly::variable(ring, i));
    return RingMap{ring, ring, std::move(images), MapKind::General};
}

RingMap restriction_map(const RingPtr& ring, std::uint32_t h) {
    const std::size_t d = ring->nvars();
    if (h < 1 || h >= d) throw std::invalid_argument("restriction_map: need 1 <= h <= d-1");
    RingPtr target = trailing_ring(ring, Split{h});
    std::vector<Poly> images;
    for (std::size_t i = 0; i < d; ++i) {
        if (i < h)
            images.push_back(Poly::zero(target));
        else
            images.push_back(Poly::variable(target, i - h));
    }
    return RingMap{ring, target, std::move(images), MapKind::Restriction};
}

RingMap inclusion_map(const RingPtr& source, const RingPtr& target) {
    if (source->field() != target->field())
        throw std::invalid_argument("inclusion_map: field mismatch");
    std::vector<Poly> images;
    for (const auto& name : source->vars()) {
        auto idx = target->var_index(name);
        if (!idx)
            throw std::invalid_argument("inclusion_map: variable '" + name +
                                        "' missing from target ring");
        images.push_back(Poly::variable(target, *idx));
    }
    return RingMap{source, target, std::move(images), MapKind::SmoothInclusion};
}

RingMap triangular_automorphism(const RingPtr& ring, std::uint32_t h,
                                const std::vector<Poly>& shifts) {
    const std::size_t d = ring->nvars();
    if (h < 1 || h >= d) throw std::invalid_argument("triangular_automorphism: bad h");
    if (shifts.size() != d - h)
        throw std::invalid_argument("triangular_automorphism: need one shift per trailing variable");
    for (const auto& s : shifts) {
        if (!same_ring(s.ring(), ring))
            throw std::invalid_argument("triangular_automorphism: shift in wrong ring");
        for (const auto& t : s.terms()) {
            bool leading = false;
            for (std::uint32_t i = 0; i < h; ++i)
                if (t.exp[i] != 0) leading = true;
            for (std::size_t i = h; i < d; ++i)
                if (t.exp[i] != 0)
                    throw std::invalid_argument(
                        "triangular_automorphism: shift must use leading variables only");
            if (!leading)
                throw std::invalid_argument(
                    "triangular_automorphism: shift must vanish on the subspace");
        }
    }
    std::vector<Poly> images;
    for (std::size_t i = 0; i < d; ++i) {
        Poly xi = Poly::variable(ring, i);
        images.push_back(i < h ? xi : xi + shifts[i - h]);
    }
    return RingMap{ring, ring, std::move(images), MapKind::TriangularAutomorphism};
}

RingMap compose(const RingMap& f, const RingMap& g) {
    if (!same_ring(f.target, g.source))
        throw std::invalid_argument("compose: middle rings differ");
    std::vector<Poly> images;
    images.reserve(f.images.size());
    for (const auto& img : f.images) images.push_back(g.apply(img));
    return RingMap{f.source, g.target, std::move(images), MapKind::General};
}

ReesAlgebra total_transform(const ReesAlgebra& g, const RingMap& map) {
    if (!same_ring(g.ring(), map.source))
        throw std::invalid_argument("total_transform: algebra not over the map's source");
    std::vector<WeightedGen> out;
    for (const auto& wg : g.gens()) out.push_back({map.apply(wg.g), wg.weight});
    return ReesAlgebra(map.target, std::move(out));
}

RingMap curve_map(const RingPtr& source, const MonomialCurve& c, const RingPtr& line) {
    const std::size_t d = source->nvars();
    if (line->nvars() != 1) throw std::invalid_argument("curve_map: target must be a line");
    if (c.coeffs.size() + 1 != d)
        throw std::invalid_argument("curve_map: need d-1 curve coefficients");
    if (c.a < 1 || c.b < 1) throw std::invalid_argument("curve_map: weights must be >= 1");
    for (const auto& l : c.coeffs)
        if (l.is_zero()) throw std::invalid_argument("curve_map: zero curve coefficient");
    std::vector<Poly> images;
    for (std::size_t i = 0; i + 1 < d; ++i)
        images.push_back(Poly::monomial(line, ExpVec{c.a}, c.coeffs[i]));
    images.push_back(Poly::monomial(line, ExpVec{c.b}, FieldElem::one(source->field())));
    return RingMap{source, line, std::move(images), MapKind::MonomialCurve};
}

ReesAlgebra curve_pullback(const ReesAlgebra& g, const MonomialCurve& c) {
    RingPtr line = make_ring(g.ring()->field(), {"t"});
    return total_transform(g, curve_map(g.ring(), c, line));
}

std::vector<ExpVec> newton_support(const Poly& g) {
    std::vector<ExpVec> out;
    out.reserve(g.nterms());
    for (const auto& t : g.terms()) out.push_back(t.exp);
    std::sort(out.begin(), out.end(), grevlex_less);
    return out;
}

std::uint64_t curve_level(const ExpVec& e, std::uint32_t a, std::uint32_t b) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) s += std::uint64_t(a) * e[i];
    s += std::uint64_t(b) * e.back();
    return s;
}

HalfspaceReport halfspace_check(const ReesAlgebra& g, std::uint32_t a, std::uint32_t b) {
    HalfspaceReport rep;
    for (const auto& wg : g.gens()) {
        std::uint64_t min_level = UINT64_MAX;
        for (const auto& t : wg.g.terms())
            min_level = std::min(min_level, curve_level(t.exp, a, b));
        std::uint64_t bound = std::uint64_t(a) * wg.weight;
        HalfspaceReport::Entry e{min_level, bound, min_level >= bound, min_level == bound};
        rep.all_inside = rep.all_inside && e.inside;
        rep.any_touches = rep.any_touches || e.touches;
        rep.entries.push_back(e);
    }
    return rep;
}

}  // namespace reesdiff
