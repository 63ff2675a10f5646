#include "reesdiff/sing.hpp"

namespace reesdiff {

namespace {

std::vector<ExpVec> alphas_up_to(std::size_t d, std::uint32_t max_total) {
    std::vector<ExpVec> out;
    ExpVec cur(d, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i == d) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t e = 0; e <= left; ++e) {
            cur[i] = e;
            self(self, i + 1, left - e);
        }
        cur[i] = 0;
    };
    rec(rec, 0, max_total);
    return out;
}

}  // namespace

SingPresentation sing_presentation(const ReesAlgebra& g) {
    SingPresentation pres;
    const std::size_t d = g.ring()->nvars();
    for (const auto& wg : g.gens()) {
        SingPresentation::Entry entry{wg.g, wg.weight, {}};
        for (const auto& alpha : alphas_up_to(d, wg.weight - 1)) {
            Poly der = hasse_derivative(wg.g, alpha);
            if (der.is_zero()) continue;
            if (der.is_constant()) pres.empty_locus = true;
            entry.derivatives.push_back(std::move(der));
        }
        pres.entries.push_back(std::move(entry));
    }
    return pres;
}

bool in_sing(const ReesAlgebra& g, const PointK& p) {
    if (p.size() != g.ring()->nvars())
        throw std::invalid_argument("in_sing: point dimension mismatch");
    for (const auto& wg : g.gens())
        if (order_at(wg.g, p) < static_cast<std::int64_t>(wg.weight)) return false;
    return true;
}

std::vector<PointK> sing_points(const ReesAlgebra& g, std::uint64_t cap) {
    const FieldSpec fld = g.ring()->field();
    if (!fld.is_modular())
        throw std::invalid_argument("sing_points: needs positive characteristic");
    const std::size_t d = g.ring()->nvars();
    const std::uint64_t p = fld.characteristic;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        total *= p;
        if (total > cap)
            throw std::invalid_argument("sing_points: grid size exceeds cap");
    }
    std::vector<PointK> found;
    PointK pt(d, FieldElem::zero(fld));
    std::vector<std::uint64_t> idx(d, 0);
    for (std::uint64_t k = 0; k < total; ++k) {
        std::uint64_t r = k;
        for (std::size_t i = d; i-- > 0;) {
            idx[i] = r % p;
            r /= p;
        }
        for (std::size_t i = 0; i < d; ++i)
            pt[i] = FieldElem::from_integer(fld, static_cast<long long>(idx[i]));
        if (in_sing(g, pt)) found.push_back(pt);
    }
    return found;
}

}  // namespace reesdiff
