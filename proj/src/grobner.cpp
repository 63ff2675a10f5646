#include "reesdiff/grobner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace reesdiff {

namespace {

struct OrderDesc {
    MonomialOrder order;
    bool operator()(const ExpVec& a, const ExpVec& b) const { return order.less(b, a); }
};

using TermMap = std::map<ExpVec, FieldElem, OrderDesc>;

TermMap to_map(const Poly& f, MonomialOrder order) {
    TermMap m(OrderDesc{order});
    for (const auto& t : f.terms()) m.emplace(t.exp, t.coeff);
    return m;
}

Poly from_map(const RingPtr& ring, const TermMap& m) {
    std::vector<Term> ts;
    ts.reserve(m.size());
    for (const auto& [e, c] : m) ts.push_back({e, c});
    return Poly::from_terms(ring, std::move(ts));
}

void add_scaled_shifted(TermMap& h, const Poly& g, const ExpVec& shift,
                        const FieldElem& scale) {
    for (const auto& t : g.terms()) {
        ExpVec e = exp_add(t.exp, shift);
        FieldElem c = t.coeff * scale;
        auto it = h.find(e);
        if (it == h.end()) {
            h.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) h.erase(it);
        }
    }
}

const ExpVec& leading_exp(const Poly& f, MonomialOrder order) {
    const auto* best = &f.terms().front();
    for (const auto& t : f.terms())
        if (order.less(best->exp, t.exp)) best = &t;
    return best->exp;
}

FieldElem coeff_of(const Poly& f, const ExpVec& e) {
    for (const auto& t : f.terms())
        if (t.exp == e) return t.coeff;
    return FieldElem::zero(f.ring()->field());
}

struct Reducer {
    // leading data cached per basis element
    std::vector<ExpVec> lms;
    std::vector<FieldElem> lcs;
    std::vector<Poly> polys;
    MonomialOrder order;
    RingPtr ring;

    void push(const Poly& g) {
        const ExpVec& lm = leading_exp(g, order);
        lms.push_back(lm);
        lcs.push_back(coeff_of(g, lm));
        polys.push_back(g);
    }

    Poly reduce(const Poly& f) const {
        TermMap h = to_map(f, order);
        TermMap r(OrderDesc{order});
        while (!h.empty()) {
            auto lead = h.begin();
            bool hit = false;
            for (std::size_t i = 0; i < polys.size(); ++i) {
                if (!exp_divides(lms[i], lead->first)) continue;
                ExpVec shift = exp_sub(lead->first, lms[i]);
                FieldElem scale = -(lead->second / lcs[i]);
                add_scaled_shifted(h, polys[i], shift, scale);
                hit = true;
                break;
            }
            if (!hit) {
                r.insert(*lead);
                h.erase(lead);
            }
        }
        return from_map(ring, r);
    }
};

Poly s_poly(const Poly& f, const Poly& g, MonomialOrder order) {
    const ExpVec& lf = leading_exp(f, order);
    const ExpVec& lg = leading_exp(g, order);
    ExpVec l = exp_lcm(lf, lg);
    FieldElem cf = coeff_of(f, lf), cg = coeff_of(g, lg);
    Poly mf = Poly::monomial(f.ring(), exp_sub(l, lf), cf.inv());
    Poly mg = Poly::monomial(f.ring(), exp_sub(l, lg), cg.inv());
    return mf * f - mg * g;
}

bool coprime(const ExpVec& a, const ExpVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Poly>& gens, MonomialOrder order) {
    RingPtr ring;
    for (const auto& g : gens) {
        if (!g.ring()) continue;
        if (!ring)
            ring = g.ring();
        else if (!same_ring(ring, g.ring()))
            throw std::invalid_argument("buchberger: generators from different rings");
    }
    GroebnerBasis out{ring, order, {}};
    if (!ring) return out;

    Reducer red;
    red.order = order;
    red.ring = ring;

    // (lcm degree, creation sequence) -> pair; normal strategy
    using Key = std::tuple<std::uint64_t, std::uint64_t>;
    std::map<Key, std::pair<std::size_t, std::size_t>> pairs;
    std::uint64_t seq = 0;

    auto add_pairs = [&](std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            if (coprime(red.lms[i], red.lms[n])) continue;  // product criterion
            std::uint64_t deg = exp_total(exp_lcm(red.lms[i], red.lms[n]));
            pairs.emplace(Key{deg, seq++}, std::make_pair(i, n));
        }
    };

    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        Poly r = red.reduce(g).monic();
        if (r.is_zero()) continue;
        red.push(r);
        add_pairs(red.polys.size() - 1);
    }

    while (!pairs.empty()) {
        auto it = pairs.begin();
        auto [i, j] = it->second;
        pairs.erase(it);
        Poly r = red.reduce(s_poly(red.polys[i], red.polys[j], order));
        if (r.is_zero()) continue;
        red.push(r.monic());
        add_pairs(red.polys.size() - 1);
    }

    // minimalize: drop elements whose LM is divisible by another LM
    std::vector<Poly> mini;
    for (std::size_t i = 0; i < red.polys.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < red.polys.size() && !redundant; ++j) {
            if (i == j) continue;
            if (exp_divides(red.lms[j], red.lms[i]) &&
                (red.lms[j] != red.lms[i] || j < i))
                redundant = true;
        }
        if (!redundant) mini.push_back(red.polys[i]);
    }

    // interreduce to the unique reduced basis
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < mini.size(); ++i) {
            Reducer rest;
            rest.order = order;
            rest.ring = ring;
            for (std::size_t j = 0; j < mini.size(); ++j)
                if (j != i) rest.push(mini[j]);
            Poly r = rest.reduce(mini[i]);
            if (r.is_zero()) {
                mini.erase(mini.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
            r = r.monic();
            if (r != mini[i]) {
                mini[i] = r;
                changed = true;
            }
        }
    }

    std::sort(mini.begin(), mini.end(), [&](const Poly& a, const Poly& b) {
        return order.less(leading_exp(b, order), leading_exp(a, order));
    });
    out.basis = std::move(mini);
    return out;
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
    if (gb.basis.empty()) return f;
    if (!same_ring(f.ring(), gb.ring))
        throw std::invalid_argument("normal_form: ring mismatch");
    Reducer red;
    red.order = gb.order;
    red.ring = gb.ring;
    for (const auto& g : gb.basis) red.push(g);
    return red.reduce(f);
}

bool ideal_member(const Poly& f, const GroebnerBasis& gb) {
    if (f.is_zero()) return true;
    if (gb.ring && !same_ring(f.ring(), gb.ring))
        throw std::invalid_argument("ideal_member: ring mismatch");
    return normal_form(f, gb).is_zero();
}

namespace {

void enumerate_monomials(std::size_t d, std::uint32_t max_deg,
                         std::vector<ExpVec>& out) {
    ExpVec cur(d, 0);
    // lexicographic recursion, all monomials of total degree <= max_deg
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i == d - 1) {
            for (std::uint32_t e = 0; e <= left; ++e) {
                cur[i] = e;
                out.push_back(cur);
            }
            cur[i] = 0;
            return;
        }
        for (std::uint32_t e = 0; e <= left; ++e) {
            cur[i] = e;
            self(self, i + 1, left - e);
        }
        cur[i] = 0;
    };
    rec(rec, 0, max_deg);
}

}  // namespace

bool member_bounded(const Poly& f, const std::vector<Poly>& gens,
                    std::uint32_t cofactor_degree_bound) {
    if (f.is_zero()) return true;
    RingPtr ring = f.ring();
    std::vector<Poly> gs;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring))
            throw std::invalid_argument("member_bounded: ring mismatch");
        gs.push_back(g);
    }
    if (gs.empty()) return false;

    std::int64_t max_deg = 0;
    for (const auto& g : gs) max_deg = std::max(max_deg, g.total_degree());
    std::int64_t row_deg = static_cast<std::int64_t>(cofactor_degree_bound) + max_deg;
    if (f.total_degree() > row_deg) return false;

    const std::size_t d = ring->nvars();
    std::vector<ExpVec> cof_mons;
    enumerate_monomials(d, cofactor_degree_bound, cof_mons);

    std::map<ExpVec, std::size_t, bool (*)(const ExpVec&, const ExpVec&)> row_of(grevlex_less);
    std::vector<ExpVec> row_mons;
    enumerate_monomials(d, static_cast<std::uint32_t>(row_deg), row_mons);
    for (const auto& e : row_mons) row_of.emplace(e, row_of.size());

    const std::size_t rows = row_mons.size();
    const std::size_t cols = cof_mons.size() * gs.size();
    const FieldSpec fld = ring->field();
    std::vector<std::vector<FieldElem>> a(
        rows, std::vector<FieldElem>(cols + 1, FieldElem::zero(fld)));

    std::size_t col = 0;
    for (const auto& g : gs) {
        for (const auto& m : cof_mons) {
            for (const auto& t : g.terms()) {
                auto it = row_of.find(exp_add(t.exp, m));
                a[it->second][col] += t.coeff;
            }
            ++col;
        }
    }
    for (const auto& t : f.terms()) a[row_of.find(t.exp)->second][cols] = t.coeff;

    // Gaussian elimination; consistent iff no pivot lands in the RHS column.
    std::size_t rank_row = 0;
    for (std::size_t c = 0; c < cols && rank_row < rows; ++c) {
        std::size_t piv = rank_row;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank_row]);
        FieldElem inv = a[rank_row][c].inv();
        for (std::size_t cc = c; cc <= cols; ++cc) a[rank_row][cc] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank_row || a[r][c].is_zero()) continue;
            FieldElem factor = a[r][c];
            for (std::size_t cc = c; cc <= cols; ++cc)
                a[r][cc] -= factor * a[rank_row][cc];
        }
        ++rank_row;
    }
    for (std::size_t r = 0; r < rows; ++r) {
        bool all_zero = true;
        for (std::size_t c = 0; c < cols; ++c)
            if (!a[r][c].is_zero()) {
                all_zero = false;
                break;
            }
        if (all_zero && !a[r][cols].is_zero()) return false;
    }
    return true;
}

}  // namespace reesdiff
