#include "reesdiff/poly.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace reesdiff {

std::uint64_t exp_total(const ExpVec& e) {
    std::uint64_t s = 0;
    for (auto v : e) s += v;
    return s;
}

bool exp_divides(const ExpVec& b, const ExpVec& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] > a[i]) return false;
    return true;
}

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool grevlex_less(const ExpVec& a, const ExpVec& b) {
    std::uint64_t da = exp_total(a), db = exp_total(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];  // bigger trailing entry is smaller
    }
    return false;
}

bool lex_less(const ExpVec& a, const ExpVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

PolyRing::PolyRing(FieldSpec field, std::vector<std::string> vars)
    : field_(field), vars_(std::move(vars)) {
    if (vars_.empty()) throw std::invalid_argument("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate variable name: " + v);
    }
}

std::optional<std::size_t> PolyRing::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

std::string PolyRing::str() const {
    std::string s = field_.str() + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    return s + "]";
}

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars) {
    return std::make_shared<const PolyRing>(field, std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

Poly Poly::constant(RingPtr ring, const FieldElem& c) {
    Poly f(ring);
    if (!c.is_zero()) f.terms_.push_back({ExpVec(ring->nvars(), 0), c});
    return f;
}

Poly Poly::constant(RingPtr ring, long long n) {
    FieldElem c = FieldElem::from_integer(ring->field(), n);
    return constant(std::move(ring), c);
}

Poly Poly::variable(RingPtr ring, std::size_t i) {
    if (i >= ring->nvars()) throw std::out_of_range("variable index");
    ExpVec e(ring->nvars(), 0);
    e[i] = 1;
    FieldElem c = FieldElem::one(ring->field());
    return monomial(std::move(ring), std::move(e), std::move(c));
}

Poly Poly::monomial(RingPtr ring, ExpVec e, FieldElem c) {
    if (e.size() != ring->nvars()) throw std::invalid_argument("exponent length mismatch");
    Poly f(ring);
    if (!c.is_zero()) f.terms_.push_back({std::move(e), std::move(c)});
    return f;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    std::map<ExpVec, FieldElem, bool (*)(const ExpVec&, const ExpVec&)> acc(grevlex_less);
    for (auto& t : terms) {
        if (t.exp.size() != ring->nvars())
            throw std::invalid_argument("exponent length mismatch");
        auto it = acc.find(t.exp);
        if (it == acc.end())
            acc.emplace(std::move(t.exp), std::move(t.coeff));
        else
            it->second += t.coeff;
    }
    Poly f(std::move(ring));
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (!it->second.is_zero()) f.terms_.push_back({it->first, it->second});
    return f;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exp_total(terms_[0].exp) == 0);
}

std::int64_t Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<std::int64_t>(exp_total(terms_.front().exp));
}

std::int64_t Poly::order_at_origin() const {
    if (terms_.empty()) return kOrderInfinity;
    std::uint64_t m = exp_total(terms_[0].exp);
    for (const auto& t : terms_) m = std::min(m, exp_total(t.exp));
    return static_cast<std::int64_t>(m);
}

std::uint32_t Poly::degree_in(std::size_t i) const {
    std::uint32_t m = 0;
    for (const auto& t : terms_) m = std::max(m, t.exp[i]);
    return m;
}

void Poly::check_ring(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("mixed-ring arithmetic");
}

Poly Poly::operator-() const {
    Poly f = *this;
    for (auto& t : f.terms_) t.coeff = -t.coeff;
    return f;
}

Poly Poly::operator+(const Poly& o) const {
    check_ring(o);
    // merge two descending term lists
    Poly f(ring_);
    f.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const auto& a = terms_[i];
        const auto& b = o.terms_[j];
        if (a.exp == b.exp) {
            FieldElem c = a.coeff + b.coeff;
            if (!c.is_zero()) f.terms_.push_back({a.exp, c});
            ++i, ++j;
        } else if (grevlex_less(b.exp, a.exp)) {
            f.terms_.push_back(a);
            ++i;
        } else {
            f.terms_.push_back(b);
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) f.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) f.terms_.push_back(o.terms_[j]);
    return f;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_ring(o);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            prod.push_back({exp_add(a.exp, b.exp), a.coeff * b.coeff});
    return from_terms(ring_, std::move(prod));
}

Poly Poly::scaled(const FieldElem& c) const {
    if (c.is_zero()) return Poly(ring_);
    Poly f = *this;
    for (auto& t : f.terms_) t.coeff = t.coeff * c;
    return f;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly r = Poly::constant(ring_, 1);
    Poly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

const Term& Poly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
    return terms_.front();
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(terms_.front().coeff.inv());
}

bool Poly::is_constant_multiple_of(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    if (terms_.size() != o.terms_.size()) return false;
    FieldElem ratio = terms_[0].coeff / o.terms_[0].coeff;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].exp != o.terms_[i].exp) return false;
        if (terms_[i].coeff != o.terms_[i].coeff * ratio) return false;
    }
    return true;
}

int Poly::cmp(const Poly& a, const Poly& b) {
    const auto& ta = a.terms_;
    const auto& tb = b.terms_;
    for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
        if (ta[i].exp != tb[i].exp) return grevlex_less(ta[i].exp, tb[i].exp) ? -1 : 1;
        int c = ta[i].coeff.cmp(tb[i].coeff);
        if (c != 0) return c;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
    return 0;
}

Poly hasse_derivative(const Poly& f, const ExpVec& alpha) {
    if (alpha.size() != f.ring()->nvars())
        throw std::invalid_argument("hasse_derivative: multi-index length mismatch");
    const FieldSpec fld = f.ring()->field();
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (!exp_divides(alpha, t.exp)) continue;
        BigInt c = multi_binomial(t.exp, alpha);
        if (c.is_zero()) continue;
        FieldElem fc = FieldElem::from_integer(fld, c) * t.coeff;
        if (fc.is_zero()) continue;
        out.push_back({exp_sub(t.exp, alpha), fc});
    }
    return Poly::from_terms(f.ring(), std::move(out));
}

Poly log_hasse_derivative(const Poly& f, const ExpVec& alpha) {
    Poly d = hasse_derivative(f, alpha);
    if (d.is_zero()) return d;
    return Poly::monomial(f.ring(), alpha, FieldElem::one(f.ring()->field())) * d;
}

Poly substitute(const Poly& f, const RingPtr& target, const std::vector<Poly>& images) {
    const std::size_t d = f.ring()->nvars();
    if (images.size() != d)
        throw std::invalid_argument("substitute: need one image per source variable");
    for (const auto& g : images)
        if (!same_ring(g.ring(), target))
            throw std::invalid_argument("substitute: image in wrong ring");
    if (f.ring()->field() != target->field())
        throw std::invalid_argument("substitute: field mismatch");

    // cache powers of each image as needed
    std::vector<std::vector<Poly>> powers(d);
    for (std::size_t i = 0; i < d; ++i) powers[i].push_back(Poly::constant(target, 1));
    auto power = [&](std::size_t i, std::uint32_t e) -> const Poly& {
        auto& ps = powers[i];
        while (ps.size() <= e) ps.push_back(ps.back() * images[i]);
        return ps[e];
    };

    Poly acc(target);
    for (const auto& t : f.terms()) {
        Poly m = Poly::constant(target, 1).scaled(t.coeff);
        for (std::size_t i = 0; i < d; ++i)
            if (t.exp[i] != 0) m = m * power(i, t.exp[i]);
        acc = acc + m;
    }
    return acc;
}

Poly taylor_shift(const Poly& f, const std::vector<FieldElem>& point) {
    const std::size_t d = f.ring()->nvars();
    if (point.size() != d) throw std::invalid_argument("taylor_shift: point dimension mismatch");
    std::vector<Poly> images;
    images.reserve(d);
    for (std::size_t i = 0; i < d; ++i)
        images.push_back(Poly::variable(f.ring(), i) + Poly::constant(f.ring(), point[i]));
    return substitute(f, f.ring(), images);
}

std::int64_t order_at(const Poly& f, const std::vector<FieldElem>& point) {
    return taylor_shift(f, point).order_at_origin();
}

FieldElem eval_at(const Poly& f, const std::vector<FieldElem>& point) {
    const std::size_t d = f.ring()->nvars();
    if (point.size() != d) throw std::invalid_argument("eval_at: point dimension mismatch");
    FieldElem acc = FieldElem::zero(f.ring()->field());
    for (const auto& t : f.terms()) {
        FieldElem v = t.coeff;
        for (std::size_t i = 0; i < d; ++i)
            for (std::uint32_t k = 0; k < t.exp[i]; ++k) v = v * point[i];
        acc = acc + v;
    }
    return acc;
}

}  // namespace reesdiff
