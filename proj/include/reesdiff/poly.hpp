#pragma once

#include "reesdiff/field.hpp"

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reesdiff {

/// Exponent vector; length equals the ring dimension.
using ExpVec = std::vector<std::uint32_t>;

std::uint64_t exp_total(const ExpVec& e);
/// a >= b componentwise.
bool exp_divides(const ExpVec& b, const ExpVec& a);
ExpVec exp_add(const ExpVec& a, const ExpVec& b);
ExpVec exp_sub(const ExpVec& a, const ExpVec& b);  // requires b <= a
ExpVec exp_lcm(const ExpVec& a, const ExpVec& b);

/// Graded reverse lexicographic: higher total degree first; ties broken by
/// the last differing coordinate, smaller entry wins.
bool grevlex_less(const ExpVec& a, const ExpVec& b);
bool lex_less(const ExpVec& a, const ExpVec& b);

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// A polynomial ring over an exact field with a fixed, ordered variable list.
class PolyRing {
public:
    PolyRing(FieldSpec field, std::vector<std::string> vars);

    const FieldSpec& field() const { return field_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    std::optional<std::size_t> var_index(std::string_view name) const;

    bool operator==(const PolyRing& o) const {
        return field_ == o.field_ && vars_ == o.vars_;
    }

    std::string str() const;

private:
    FieldSpec field_;
    std::vector<std::string> vars_;
};

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars);
bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
    ExpVec exp;
    FieldElem coeff;
};

/// Order of vanishing; kOrderInfinity encodes the zero polynomial's order
/// and compares above every natural number.
inline constexpr std::int64_t kOrderInfinity = std::numeric_limits<std::int64_t>::max();

/// Immutable sparse multivariate polynomial. Terms are kept in descending
/// grevlex order with no zero coefficients, so equality is term-list equality.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, const FieldElem& c);
    static Poly constant(RingPtr ring, long long n);
    static Poly variable(RingPtr ring, std::size_t i);
    static Poly monomial(RingPtr ring, ExpVec e, FieldElem c);
    /// From arbitrary term list (normalizes: merges, drops zeros, sorts).
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t nterms() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    std::int64_t total_degree() const;
    /// Min total degree of the support; kOrderInfinity for zero.
    std::int64_t order_at_origin() const;
    /// Highest exponent of variable i across the support.
    std::uint32_t degree_in(std::size_t i) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const FieldElem& c) const;
    Poly pow(std::uint32_t e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Leading (grevlex) term.
    const Term& leading_term() const;
    /// Divided by the leading coefficient.
    Poly monic() const;
    /// True if o == c * this for some nonzero field constant c.
    bool is_constant_multiple_of(const Poly& o) const;

    /// Deterministic total order on polynomials of one ring (for canonical
    /// sorting of generator lists and rendered output).
    static int cmp(const Poly& a, const Poly& b);

private:
    void check_ring(const Poly& o) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Coefficient of U^alpha in f(x + U): the divided-power (Hasse) derivative,
/// well defined in every characteristic.
Poly hasse_derivative(const Poly& f, const ExpVec& alpha);

/// x^alpha * hasse_derivative(f, alpha): coefficient of U^alpha under
/// x_i -> x_i (1 + U_i).
Poly log_hasse_derivative(const Poly& f, const ExpVec& alpha);

/// Ring homomorphism given by one image per source variable; images must
/// share a target ring.
Poly substitute(const Poly& f, const RingPtr& target, const std::vector<Poly>& images);

/// f(x + p): translation of the point p to the origin.
Poly taylor_shift(const Poly& f, const std::vector<FieldElem>& point);

/// Order of vanishing of f at a rational point of the ring's affine space.
std::int64_t order_at(const Poly& f, const std::vector<FieldElem>& point);

/// Evaluation at a point.
FieldElem eval_at(const Poly& f, const std::vector<FieldElem>& point);

}  // namespace reesdiff
