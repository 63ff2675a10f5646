#include "reesdiff/field.hpp"

#include <vector>

namespace reesdiff {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t mod_pos(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

// extended Euclid inverse of a mod p, a != 0 mod p
std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = mod_pos(a, p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("not invertible mod p");
    return mod_pos(t, p);
}

}  // namespace

FieldSpec::FieldSpec(std::uint32_t p) : characteristic(p) {
    if (p != 0 && !is_prime_u32(p))
        throw std::invalid_argument("field characteristic must be 0 or prime, got " +
                                    std::to_string(p));
    if (p != 0 && p >= (1u << 31))
        throw std::invalid_argument("prime characteristic must be < 2^31");
}

std::string FieldSpec::str() const {
    return characteristic == 0 ? "Q" : "F" + std::to_string(characteristic);
}

FieldElem FieldElem::zero(const FieldSpec& f) {
    FieldElem e;
    e.p_ = f.characteristic;
    return e;
}

FieldElem FieldElem::one(const FieldSpec& f) {
    FieldElem e;
    e.p_ = f.characteristic;
    if (e.p_ == 0)
        e.q_ = 1;
    else
        e.r_ = 1 % e.p_;
    return e;
}

FieldElem FieldElem::from_integer(const FieldSpec& f, const BigInt& n) {
    FieldElem e;
    e.p_ = f.characteristic;
    if (e.p_ == 0) {
        e.q_ = BigRat(n);
    } else {
        BigInt r = n % e.p_;
        if (r < 0) r += e.p_;
        e.r_ = static_cast<std::int64_t>(r);
    }
    return e;
}

FieldElem FieldElem::from_integer(const FieldSpec& f, long long n) {
    return from_integer(f, BigInt(n));
}

FieldElem FieldElem::from_rational(const FieldSpec& f, const BigRat& q) {
    if (f.characteristic == 0) {
        FieldElem e;
        e.q_ = q;
        return e;
    }
    FieldElem num = from_integer(f, BigInt(boost::multiprecision::numerator(q)));
    FieldElem den = from_integer(f, BigInt(boost::multiprecision::denominator(q)));
    return num / den;
}

bool FieldElem::is_zero() const { return p_ == 0 ? q_.is_zero() : r_ == 0; }

bool FieldElem::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

void FieldElem::check_same(const FieldElem& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed-field arithmetic");
}

FieldElem FieldElem::operator-() const {
    FieldElem e = *this;
    if (p_ == 0)
        e.q_ = -q_;
    else
        e.r_ = r_ == 0 ? 0 : p_ - r_;
    return e;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(o);
    FieldElem e = *this;
    if (p_ == 0)
        e.q_ += o.q_;
    else
        e.r_ = mod_pos(r_ + o.r_, p_);
    return e;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same(o);
    FieldElem e = *this;
    if (p_ == 0)
        e.q_ -= o.q_;
    else
        e.r_ = mod_pos(r_ - o.r_, p_);
    return e;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(o);
    FieldElem e = *this;
    if (p_ == 0)
        e.q_ *= o.q_;
    else
        e.r_ = mod_pos(r_ * o.r_, p_);  // p < 2^31 keeps the product in range
    return e;
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw std::domain_error("division by zero field element");
    FieldElem e = *this;
    if (p_ == 0)
        e.q_ = 1 / q_;
    else
        e.r_ = mod_inv(r_, p_);
    return e;
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

bool FieldElem::operator==(const FieldElem& o) const {
    return p_ == o.p_ && (p_ == 0 ? q_ == o.q_ : r_ == o.r_);
}

int FieldElem::cmp(const FieldElem& o) const {
    check_same(o);
    if (p_ == 0) return q_ < o.q_ ? -1 : (q_ == o.q_ ? 0 : 1);
    return r_ < o.r_ ? -1 : (r_ == o.r_ ? 0 : 1);
}

const BigRat& FieldElem::rational() const {
    if (p_ != 0) throw std::logic_error("rational() on modular element");
    return q_;
}

bool FieldElem::is_integral() const {
    return p_ != 0 || boost::multiprecision::denominator(q_) == 1;
}

BigInt FieldElem::denominator() const {
    return p_ != 0 ? BigInt(1) : boost::multiprecision::denominator(q_);
}

std::string FieldElem::str() const {
    if (p_ != 0) return std::to_string(r_);
    return q_.str();
}

BigInt binomial(const BigInt& n, std::uint64_t k) {
    if (n < 0) throw std::invalid_argument("binomial with negative n");
    if (BigInt(k) > n) return 0;
    BigInt num = 1, den = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        num *= n - BigInt(i);
        den *= BigInt(i + 1);
    }
    return num / den;
}

BigInt multi_binomial(const std::vector<std::uint32_t>& a,
                      const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("multi_binomial length mismatch");
    BigInt c = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i]) return 0;
        c *= binomial(BigInt(a[i]), b[i]);
        if (c.is_zero()) return 0;
    }
    return c;
}

}  // namespace reesdiff
