#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace reesdiff {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact coefficient field: the rationals (characteristic 0) or a prime
/// field F_p with p < 2^31. No floating point anywhere.
struct FieldSpec {
    std::uint32_t characteristic = 0;

    FieldSpec() = default;
    explicit FieldSpec(std::uint32_t p);

    bool is_modular() const { return characteristic != 0; }
    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

/// An element of the field named by a FieldSpec. Char-0 values are
/// big-integer rationals; char-p values are machine-word residues in [0, p).
class FieldElem {
public:
    FieldElem() = default;  // zero of Q

    static FieldElem zero(const FieldSpec& f);
    static FieldElem one(const FieldSpec& f);
    static FieldElem from_integer(const FieldSpec& f, const BigInt& n);
    static FieldElem from_integer(const FieldSpec& f, long long n);
    static FieldElem from_rational(const FieldSpec& f, const BigRat& q);

    FieldSpec field() const { return FieldSpec(p_); }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;  // throws on zero divisor
    FieldElem inv() const;

    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    /// Deterministic total order (residue order mod p, numeric order over Q).
    int cmp(const FieldElem& o) const;

    /// Char 0 only.
    const BigRat& rational() const;
    /// Char p only: the least nonnegative residue.
    std::int64_t residue() const { return r_; }

    /// True when the value is an integer (always true in char p).
    bool is_integral() const;
    /// Denominator as BigInt (1 in char p).
    BigInt denominator() const;

    std::string str() const;

private:
    void check_same(const FieldElem& o) const;

    BigRat q_;            // char 0 payload
    std::int64_t r_ = 0;  // char p payload, 0 <= r_ < p_
    std::uint32_t p_ = 0;
};

/// Exact binomial coefficient C(n, k) as a big integer (0 when k > n).
BigInt binomial(const BigInt& n, std::uint64_t k);

/// C(a, b) componentwise over multi-indices, as one big integer product.
BigInt multi_binomial(const std::vector<std::uint32_t>& a,
                      const std::vector<std::uint32_t>& b);

}  // namespace reesdiff
