#include "reesdiff/parse.hpp"

#include <cctype>

namespace reesdiff {

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, RingPtr ring)
        : s_(text), ring_(std::move(ring)) {}

    Poly run() {
        Poly f = expr();
        skip_ws();
        if (pos_ != s_.size()) fail(pos_, "unexpected trailing input");
        return f;
    }

private:
    [[noreturn]] void fail(std::size_t off, const std::string& msg) {
        throw ParseError(off, msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        Poly acc = signed_term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Poly signed_term() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -signed_term();
        }
        if (c == '+') {
            ++pos_;
            return signed_term();
        }
        return term();
    }

    Poly term() {
        Poly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            std::size_t caret = pos_;
            ++pos_;
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail(caret + 1, "malformed exponent: expected nonnegative integer");
            std::uint64_t e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
                if (e > 100000) fail(caret + 1, "exponent too large");
                ++pos_;
            }
            return base.pow(static_cast<std::uint32_t>(e));
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail(pos_, "unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            std::size_t open = pos_;
            ++pos_;
            Poly f = expr();
            if (!eat(')')) fail(open, "unbalanced parentheses");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt n = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                n = n * 10 + (s_[pos_] - '0');
                ++pos_;
            }
            return Poly::constant(ring_, FieldElem::from_integer(ring_->field(), n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            auto idx = ring_->var_index(name);
            if (!idx) fail(start, "unknown variable '" + name + "'");
            return Poly::variable(ring_, *idx);
        }
        fail(pos_, std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

std::string coeff_abs_str(const FieldElem& c) {
    std::string s = c.str();
    if (!s.empty() && s[0] == '-') s.erase(0, 1);
    return s;
}

bool coeff_is_negative(const FieldElem& c) {
    // modular residues render as 0..p-1, never negative
    return c.field().characteristic == 0 && c.rational() < 0;
}

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
    return PolyParser(text, ring).run();
}

std::string render_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    const auto& vars = f.ring()->vars();
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        bool neg = coeff_is_negative(t.coeff);
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;

        std::string mag = coeff_abs_str(t.coeff);
        bool has_vars = exp_total(t.exp) != 0;
        bool unit = (mag == "1");
        if (!has_vars) {
            out += mag;
            continue;
        }
        bool emitted = false;
        if (!unit) {
            out += mag;
            emitted = true;
        }
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (t.exp[i] == 0) continue;
            if (emitted) out += "*";
            out += vars[i];
            if (t.exp[i] > 1) out += "^" + std::to_string(t.exp[i]);
            emitted = true;
        }
    }
    return out;
}

Poly primitive_scale(const Poly& f) {
    if (f.is_zero() || f.ring()->field().is_modular()) return f;
    BigInt den_lcm = 1;
    for (const auto& t : f.terms())
        den_lcm = boost::multiprecision::lcm(
            den_lcm, BigInt(boost::multiprecision::denominator(t.coeff.rational())));
    BigInt content = 0;
    for (const auto& t : f.terms())
    {
        BigRat scaled = t.coeff.rational() * BigRat(den_lcm);
        content = boost::multiprecision::gcd(
            content, BigInt(boost::multiprecision::numerator(scaled)));
    }
    BigRat scale(den_lcm, content);
    if (scale < 0) scale = -scale;
    Poly g = f.scaled(FieldElem::from_rational(f.ring()->field(), scale));
    if (g.leading_term().coeff.rational() < 0)
        g = g.scaled(FieldElem::from_integer(f.ring()->field(), -1));
    return g;
}

}  // namespace reesdiff
