#pragma once

#include "reesdiff/poly.hpp"

#include <stdexcept>
#include <string>

namespace reesdiff {

/// Parse failure with the byte offset of the offending token.
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(std::size_t off, const std::string& msg)
        : std::runtime_error(msg + " (at offset " + std::to_string(off) + ")"),
          offset(off) {}
};

/// Grammar: integer literals, declared variable names, `+ - * ^`,
/// parentheses; `^` takes a nonnegative integer exponent; multiplication is
/// always explicit. Unary +/- are accepted in expression position.
Poly parse_poly(const std::string& text, const RingPtr& ring);

/// Canonical text: terms in descending grevlex order, explicit `*` and `^`.
/// Inverse of parse_poly on canonical forms (integer coefficients round-trip
/// through the grammar; rational coefficients render as n/d for reports).
std::string render_poly(const Poly& f);

/// The same polynomial scaled to a primitive integral representative
/// (denominators cleared, integer content 1, positive leading coefficient;
/// identity in characteristic p). Keeps reduced-basis listings inside the
/// integer-literal grammar.
Poly primitive_scale(const Poly& f);

}  // namespace reesdiff
