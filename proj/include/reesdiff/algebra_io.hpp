#pragma once

#include "reesdiff/coeff.hpp"
#include "reesdiff/rees.hpp"

#include <optional>
#include <string>

namespace reesdiff {

/// Parsed algebra description file:
///   ring char=<0|p> vars=<name,name,...>
///   gen w=<weight> <polynomial>
///   split h=<k>          (optional, at most once)
///   # comments and blank lines are ignored
struct AlgebraFile {
    ReesAlgebra algebra;
    std::optional<Split> split;
};

struct AlgebraFileError : std::runtime_error {
    std::size_t line;
    AlgebraFileError(std::size_t ln, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

AlgebraFile parse_algebra_file(const std::string& text);

/// Canonical text form; re-parses to an identical presentation.
std::string render_algebra_file(const ReesAlgebra& algebra,
                                std::optional<Split> split = std::nullopt);

}  // namespace reesdiff
