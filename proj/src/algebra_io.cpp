#include "reesdiff/algebra_io.hpp"

#include "reesdiff/parse.hpp"

#include <sstream>

namespace reesdiff {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool take_prefix(std::string& s, const std::string& prefix) {
    if (s.rfind(prefix, 0) != 0) return false;
    s.erase(0, prefix.size());
    s = trim(s);
    return true;
}

std::uint64_t parse_uint(const std::string& s, std::size_t line, const std::string& what) {
    if (s.empty()) throw AlgebraFileError(line, "missing " + what);
    std::uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw AlgebraFileError(line, "invalid " + what + " '" + s + "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > 1000000000ull) throw AlgebraFileError(line, what + " out of range");
    }
    return v;
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;

    RingPtr ring;
    std::vector<WeightedGen> gens;
    std::optional<Split> split;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;

        if (take_prefix(line, "ring")) {
            if (ring) throw AlgebraFileError(lineno, "duplicate ring header");
            if (!take_prefix(line, "char="))
                throw AlgebraFileError(lineno, "expected 'char=' in ring header");
            std::size_t sp = line.find(' ');
            if (sp == std::string::npos)
                throw AlgebraFileError(lineno, "expected 'vars=' in ring header");
            std::string chs = line.substr(0, sp);
            line = trim(line.substr(sp));
            if (!take_prefix(line, "vars="))
                throw AlgebraFileError(lineno, "expected 'vars=' in ring header");
            std::vector<std::string> vars;
            std::string cur;
            for (char c : line + ",") {
                if (c == ',') {
                    cur = trim(cur);
                    if (cur.empty()) throw AlgebraFileError(lineno, "empty variable name");
                    vars.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            try {
                ring = make_ring(FieldSpec(static_cast<std::uint32_t>(
                                     parse_uint(chs, lineno, "characteristic"))),
                                 std::move(vars));
            } catch (const std::invalid_argument& e) {
                throw AlgebraFileError(lineno, e.what());
            }
            continue;
        }

        if (take_prefix(line, "gen")) {
            if (!ring) throw AlgebraFileError(lineno, "gen before ring header");
            if (!take_prefix(line, "w="))
                throw AlgebraFileError(lineno, "expected 'w=' after gen");
            std::size_t sp = line.find(' ');
            if (sp == std::string::npos)
                throw AlgebraFileError(lineno, "missing polynomial after weight");
            std::uint64_t w = parse_uint(line.substr(0, sp), lineno, "weight");
            if (w < 1) throw AlgebraFileError(lineno, "weight must be positive");
            std::string expr = trim(line.substr(sp));
            try {
                gens.push_back({parse_poly(expr, ring), static_cast<std::uint32_t>(w)});
            } catch (const ParseError& e) {
                throw AlgebraFileError(lineno, e.what());
            }
            continue;
        }

        if (take_prefix(line, "split")) {
            if (!ring) throw AlgebraFileError(lineno, "split before ring header");
            if (split) throw AlgebraFileError(lineno, "duplicate split line");
            if (!take_prefix(line, "h="))
                throw AlgebraFileError(lineno, "expected 'h=' after split");
            std::uint64_t h = parse_uint(line, lineno, "split h");
            if (h < 1 || h >= ring->nvars())
                throw AlgebraFileError(lineno, "split h must satisfy 1 <= h <= d-1");
            split = Split{static_cast<std::uint32_t>(h)};
            continue;
        }

        throw AlgebraFileError(lineno, "unrecognized line '" + line + "'");
    }

    if (!ring) throw AlgebraFileError(lineno, "missing ring header");
    return AlgebraFile{ReesAlgebra(ring, std::move(gens)), split};
}

std::string render_algebra_file(const ReesAlgebra& algebra, std::optional<Split> split) {
    std::string out = "ring char=" +
                      std::to_string(algebra.ring()->field().characteristic) + " vars=";
    const auto& vars = algebra.ring()->vars();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) out += ",";
        out += vars[i];
    }
    out += "\n";
    for (const auto& wg : algebra.gens())
        out += "gen w=" + std::to_string(wg.weight) + " " + render_poly(wg.g) + "\n";
    if (split) out += "split h=" + std::to_string(split->h) + "\n";
    return out;
}

}  // namespace reesdiff
