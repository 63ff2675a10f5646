// Command-line front end: algebra description files in, deterministic
// reports out. Exit codes: 0 = true/consistent, 1 = false/refuted,
// 2 = usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include "reesdiff/algebra_io.hpp"
#include "reesdiff/diff_closure.hpp"
#include "reesdiff/parse.hpp"
#include "reesdiff/probe.hpp"
#include "reesdiff/sing.hpp"
#include "reesdiff/transforms.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::ordered_json;
using namespace reesdiff;

namespace {

AlgebraFile load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra_file(ss.str());
}

ordered_json algebra_json(const ReesAlgebra& g) {
    ordered_json j;
    j["char"] = g.ring()->field().characteristic;
    j["vars"] = g.ring()->vars();
    j["gens"] = ordered_json::array();
    for (const auto& wg : g.gens())
        j["gens"].push_back({{"w", wg.weight}, {"poly", render_poly(wg.g)}});
    return j;
}

std::string point_str(const PointK& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += p[i].str();
    }
    return s + ")";
}

std::vector<std::string> point_strings(const PointK& p) {
    std::vector<std::string> v;
    for (const auto& c : p) v.push_back(c.str());
    return v;
}

PointK parse_point(const std::string& text, const RingPtr& ring) {
    PointK p;
    std::string cur;
    std::stringstream ss(text);
    while (std::getline(ss, cur, ',')) {
        cur.erase(0, cur.find_first_not_of(" \t"));
        if (!cur.empty()) cur.erase(cur.find_last_not_of(" \t") + 1);
        bool neg = !cur.empty() && cur[0] == '-';
        std::string digits = neg ? cur.substr(1) : cur;
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::runtime_error("bad point coordinate '" + cur + "'");
        BigInt v(digits);
        if (neg) v = -v;
        p.push_back(FieldElem::from_integer(ring->field(), v));
    }
    if (p.size() != ring->nvars())
        throw std::runtime_error("point needs " + std::to_string(ring->nvars()) +
                                 " coordinates");
    return p;
}

std::string piece_line(const GroebnerBasis& basis) {
    if (basis.basis.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < basis.basis.size(); ++i) {
        if (i) s += "; ";
        s += render_poly(primitive_scale(basis.basis[i]));
    }
    return s;
}

int cmd_close(const std::string& path, const std::string& variant, std::uint32_t bound,
              bool prune, bool as_json) {
    AlgebraFile file = load(path);
    ClosureOptions opts;
    if (variant == "absolute") {
        opts = ClosureOptions::absolute();
    } else if (variant == "relative") {
        if (!file.split)
            throw std::runtime_error("--variant relative needs a 'split h=<k>' line");
        opts = ClosureOptions::relative(file.split->h);
    } else if (variant == "log") {
        std::vector<std::size_t> all(file.algebra.ring()->nvars());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        opts = ClosureOptions::logarithmic(all);
    } else if (variant == "orderfree") {
        opts = ClosureOptions::order_free();
    } else {
        throw std::runtime_error("unknown variant '" + variant + "'");
    }
    opts.prune = prune;
    ReesAlgebra closed = diff_close(file.algebra, opts);

    if (as_json) {
        ordered_json j;
        j["variant"] = variant;
        j["algebra"] = algebra_json(closed);
        if (bound >= 1) {
            PieceLadder ladder(closed, PieceMode::Exact);
            j["pieces"] = ordered_json::array();
            for (std::uint32_t n = 1; n <= bound; ++n) {
                ordered_json pj;
                pj["degree"] = n;
                pj["basis"] = ordered_json::array();
                for (const auto& b : ladder.piece(n).basis)
                    pj["basis"].push_back(render_poly(primitive_scale(b)));
                j["pieces"].push_back(pj);
            }
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render_algebra_file(closed);
        if (bound >= 1) {
            PieceLadder ladder(closed, PieceMode::Exact);
            for (std::uint32_t n = 1; n <= bound; ++n)
                std::cout << "piece " << n << ": " << piece_line(ladder.piece(n)) << "\n";
        }
    }
    return 0;
}

int cmd_sing(const std::string& path, const std::string& point_text, bool grid,
             bool as_json) {
    AlgebraFile file = load(path);
    if (grid == !point_text.empty())
        throw std::runtime_error("pass exactly one of --point or --grid");
    if (grid) {
        auto pts = sing_points(file.algebra);
        if (as_json) {
            ordered_json j;
            j["sing_points"] = ordered_json::array();
            for (const auto& p : pts) j["sing_points"].push_back(point_strings(p));
            j["count"] = pts.size();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "sing_points:";
            for (const auto& p : pts) std::cout << " " << point_str(p);
            std::cout << "\ncount: " << pts.size() << "\n";
        }
        return 0;
    }
    PointK p = parse_point(point_text, file.algebra.ring());
    bool inside = in_sing(file.algebra, p);
    if (as_json) {
        ordered_json j;
        j["point"] = point_strings(p);
        j["in_sing"] = inside;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "point: " << point_str(p) << "\nin_sing: "
                  << (inside ? "true" : "false") << "\n";
    }
    return inside ? 0 : 1;
}

int cmd_coeff(const std::string& path, const std::string& recipe, bool as_json) {
    AlgebraFile file = load(path);
    if (!file.split) throw std::runtime_error("coeff needs a 'split h=<k>' line");
    CoeffRecipe rec;
    if (recipe == "f1p")
        rec = CoeffRecipe::F1Prime;
    else if (recipe == "f1")
        rec = CoeffRecipe::F1;
    else
        throw std::runtime_error("unknown recipe '" + recipe + "' (use f1p or f1)");
    CoeffAlgebra ca = coefficient_algebra(file.algebra, *file.split, rec);

    if (as_json) {
        ordered_json j;
        j["recipe"] = recipe;
        j["algebra"] = algebra_json(ca.algebra);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render_algebra_file(ca.algebra);
        std::cout << "recipe: " << recipe << "\n";
    }
    return 0;
}

int cmd_lambda(const std::string& path, bool as_json) {
    AlgebraFile file = load(path);
    LambdaValue l = lambda_invariant(file.algebra);
    if (as_json) {
        ordered_json j;
        j["lambda"] = l.str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "lambda: " << l.str() << "\n";
    }
    return 0;
}

int cmd_member(const std::string& path, const std::string& elem, std::uint32_t weight,
               bool as_json) {
    AlgebraFile file = load(path);
    const RingPtr& ring = file.algebra.ring();
    if (ring->nvars() != 1)
        throw std::runtime_error("member needs a 1-variable algebra");
    Poly f = parse_poly(elem, ring);
    if (f.nterms() != 1 || !f.leading_term().coeff.is_one())
        throw std::runtime_error("--elem must be a plain monomial like t^2");
    std::uint64_t n = f.leading_term().exp[0];
    bool member = integral_member_1d(n, weight, file.algebra);
    LambdaValue l = lambda_invariant(file.algebra);

    if (as_json) {
        ordered_json j;
        j["element"] = render_poly(f);
        j["weight"] = weight;
        j["lambda"] = l.str();
        j["member"] = member;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "element: " << render_poly(f) << "\nweight: " << weight
                  << "\nlambda: " << l.str() << "\nmember: "
                  << (member ? "true" : "false") << "\n";
    }
    return member ? 0 : 1;
}

ordered_json probe_json(const ProbeVerdict& v, std::uint32_t trials) {
    ordered_json j;
    j["trials"] = trials;
    j["degenerate"] = v.degenerate_count;
    j["verdict"] = v.refuted ? "refuted" : "consistent";
    if (v.witness) {
        const auto& w = *v.witness;
        j["witness_trial"] = w.index;
        j["witness_a"] = w.a;
        j["witness_b"] = w.b;
        j["witness_coeffs"] = w.coeffs;
        j["lambda_left"] = w.lambda_left.str();
        j["lambda_right"] = w.lambda_right.str();
    }
    return j;
}

void print_probe_text(const ProbeVerdict& v, std::uint32_t trials) {
    std::cout << "trials: " << trials << "\n";
    std::cout << "degenerate: " << v.degenerate_count << "\n";
    if (v.witness) {
        const auto& w = *v.witness;
        std::cout << "witness_trial: " << w.index << "\n";
        std::cout << "witness_curve: a=" << w.a << " b=" << w.b << "\n";
        std::cout << "witness_coeffs:";
        for (const auto& c : w.coeffs) std::cout << " " << c;
        std::cout << "\n";
        std::cout << "lambda_left: " << w.lambda_left.str() << "\n";
        std::cout << "lambda_right: " << w.lambda_right.str() << "\n";
    }
    std::cout << "verdict: " << (v.refuted ? "refuted" : "consistent (not a proof)")
              << "\n";
}

int cmd_equal_closure(const std::string& path_a, const std::string& path_b,
                      std::uint32_t trials, std::uint64_t seed, bool as_json) {
    AlgebraFile a = load(path_a);
    AlgebraFile b = load(path_b);
    ProbeVerdict v = equal_closure_probe(a.algebra, b.algebra, trials, seed);
    if (as_json)
        std::cout << probe_json(v, trials).dump(2) << "\n";
    else
        print_probe_text(v, trials);
    return v.refuted ? 1 : 0;
}

int cmd_main_check(const std::string& path_a, const std::string& path_b,
                   const std::string& cert, std::uint32_t trials, std::uint64_t seed,
                   std::uint32_t bound, bool as_json) {
    AlgebraFile a = load(path_a);
    AlgebraFile b = load(path_b);

    FinitePair pair{a.algebra, b.algebra, CertKind::Saturation, 0};
    if (cert == "sat") {
        pair.cert = CertKind::Saturation;
    } else if (cert.rfind("veronese:", 0) == 0) {
        pair.cert = CertKind::Veronese;
        pair.veronese_m =
            static_cast<std::uint32_t>(std::stoul(cert.substr(std::string("veronese:").size())));
    } else {
        throw std::runtime_error("unknown certificate '" + cert +
                                 "' (use sat or veronese:M)");
    }

    std::optional<Split> split = a.split ? a.split : b.split;
    MainCheckReport rep = main_theorem_check(pair, trials, seed, bound, split);

    if (as_json) {
        ordered_json j;
        j["certificate"] = cert;
        j["probe"] = probe_json(rep.probe, trials);
        j["containment_bound"] = bound;
        j["containment_ok"] = rep.containment_ok;
        if (rep.coeff_lambda) {
            j["coeff_lambda_left"] = rep.coeff_lambda->first.str();
            j["coeff_lambda_right"] = rep.coeff_lambda->second.str();
            j["coeff_lambda_ok"] = rep.coeff_lambda_ok;
        }
        j["verdict"] = rep.consistent() ? "consistent" : "refuted";
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "certificate: " << cert << "\n";
        std::cout << "probe_trials: " << trials << "\n";
        std::cout << "probe_degenerate: " << rep.probe.degenerate_count << "\n";
        std::cout << "probe_verdict: "
                  << (rep.probe.refuted ? "refuted" : "consistent") << "\n";
        if (rep.probe.witness) {
            const auto& w = *rep.probe.witness;
            std::cout << "witness_curve: a=" << w.a << " b=" << w.b << "\n";
            std::cout << "lambda_left: " << w.lambda_left.str() << "\n";
            std::cout << "lambda_right: " << w.lambda_right.str() << "\n";
        }
        std::cout << "containment_bound: " << bound << "\n";
        std::cout << "containment_ok: " << (rep.containment_ok ? "true" : "false")
                  << "\n";
        if (rep.coeff_lambda) {
            std::cout << "coeff_lambda_left: " << rep.coeff_lambda->first.str() << "\n";
            std::cout << "coeff_lambda_right: " << rep.coeff_lambda->second.str() << "\n";
            std::cout << "coeff_lambda_ok: " << (rep.coeff_lambda_ok ? "true" : "false")
                      << "\n";
        }
        std::cout << "verdict: " << (rep.consistent() ? "consistent" : "refuted")
                  << "\n";
    }
    return rep.consistent() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rees algebras, Diff-closures, singular loci, and integral-closure probes"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable output");

    std::string file_a, file_b, variant = "absolute", point_text, recipe = "f1p";
    std::string elem, cert = "sat";
    std::uint32_t bound = 0, trials = 20, weight = 1;
    std::uint64_t seed = 0;
    bool grid = false, prune = false;

    auto* close = app.add_subcommand("close", "smallest Diff-closure of an algebra");
    close->add_option("file", file_a)->required();
    close->add_option("--variant", variant, "absolute|relative|log|orderfree");
    close->add_option("--bound", bound, "also print reduced piece bases 1..N");
    close->add_flag("--prune", prune, "drop generators redundant by membership");

    auto* sing = app.add_subcommand("sing", "singular locus membership or grid");
    sing->add_option("file", file_a)->required();
    sing->add_option("--point", point_text, "comma-separated coordinates");
    sing->add_flag("--grid", grid, "enumerate the F_p grid");

    auto* coeff = app.add_subcommand("coeff", "coefficient algebra for the file's split");
    coeff->add_option("file", file_a)->required();
    coeff->add_option("--recipe", recipe, "f1p|f1");

    auto* lambda = app.add_subcommand("lambda", "1-variable integral-closure invariant");
    lambda->add_option("file", file_a)->required();

    auto* member = app.add_subcommand("member", "is t^n W^m integral over the algebra");
    member->add_option("file", file_a)->required();
    member->add_option("--elem", elem, "monomial t^n")->required();
    member->add_option("--weight", weight, "the W-degree m")->required();

    auto* equal = app.add_subcommand("equal-closure", "monomial-curve probe for equal closure");
    equal->add_option("fileA", file_a)->required();
    equal->add_option("fileB", file_b)->required();
    equal->add_option("--trials", trials);
    equal->add_option("--seed", seed);

    auto* main_check = app.add_subcommand("main-check",
                                          "certified pair: probe the Diff-closures");
    main_check->add_option("fileA", file_a)->required();
    main_check->add_option("fileB", file_b)->required();
    main_check->add_option("--cert", cert, "sat|veronese:M")->required();
    main_check->add_option("--trials", trials);
    main_check->add_option("--seed", seed);
    main_check->add_option("--bound", bound, "piece containment bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (close->parsed()) return cmd_close(file_a, variant, bound, prune, as_json);
        if (sing->parsed()) return cmd_sing(file_a, point_text, grid, as_json);
        if (coeff->parsed()) return cmd_coeff(file_a, recipe, as_json);
        if (lambda->parsed()) return cmd_lambda(file_a, as_json);
        if (member->parsed()) return cmd_member(file_a, elem, weight, as_json);
        if (equal->parsed())
            return cmd_equal_closure(file_a, file_b, trials, seed, as_json);
        if (main_check->parsed())
            return cmd_main_check(file_a, file_b, cert, trials, seed, bound, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
