// fockcat: groupoid-cardinality calculator for species, stuff types, Weyl
// operators, Feynman diagram enumeration, and perturbed oscillator checks.

#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fockcat/query.hpp"

namespace {

using fockcat::Error;
using fockcat::ErrorCode;
using Json = fockcat::Json;

struct OutputOptions {
    bool plain = false;
    std::string out_file;
    std::optional<std::uint64_t> seed;
};

void emit(const Json& result, const OutputOptions& opts) {
    Json final = result;
    if (opts.seed) final["seed"] = *opts.seed;
    std::string text;
    if (opts.plain) {
        // headline value only; machine consumers use the JSON mode
        for (const char* key : {"cardinality", "value", "value_complex", "gf", "series",
                                "dyson", "counts"})
            if (final.contains(key)) {
                text += std::string(key) + ": " + final[key].dump() + "\n";
                break;
            }
        if (text.empty()) text = final.dump(2) + "\n";
    } else {
        text = final.dump(2) + "\n";
    }
    if (!opts.out_file.empty()) {
        std::ofstream f(opts.out_file);
        f << text;
    } else {
        std::cout << text;
    }
}

std::vector<std::uint32_t> parse_valences(const std::string& csv) {
    std::vector<std::uint32_t> out;
    std::size_t i = 0;
    while (i < csv.size()) {
        std::size_t j = csv.find(',', i);
        if (j == std::string::npos) j = csv.size();
        std::string item = csv.substr(i, j - i);
        if (!item.empty()) out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        i = j + 1;
    }
    return out;
}

std::vector<std::pair<std::uint32_t, double>> parse_potential(const std::string& text) {
    std::vector<std::pair<std::uint32_t, double>> out;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = text.find(',', i);
        if (j == std::string::npos) j = text.size();
        std::string item = text.substr(i, j - i);
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorCode::Input, "potential entries look like degree:coupling");
        out.push_back({static_cast<std::uint32_t>(std::stoul(item.substr(0, colon))),
                       std::stod(item.substr(colon + 1))});
        i = j + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fockcat: exact groupoid-cardinality computations for the harmonic oscillator"};
    app.require_subcommand(1);

    OutputOptions opts;
    bool json_flag = true;
    app.add_flag("--json,!--plain", json_flag, "JSON output (default) or a plain headline");
    app.add_option("--out-file,--out", opts.out_file, "write the result to a file instead of stdout");
    std::uint64_t seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value,
                                    "seed echoed into the output for randomized demos");

    std::string expr_a, expr_b, equation, optext, valences_csv, potential_text, theta_turns;
    std::size_t order = 16;
    std::uint32_t out_k = 0, in_l = 0;
    bool fock = false;
    double theta_radians = 0.0, total_time = 0.0;
    int sign = -1;
    std::uint32_t dyson_order = 2;
    std::size_t cutoff = 16, nodes = 32;
    bool allow_low_degree = false;

    auto* gf = app.add_subcommand("gf", "generating function of a type expression");
    gf->add_option("expr", expr_a, "type expression")->required();
    gf->add_option("--order", order, "truncation order");

    auto* inner = app.add_subcommand("inner", "inner product groupoid cardinality");
    inner->add_option("lhs", expr_a)->required();
    inner->add_option("rhs", expr_b)->required();
    inner->add_option("--order", order);
    inner->add_flag("--fock", fock, "conjugate-linear pairing");

    auto* vev = app.add_subcommand("vev", "vacuum expectation by diagram enumeration");
    vev->add_option("--out", out_k, "outgoing quanta k");
    vev->add_option("--in", in_l, "incoming quanta l");
    vev->add_option("--valences", valences_csv, "comma-separated vertex valences");

    auto* expect = app.add_subcommand("expect", "matrix element of an operator expression");
    expect->add_option("operator", optext, "expression over A, ASTAR, PHI, N")->required();
    expect->add_option("--out", out_k, "bra exponent k");
    expect->add_option("--in", in_l, "ket exponent l");

    auto* solve = app.add_subcommand("solve", "fixed point of a recursive species equation");
    solve->add_option("equation", equation, "e.g. \"B = Z + B^2\"")->required();
    solve->add_option("--order", order);

    auto* evolve = app.add_subcommand("evolve", "free time evolution of a type");
    evolve->add_option("expr", expr_a)->required();
    auto* turns_opt = evolve->add_option("--theta-turns", theta_turns,
                                         "exact angle per quantum, in turns (p/q)");
    auto* radians_opt = evolve->add_option("--theta-radians", theta_radians,
                                           "angle per quantum, radians");
    turns_opt->excludes(radians_opt);
    evolve->add_option("--sign", sign, "+1 or -1 exponent sign (default -1)");
    evolve->add_option("--order", order);

    auto* dyson = app.add_subcommand("dyson", "Dyson series against the matrix exponential");
    dyson->add_option("--out", out_k, "bra level k");
    dyson->add_option("--in", in_l, "ket level l");
    dyson->add_option("--potential", potential_text, "degree:coupling[,degree:coupling...]")
        ->required();
    dyson->add_option("--time", total_time, "total evolution time")->required();
    dyson->add_option("--dyson-order", dyson_order);
    dyson->add_option("--cutoff", cutoff);
    dyson->add_option("--nodes", nodes, "quadrature nodes per dimension");
    dyson->add_flag("--allow-low-degree", allow_low_degree,
                    "permit degree < 3 potentials (testing)");

    auto* diagrams = app.add_subcommand("diagrams", "full diagram-class dump");
    diagrams->add_option("--out", out_k);
    diagrams->add_option("--in", in_l);
    diagrams->add_option("--valences", valences_csv);

    // lets global flags (--out-file, --plain, --seed) appear after a subcommand
    for (auto* sub : {gf, inner, vev, expect, solve, evolve, dyson, diagrams}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    opts.plain = !json_flag;
    if (seed_opt->count() > 0) opts.seed = seed_value;

    try {
        Json result;
        if (gf->parsed()) {
            result = fockcat::query_gf(expr_a, order);
        } else if (inner->parsed()) {
            result = fockcat::query_inner(expr_a, expr_b, order, fock);
        } else if (vev->parsed()) {
            result = fockcat::query_vev(out_k, in_l, parse_valences(valences_csv));
        } else if (expect->parsed()) {
            result = fockcat::query_expect(out_k, optext, in_l);
        } else if (solve->parsed()) {
            result = fockcat::query_solve(equation, order);
        } else if (evolve->parsed()) {
            fockcat::Angle theta =
                radians_opt->count() > 0
                    ? fockcat::Angle::radians(theta_radians)
                    : fockcat::Angle::turns(theta_turns.empty()
                                                ? fockcat::Rational(0)
                                                : fockcat::Rational::parse(theta_turns));
            result = fockcat::query_evolve(expr_a, theta, sign, order);
        } else if (dyson->parsed()) {
            fockcat::PerturbationSpec spec;
            spec.potential = parse_potential(potential_text);
            spec.total_time = total_time;
            spec.dyson_order = dyson_order;
            spec.fock_cutoff = cutoff;
            spec.quadrature_nodes = nodes;
            spec.allow_low_degree = allow_low_degree;
            result = fockcat::query_dyson(out_k, in_l, spec);
        } else if (diagrams->parsed()) {
            result = fockcat::query_diagrams(out_k, in_l, parse_valences(valences_csv));
        }
        emit(result, opts);
        return 0;
    } catch (const Error& e) {
        emit(fockcat::error_to_json(e), opts);
        return 2;
    } catch (const std::exception& e) {
        Json j{{"error", Json{{"code", "INPUT"}, {"message", e.what()}}}};
        emit(j, opts);
        return 2;
    }
}
