// Command-line front end for the finite-field Cholesky library.
//
// Matrix file grammar (exact): first line "p k n"; second line the k+1
// modulus coefficients, constant term first (omitted when k = 1); then n
// lines of n element codes. An element's code is its coefficient vector read
// as a base-p integer, constant term least significant.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ffchol/census.hpp"
#include "ffchol/cholesky.hpp"
#include "ffchol/entrywise.hpp"
#include "ffchol/groups.hpp"

using namespace ffchol;

namespace {

Matrix load_matrix(const std::string& path) {
    if (path == "-") return read_matrix(std::cin);
    std::ifstream in(path);
    if (!in) throw DomainError("E_PARSE", "cannot open " + path);
    return read_matrix(in);
}

SymMatrix load_sym(const std::string& path) {
    return SymMatrix(load_matrix(path));
}

const char* class_name(FieldClass c) {
    switch (c) {
        case FieldClass::EvenChar: return "even-char";
        case FieldClass::Definite: return "definite";
        default: return "non-definite";
    }
}

void print_census(const CensusReport& r, bool checked) {
    const Field& F = *r.field;
    std::cout << "field " << F.name() << " n " << r.n << '\n';
    std::cout << "total_sym " << r.total_sym << '\n';
    std::cout << "formula " << r.formula_value << '\n';
    std::cout << "lpm_total " << r.lpm_total << (checked ? " ok" : "") << '\n';
    std::cout << "tpm_total " << r.tpm_total << (checked ? " ok" : "") << '\n';
    for (const auto& [e, c] : r.per_pattern)
        std::cout << "pattern " << format_pattern(e) << ' ' << c << (checked ? " ok" : "") << '\n';
    std::cout << "density " << r.density.first << '/' << r.density.second
              << (checked ? " = (1-1/q)^n ok" : "") << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Cholesky factorization, cone classification and census "
                 "for symmetric matrices over finite fields"};
    app.require_subcommand(1);

    int p = 3, k = 1, n = 2, s = 2;
    std::int64_t budget = 10'000'000;
    int shards = 1, shard = -1;
    std::string file, anchor_file, from_file, to_file, file_b;
    std::string eps_str, eps_to_str, law_str = "prod";
    bool square = false, cayley = false;

    auto* cmd_field = app.add_subcommand("field-info", "Describe the canonical field F_{p^k}");
    cmd_field->add_option("--p", p)->required();
    cmd_field->add_option("--k", k)->required();

    auto* cmd_classify = app.add_subcommand("classify", "Print the LPM sign pattern of a matrix");
    cmd_classify->add_option("file", file, "matrix file, or - for stdin")->required();

    auto* cmd_factor = app.add_subcommand("factor", "Cholesky factor A = L * anchor * L^T");
    cmd_factor->add_option("file", file)->required();
    cmd_factor->add_option("--anchor", anchor_file, "anchor matrix file (default: canonical diagonal)");

    auto* cmd_factor_tpm = app.add_subcommand("factor-tpm", "TPM factor A = U * anchor * U^T");
    cmd_factor_tpm->add_option("file", file)->required();
    cmd_factor_tpm->add_option("--anchor", anchor_file);

    auto* cmd_transition = app.add_subcommand("transition", "Carry A between anchored cones");
    cmd_transition->add_option("file", file)->required();
    cmd_transition->add_option("--from", from_file)->required();
    cmd_transition->add_option("--to", to_file)->required();

    auto* cmd_inverse = app.add_subcommand("inverse-map", "Map A to A^{-1} and its TPM pattern");
    cmd_inverse->add_option("file", file)->required();

    auto* cmd_census = app.add_subcommand("census", "Count LPM/TPM cone members exhaustively");
    cmd_census->add_option("--p", p)->required();
    cmd_census->add_option("--k", k);
    cmd_census->add_option("--n", n)->required();
    cmd_census->add_option("--budget", budget);
    cmd_census->add_option("--shards", shards, "number of shards to sweep and merge");
    cmd_census->add_option("--shard", shard, "sweep one shard only, raw counts");

    auto* cmd_pres = app.add_subcommand("preservers", "Full scan for entrywise cone preservers");
    cmd_pres->add_option("--p", p)->required();
    cmd_pres->add_option("--k", k);
    cmd_pres->add_option("--n", n)->required();
    cmd_pres->add_option("--s", s);
    cmd_pres->add_option("--eps", eps_str, "source pattern, e.g. +,+")->required();
    cmd_pres->add_option("--eps-to", eps_to_str, "target pattern (default: same)");
    cmd_pres->add_option("--budget", budget);

    auto* cmd_group = app.add_subcommand("group-op", "Transported group operation on LPM");
    cmd_group->add_option("--law", law_str, "prod|choladd");
    cmd_group->add_option("a", file)->required();
    cmd_group->add_option("b", file_b);
    cmd_group->add_flag("--square", square, "compute A box A");
    cmd_group->add_flag("--cayley", cayley, "emit the Cayley table of A's cone");

    auto* cmd_witness = app.add_subcommand("witness-nonunique", "Two factors with equal image");
    cmd_witness->add_option("--p", p)->required();
    cmd_witness->add_option("--k", k);
    cmd_witness->add_option("--n", n);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // --help exits 0, any usage error exits 1
    }

    if (cmd_field->parsed()) {
        auto F = Field::make(p, k);
        std::cout << "field " << F->name() << '\n';
        std::cout << "q " << F->q() << '\n';
        std::cout << "class " << class_name(F->cls()) << '\n';
        std::cout << "modulus";
        for (int c : F->modulus()) std::cout << ' ' << c;
        std::cout << '\n';
    } else if (cmd_classify->parsed()) {
        std::cout << format_pattern(sign_pattern_lpm(load_sym(file))) << '\n';
    } else if (cmd_factor->parsed() || cmd_factor_tpm->parsed()) {
        const bool tpm = cmd_factor_tpm->parsed();
        const SymMatrix a = load_sym(file);
        SymMatrix anchor = [&] {
            if (!anchor_file.empty()) return load_sym(anchor_file);
            const SignPattern e = tpm ? sign_pattern_tpm(a) : sign_pattern_lpm(a);
            return tpm ? anchor_tpm(a.field(), e) : anchor_diag(a.field(), e);
        }();
        if (tpm) {
            const Matrix u = factor_tpm(a, anchor);
            write_matrix(std::cout, u);
            std::cout << "pattern " << format_pattern(sign_pattern_tpm(a)) << '\n';
        } else {
            const Factorization f = factor(a, anchor);
            write_matrix(std::cout, f.L.mat());
            std::cout << "pattern " << format_pattern(f.eps) << '\n';
        }
    } else if (cmd_transition->parsed()) {
        const SymMatrix r = transition(load_sym(file), load_sym(from_file), load_sym(to_file));
        write_matrix(std::cout, r.mat());
        std::cout << "pattern " << format_pattern(sign_pattern_lpm(r)) << '\n';
    } else if (cmd_inverse->parsed()) {
        const SymMatrix r = map_inverse_cone(load_sym(file));
        write_matrix(std::cout, r.mat());
        std::cout << "pattern " << format_pattern(sign_pattern_tpm(r)) << '\n';
    } else if (cmd_census->parsed()) {
        auto F = Field::make(p, k);
        if (shard >= 0) {
            print_census(census_shard(F, n, shard, shards, budget), false);
        } else if (shards > 1) {
            CensusReport r = census_shard(F, n, 0, shards, budget);
            for (int i = 1; i < shards; ++i)
                r = merge_census(r, census_shard(F, n, i, shards, budget));
            check_census(r);
            print_census(r, true);
        } else {
            print_census(run_census(F, n, budget), true);
        }
    } else if (cmd_pres->parsed()) {
        auto F = Field::make(p, k);
        const SignPattern ef = parse_pattern(eps_str);
        const SignPattern et = eps_to_str.empty() ? ef : parse_pattern(eps_to_str);
        if (static_cast<int>(ef.size()) != n || static_cast<int>(et.size()) != n)
            throw DomainError("E_PARSE", "pattern length must equal n");
        const PreserverScan scan = classify_preservers(F, n, ef, et, budget);
        for (const FuncTable& f : scan.preservers) {
            for (int i = 0; i < F->q(); ++i) std::cout << (i ? " " : "") << f.table[i];
            std::cout << '\n';
        }
        std::cout << "count " << scan.preservers.size() << '\n';
        std::cout << "verdict "
                  << (scan.empty ? "empty"
                                 : scan.matches_frobenius_family ? "frobenius-family-exact"
                                                                 : "other")
                  << '\n';
    } else if (cmd_group->parsed()) {
        const TriGroupLaw law = law_str == "choladd" ? TriGroupLaw::CholAdd : TriGroupLaw::Prod;
        const SymMatrix a = load_sym(file);
        if (cayley) {
            const SignPattern eps = sign_pattern_lpm(a);
            std::vector<SymMatrix> members;
            enumerate_sym(a.field(), a.n(), [&](const SymMatrix& m) {
                if (in_lpm_cone(m, eps)) members.push_back(m);
            }, budget);
            for (size_t i = 0; i < members.size(); ++i) {
                std::cout << "member " << i;
                for (int r = 0; r < a.n(); ++r)
                    for (int c = 0; c < a.n(); ++c) std::cout << ' ' << members[i].at(r, c);
                std::cout << '\n';
            }
            for (size_t i = 0; i < members.size(); ++i) {
                for (size_t j = 0; j < members.size(); ++j) {
                    const SymMatrix r = circledast(law, members[i], members[j], eps);
                    size_t idx = members.size();
                    for (size_t t = 0; t < members.size(); ++t)
                        if (members[t] == r) { idx = t; break; }
                    std::cout << (j ? " " : "") << idx;
                }
                std::cout << '\n';
            }
        } else if (square) {
            const SymMatrix r = box(law, a, a);
            write_matrix(std::cout, r.mat());
            std::cout << "pattern " << format_pattern(sign_pattern_lpm(r)) << '\n';
        } else {
            if (file_b.empty()) throw DomainError("E_PARSE", "second matrix required");
            const SymMatrix r = box(law, a, load_sym(file_b));
            write_matrix(std::cout, r.mat());
            std::cout << "pattern " << format_pattern(sign_pattern_lpm(r)) << '\n';
        }
    } else if (cmd_witness->parsed()) {
        auto F = Field::make(p, k);
        const auto [l1, l2] = nonuniqueness_witness(F, n);
        write_matrix(std::cout, l1.mat());
        write_matrix(std::cout, l2.mat());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const DomainError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "E_USAGE: " << e.what() << '\n';
        return 1;
    }
}
