#ifndef QCRYST_CLI_HPP
#define QCRYST_CLI_HPP

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "qcryst/characters.hpp"
#include "qcryst/graph_json.hpp"
#include "qcryst/insertion.hpp"
#include "qcryst/verify.hpp"

namespace qcryst::cli {

// exit codes: 0 ok, 1 verification failure, 2 parse error, 3 empty crystal
constexpr int kOk = 0, kVerifyFail = 1, kParseError = 2, kEmpty = 3;

namespace detail {

inline Category parse_category(const std::string& s) {
    if (s == "gl") return Category::gl;
    if (s == "q") return Category::q;
    if (s == "qplus" || s == "q+") return Category::qplus;
    throw CLI::ValidationError("--cat", "unknown category " + s);
}

inline void emit(const CrystalGraph& g, const std::string& format, const std::string& name,
                 std::ostream& out) {
    if (format == "dot") {
        out << to_dot(g, name);
    } else if (format == "json") {
        out << to_json_string(g);
    } else {
        out << name << ": " << g.size() << " vertices, " << g.edge_count() << " edges\n";
        for (size_t i = 0; i < g.size(); ++i) {
            out << "  [" << g.verts[i].str() << "]  wt=" << to_string(g.wts[i]);
            for (auto [l, d] : g.fout[i])
                out << "  --" << label_name(l) << "--> [" << g.verts[d].str() << "]";
            out << "\n";
        }
    }
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"crystals for Schur Q-functions: words, factorizations, shifted tableaux"};
    app.require_subcommand(1);

    // ---- build -----------------------------------------------------------
    auto* build = app.add_subcommand("build", "materialize a crystal graph");
    std::string kind, format = "text", cat_name = "qplus", z_arg, shape_arg;
    int n = 2, m = 2, power = 2;
    size_t max_vertices = 1'000'000;
    build->add_option("kind", kind, "standard|tensor|words|incr|shtab")->required();
    build->add_option("--n", n, "rank");
    build->add_option("--m", m, "word length");
    build->add_option("--power", power, "tensor power");
    build->add_option("--cat", cat_name, "gl|q|qplus");
    build->add_option("--z", z_arg, "involution, e.g. \"(1,3)(2,4)\"");
    build->add_option("--shape", shape_arg, "strict partition, e.g. 2,1");
    build->add_option("--format", format, "dot|json|text");
    build->add_option("--max-vertices", max_vertices, "materialization cap");

    // ---- character -------------------------------------------------------
    auto* character_cmd = app.add_subcommand("character", "weight generating function");
    std::string ch_shape, ch_z;
    int ch_words = -1;
    bool ch_standard = false;
    character_cmd->add_option("--shtab", ch_shape, "shape of a shifted tableau crystal");
    character_cmd->add_option("--incr", ch_z, "involution for a factorization crystal");
    character_cmd->add_option("--words", ch_words, "length for a word crystal");
    character_cmd->add_flag("--standard", ch_standard, "standard crystal");
    character_cmd->add_option("--n", n, "rank");
    std::string ch_format = "text";
    character_cmd->add_option("--format", ch_format, "text|json");

    // ---- expand ----------------------------------------------------------
    auto* expand = app.add_subcommand("expand", "Schur-Q expansion of an involution Stanley polynomial");
    std::string ex_z;
    int ex_n = 0;
    expand->add_option("--z", ex_z, "involution")->required();
    expand->add_option("--n", ex_n, "rank (default: common involution word length)");

    // ---- insert ----------------------------------------------------------
    auto* insert = app.add_subcommand("insert", "orthogonal Edelman-Greene / mixed insertion");
    std::string in_a, in_w;
    bool in_mixed = false;
    insert->add_option("--a", in_a, "increasing factorization, e.g. \"4 | 1' 3 5 | | 4' | | 2\"");
    insert->add_option("--w", in_w, "primed word, e.g. 41'354'2");
    insert->add_flag("--mixed", in_mixed, "orthogonal mixed insertion (with --w and --n)");
    insert->add_option("--n", n, "rank for mixed insertion");

    // ---- verify ----------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int v_n = 3, v_m = 4, v_N = 4;
    std::string v_shape = "3,2,1";
    verify_cmd
        ->add_option("suite", suite,
                     "axioms|tensor-assoc|braid|highest-weight|insertion-commute|characters|stanley")
        ->required();
    verify_cmd->add_option("--n", v_n, "rank bound");
    verify_cmd->add_option("--m", v_m, "word length bound");
    verify_cmd->add_option("--N", v_N, "window for involutions (I_N)");
    verify_cmd->add_option("--shape", v_shape, "shape bound for tableau suites");

    try {
        std::vector<const char*> argv;
        std::string prog = "qcryst";
        argv.push_back(prog.c_str());
        for (auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kOk;
        }
        err << e.what() << "\n";
        return kParseError;
    }

    try {
        if (*build) {
            CrystalGraph g;
            Category cat = detail::parse_category(cat_name);
            if (kind == "standard") {
                g = materialize(standard_crystal(n, cat), standard_crystal_vertices(n, cat),
                                max_vertices);
            } else if (kind == "tensor") {
                CrystalModel base = standard_crystal(n, cat);
                CrystalModel model = tensor_power(base, power);
                std::vector<Element> seeds;
                auto letters = standard_crystal_vertices(n, cat);
                std::vector<std::vector<Element>> tuples{{}};
                for (int i = 0; i < power; ++i) {
                    std::vector<std::vector<Element>> next;
                    for (auto& t : tuples)
                        for (auto& l : letters) {
                            auto u = t;
                            u.push_back(l);
                            next.push_back(u);
                        }
                    tuples = next;
                }
                for (auto& t : tuples) seeds.push_back(tensor_element(t));
                g = materialize(model, seeds, max_vertices);
            } else if (kind == "words") {
                g = materialize(word_crystal(n, m, cat), all_words(n, m, cat == Category::qplus),
                                max_vertices);
            } else if (kind == "incr") {
                Permutation z = parse_involution(z_arg);
                auto elems = factorization_elements(z, n);
                if (elems.empty()) {
                    err << "Incr+_" << n << "(" << z.cycle_string()
                        << ") is empty: the involution shape " << to_string(involution_shape(z))
                        << " has more than " << n << " rows\n";
                    return kEmpty;
                }
                g = materialize(factorization_crystal(z, n), elems, max_vertices);
            } else if (kind == "shtab") {
                StrictPartition lambda = parse_strict_partition(shape_arg);
                if (lambda.length() > n) {
                    err << "ShTab+_" << n << "(" << to_string(lambda) << ") is empty: l(lambda) > n\n";
                    return kEmpty;
                }
                g = materialize(shifted_tableau_crystal(lambda, n),
                                shifted_tableau_elements(lambda, n), max_vertices);
            } else {
                err << "unknown build kind: " << kind << "\n";
                return kParseError;
            }
            detail::emit(g, format, kind, out);
            return kOk;
        }

        if (*character_cmd) {
            SparsePolynomial ch(0);
            if (!ch_shape.empty()) {
                StrictPartition lambda = parse_strict_partition(ch_shape);
                if (lambda.length() > n) {
                    err << "empty crystal\n";
                    return kEmpty;
                }
                ch = schur_q(lambda, n);
            } else if (!ch_z.empty()) {
                Permutation z = parse_involution(ch_z);
                if (involution_shape(z).length() > n) {
                    err << "empty crystal\n";
                    return kEmpty;
                }
                ch = inv_stanley(z, n);
            } else if (ch_words >= 0) {
                ch = character(materialize(word_crystal(n, ch_words), all_words(n, ch_words)));
            } else if (ch_standard) {
                ch = character(materialize(standard_crystal(n, Category::qplus),
                                           standard_crystal_vertices(n, Category::qplus)));
            } else {
                err << "character: one of --shtab/--incr/--words/--standard required\n";
                return kParseError;
            }
            if (ch_format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (auto& [mono, coeff] : ch.terms()) {
                    nlohmann::json term;
                    term["exponents"] = mono;
                    term["coefficient"] = coeff.str();
                    j.push_back(term);
                }
                out << j.dump(2) << "\n";
            } else {
                out << ch.str() << "\n";
            }
            return kOk;
        }

        if (*expand) {
            Permutation z = parse_involution(ex_z);
            int nn = ex_n > 0 ? ex_n : std::max(1, involution_length(z));
            if (involution_shape(z).length() > nn) {
                err << "empty crystal\n";
                return kEmpty;
            }
            for (auto& [lambda, c] : expand_in_schur_q(inv_stanley(z, nn)))
                out << "(" << to_string(lambda) << "): " << c.str() << "\n";
            return kOk;
        }

        if (*insert) {
            if (in_mixed) {
                if (in_w.empty()) {
                    err << "insert --mixed requires --w\n";
                    return kParseError;
                }
                Word w = parse_word(in_w);
                int nn = n;
                for (Letter l : w) nn = std::max(nn, l.value());
                InsertionPair pq = mixed_insert(w, nn);
                out << "P_HM: " << to_string(pq.P) << "\n";
                out << "Q_HM: " << to_string(pq.Q) << "\n";
                return kOk;
            }
            InsertionPair pq;
            if (!in_a.empty()) pq = eg_insert(parse_factorization(in_a));
            else if (!in_w.empty()) pq = eg_insert_word(parse_word(in_w));
            else {
                err << "insert requires --a or --w\n";
                return kParseError;
            }
            out << "P_EG: " << to_string(pq.P) << "\n";
            out << "Q_EG: " << to_string(pq.Q) << "\n";
            return kOk;
        }

        if (*verify_cmd) {
            verify::Report report;
            if (suite == "axioms") {
                for (int nn = 1; nn <= v_n; ++nn) {
                    CrystalGraph g = materialize(standard_crystal(nn, Category::qplus),
                                                 standard_crystal_vertices(nn, Category::qplus));
                    verify::axiom_suite(g, "axioms:B+_" + std::to_string(nn), report);
                }
                for (int nn = 1; nn <= std::min(3, v_n); ++nn)
                    for (int mm = 0; mm <= v_m; ++mm) {
                        CrystalGraph g = materialize(word_crystal(nn, mm), all_words(nn, mm));
                        verify::axiom_suite(g,
                                            "axioms:W+_" + std::to_string(nn) + "(" +
                                                std::to_string(mm) + ")",
                                            report);
                    }
            } else if (suite == "tensor-assoc") {
                report = verify::tensor_assoc_suite(v_n);
            } else if (suite == "braid") {
                report = verify::braid_suite(v_n, v_m);
            } else if (suite == "highest-weight") {
                report = verify::highest_weight_suite(parse_strict_partition(v_shape), v_n);
            } else if (suite == "insertion-commute") {
                report = verify::insertion_commute_suite(v_N, v_n);
            } else if (suite == "characters") {
                report = verify::characters_suite(parse_strict_partition(v_shape), v_n);
            } else if (suite == "stanley") {
                report = verify::stanley_suite(v_N);
            } else {
                err << "unknown suite: " << suite << "\n";
                return kParseError;
            }
            verify::print(report, out);
            return verify::all_pass(report) ? kOk : kVerifyFail;
        }
    } catch (const std::invalid_argument& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kVerifyFail;
    }
    return kParseError;
}

}  // namespace qcryst::cli

#endif
