#ifndef LOOPH_CLI_HPP
#define LOOPH_CLI_HPP

/// Batch command-line front end: every verification and table behind one
/// command surface with machine-readable output.  Exit status: 0 on
/// success or all checks passing, 1 when a verification fails (the report
/// is still emitted), 2 on usage errors.

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "algebra.hpp"
#include "rep.hpp"

namespace looph::cli {

struct Options {
    std::string format = "text";  // text | json | csv
    std::string scalar;           // t | q | int:VALUE
    std::string cache;
};

namespace detail {
inline std::string var_for(const Options& opt, const std::string& fallback) {
    if (opt.scalar == "t" || opt.scalar == "q") return opt.scalar;
    return fallback;
}

/// Apply an int:VALUE scalar override to a symbolic element.
inline Element maybe_specialize(const Element& e, const Options& opt) {
    if (opt.scalar.rfind("int:", 0) == 0) {
        long v = std::stol(opt.scalar.substr(4));
        return e.substitute(Scalar(v));
    }
    return e;
}

inline void print_report(const Report& rep, const Options& opt, std::ostream& out) {
    if (opt.format == "json") {
        out << rep.to_json().dump() << "\n";
        return;
    }
    for (const auto& line : rep.lines)
        out << (line.ok ? "PASS " : "FAIL ") << rep.title << ": " << line.name
            << (line.detail.empty() ? "" : " [" + line.detail + "]") << "\n";
    out << (rep.passed() ? "PASS " : "FAIL ") << rep.title << "\n";
}

inline bool counit_samples(int n, size_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> idx(1, n - 1), kind(0, 1), coeff(-3, 3);
    std::uniform_int_distribution<size_t> len(0, 4);
    auto random_element = [&]() {
        Element e(n);
        for (int t = 0; t < 3; ++t) {
            Word w;
            size_t l = len(rng);
            for (size_t i = 0; i < l; ++i)
                w.push_back({kind(rng) ? LetterKind::U : LetterKind::D, idx(rng)});
            e += Scalar(coeff(rng)) * Element::single(n, canonicalize(n, w), Scalar(1));
        }
        return normal_form(e);
    };
    for (size_t t = 0; t < trials; ++t) {
        Element a = random_element(), b = random_element();
        if (counit(multiply(a, b)) != counit(a) * counit(b)) return false;
    }
    return true;
}
}  // namespace detail

// ----- verify targets -----

inline Report verify_confluence(int max_len, int window, std::uint64_t seed, size_t trials) {
    Report rep;
    rep.title = "confluence";
    int n = window + 1;
    auto sweep = local_confluence_report(max_len, window, Rewriter::global(),
                                         [&](const Monomial& m) { return in_basis(n, m); });
    rep.add("local confluence, len<=" + std::to_string(max_len) + " window " +
                std::to_string(window),
            sweep.failures.empty(),
            std::to_string(sweep.monomials) + " monomials, " + std::to_string(sweep.branchings) +
                " branchings, " + std::to_string(sweep.overlapping) + " overlapping");
    rep.add("normal forms are redex-free", sweep.nonreduced_nf_terms == 0);
    rep.add("normal forms lie in the reduced-word span", sweep.nonbasis_nf_terms == 0);
    for (int m = 2; m <= 5; ++m)
        rep.add("strategy consistency n=" + std::to_string(m),
                strategy_consistency(m, trials, seed + m));
    rep.add("termination measure assertions",
            Rewriter::global().measure_violations() == 0,
            std::to_string(Rewriter::global().measure_checks()) + " checks");
    return rep;
}

inline Report verify_counts_report() {
    Report rep;
    rep.title = "counts";
    const long expected[] = {1, 3, 10, 35, 126, 462, 1716, 6435};
    for (int n = 1; n <= 8; ++n) {
        auto rec = counts(n);
        rep.add("n=" + std::to_string(n),
                rec.consistent() && rec.reduced == expected[n - 1],
                rec.catalan.get_str() + "/" + rec.tilde.get_str() + "/" + rec.reduced.get_str() +
                    "/" + rec.binom.get_str());
    }
    for (int n = 1; n <= 7; ++n) {
        auto pairs = tilde_dyck(n);
        auto all = lattice_paths(n);
        bool ok = pairs.size() == all.size();
        std::set<LatticePath> image;
        for (const auto& [p, q] : pairs) {
            LatticePath L = phi(p, q);
            auto [p2, q2] = phi_inverse(L);
            ok = ok && image.insert(L).second && p2 == p && q2 == q;
        }
        for (const auto& L : all) {
            auto [p, q] = phi_inverse(L);
            ok = ok && phi(p, q) == L;
        }
        rep.add("phi bijection n=" + std::to_string(n), ok,
                std::to_string(pairs.size()) + " pairs");
    }
    return rep;
}

inline Report verify_quotient(std::uint64_t seed) {
    Report rep;
    rep.title = "quotient/counit";
    for (int n = 2; n <= 4; ++n) {
        size_t dim = reduced_words(n).size();
        for (int j = 1; j <= n - 1; ++j) {
            size_t idim = ideal_dimension({d_chain(j, n)}, n);
            rep.add("ideal (D1..D" + std::to_string(j) + ") n=" + std::to_string(n),
                    idim == dim - 1, std::to_string(idim));
        }
    }
    rep.add("counit multiplicative on random pairs", detail::counit_samples(4, 1000, seed));
    return rep;
}

inline Report verify_schur_weyl_all(bool opt_n5) {
    Report rep;
    rep.title = "schur-weyl";
    for (int n = 2; n <= (opt_n5 ? 5 : 4); ++n) {
        Report r = schur_weyl_report(n);
        for (auto& line : r.lines) rep.add("n=" + std::to_string(n) + " " + line.name, line.ok,
                                           line.detail);
    }
    return rep;
}

inline Report verify_structure_all(bool opt_n5) {
    Report rep;
    rep.title = "structure";
    for (int n = 2; n <= (opt_n5 ? 5 : 4); ++n) {
        StructureRecord rec = structure_report(n, opt_n5);
        for (auto& line : rec.report.lines)
            rep.add("n=" + std::to_string(n) + " " + line.name, line.ok, line.detail);
    }
    return rep;
}

inline Report verify_presentations_all() {
    Report rep;
    rep.title = "presentations";
    for (int n = 2; n <= 5; ++n) {
        Report r = verify_presentation_map(n);
        for (auto& line : r.lines)
            rep.add("n=" + std::to_string(n) + " " + line.name, line.ok, line.detail);
    }
    Report d = verify_derivation_steps(3);
    for (auto& line : d.lines) rep.add(line.name, line.ok, line.detail);
    return rep;
}

inline Report verify_hecke_hopf_all() {
    Report rep;
    rep.title = "hecke-hopf";
    for (int n = 3; n <= 4; ++n) {
        Report r = verify_hecke_hopf(n);
        for (auto& line : r.lines)
            rep.add("n=" + std::to_string(n) + " " + line.name, line.ok, line.detail);
    }
    return rep;
}

// ----- command surface -----

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"loop Hecke algebra workbench"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--scalar", opt.scalar, "scalar context: t, q or int:VALUE");
    app.add_option("--cache", opt.cache, "normal-form cache file (JSON lines)");

    int n = 3, idx = 1, max_len = 6, window = 4;
    std::uint64_t seed = 0;
    size_t trials = 10000;
    bool opt_n5 = false;
    std::string word1, word2, path, op, target = "all", what;

    auto* c_norm = app.add_subcommand("normalize", "normal form of a word");
    c_norm->add_option("-n", n, "strand count")->required();
    c_norm->add_option("word", word1, "word, e.g. \"U1 D1\"")->required();

    auto* c_mul = app.add_subcommand("mul", "product of two words");
    c_mul->add_option("-n", n)->required();
    c_mul->add_option("a", word1)->required();
    c_mul->add_option("b", word2)->required();

    auto* c_basis = app.add_subcommand("basis", "reduced-word basis");
    c_basis->add_option("-n", n)->required();

    auto* c_dim = app.add_subcommand("dim", "dimension of the algebra");
    c_dim->add_option("-n", n)->required();

    auto* c_dyck = app.add_subcommand("dyck", "Dyck paths of semilength n");
    c_dyck->add_option("-n", n)->required();

    auto* c_mdd = app.add_subcommand("mdd", "zigzag-strip word of a Dyck path");
    c_mdd->add_option("path", path, "step string, e.g. uurr")->required();

    auto* c_counts = app.add_subcommand("counts", "basis cardinalities");
    c_counts->add_option("-n", n)->required();

    auto* c_rep = app.add_subcommand("rep-matrix", "representation matrices");
    c_rep->add_option("--op", op, "K1|K2|K|E|F|rcheck|scheck|psi-sigma|psi-rho|psi-u|psi-d")
        ->required();
    c_rep->add_option("-n", n)->required();
    c_rep->add_option("-i", idx, "strand index for two-strand operators");

    auto* c_verify = app.add_subcommand("verify", "run verification batteries");
    c_verify->add_option("target", target,
                         "confluence|presentations|schur-weyl|structure|quotient|hecke-hopf|"
                         "counts|all");
    c_verify->add_option("--max-len", max_len);
    c_verify->add_option("--window", window);
    c_verify->add_option("--seed", seed);
    c_verify->add_option("--trials", trials);
    c_verify->add_flag("--opt-n5", opt_n5, "include n=5 in schur-weyl/structure");

    auto* c_export = app.add_subcommand("export", "table exports");
    c_export->add_option("what", what, "multable|peirce|cartan|structure")->required();
    c_export->add_option("-n", n)->required();
    c_export->add_flag("--opt-n5", opt_n5);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    if (opt.cache.empty())
        if (const char* env = std::getenv("LOOPH_CACHE")) opt.cache = env;
    if (!opt.cache.empty()) Rewriter::global().load_cache(opt.cache);

    int status = 0;
    try {
        if (*c_norm) {
            Element nf = normal_form_of_word(n, parse_word(word1));
            nf = detail::maybe_specialize(nf, opt);
            if (opt.format == "json") out << nf.to_json().dump() << "\n";
            else out << nf.str(detail::var_for(opt, "t")) << "\n";
        } else if (*c_mul) {
            Element p = multiply(normal_form_of_word(n, parse_word(word1)),
                                 normal_form_of_word(n, parse_word(word2)));
            p = detail::maybe_specialize(p, opt);
            if (opt.format == "json") out << p.to_json().dump() << "\n";
            else out << p.str(detail::var_for(opt, "t")) << "\n";
        } else if (*c_basis) {
            const auto& basis = reduced_words(n);
            if (opt.format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& w : basis) arr.push_back(word_to_json(w.letters()));
                out << arr.dump() << "\n";
            } else {
                for (const auto& w : basis) out << w.str() << "\n";
            }
        } else if (*c_dim) {
            out << reduced_words(n).size() << "\n";
        } else if (*c_dyck) {
            auto paths = dyck_paths(n);
            if (opt.format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& p : paths) arr.push_back(p.str());
                out << arr.dump() << "\n";
            } else {
                for (const auto& p : paths) out << p.str() << "\n";
            }
        } else if (*c_mdd) {
            auto factors = mdd(DyckPath::parse(path));
            if (opt.format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& f : factors) arr.push_back(f);
                out << arr.dump() << "\n";
            } else if (factors.empty()) {
                out << "1\n";
            } else {
                for (const auto& f : factors) {
                    out << "(";
                    for (size_t i = 0; i < f.size(); ++i)
                        out << (i ? " " : "") << "s" << f[i];
                    out << ")";
                }
                out << "\n";
            }
        } else if (*c_counts) {
            auto rec = counts(n);
            if (opt.format == "json")
                out << nlohmann::json{{"catalan", rec.catalan.get_str()},
                                      {"tilde", rec.tilde.get_str()},
                                      {"reduced", rec.reduced.get_str()},
                                      {"binom", rec.binom.get_str()}}
                           .dump()
                    << "\n";
            else if (opt.format == "csv")
                out << "catalan,tilde,reduced,binom\n"
                    << rec.catalan << "," << rec.tilde << "," << rec.reduced << "," << rec.binom
                    << "\n";
            else
                out << "catalan=" << rec.catalan << " tilde=" << rec.tilde
                    << " reduced=" << rec.reduced << " binom=" << rec.binom << "\n";
        } else if (*c_rep) {
            QMatrix m;
            if (op == "K1") m = uq_action(UqGen::K1, n);
            else if (op == "K2") m = uq_action(UqGen::K2, n);
            else if (op == "K") m = uq_action(UqGen::K, n);
            else if (op == "E") m = uq_action(UqGen::E, n);
            else if (op == "F") m = uq_action(UqGen::F, n);
            else if (op == "rcheck") m = rcheck(idx, n);
            else if (op == "scheck") m = scheck(idx, n);
            else if (op == "psi-sigma") m = psi_sigma(idx, n);
            else if (op == "psi-rho") m = psi_rho(idx, n);
            else if (op == "psi-u") m = psi_u(idx, n);
            else if (op == "psi-d") m = psi_d(idx, n);
            else throw std::invalid_argument("unknown rep-matrix op: " + op);
            std::string var = detail::var_for(opt, "q");
            if (opt.format == "json") {
                out << m.to_json().dump() << "\n";
            } else if (opt.format == "csv") {
                for (size_t r = 0; r < m.dim(); ++r)
                    for (size_t c = 0; c < m.dim(); ++c)
                        out << m.at(r, c).str(var) << (c + 1 == m.dim() ? "\n" : ",");
            } else {
                for (size_t r = 0; r < m.dim(); ++r) {
                    for (size_t c = 0; c < m.dim(); ++c)
                        out << (c ? " " : "") << m.at(r, c).str(var);
                    out << "\n";
                }
            }
        } else if (*c_verify) {
            std::vector<Report> reports;
            auto want = [&](const std::string& name) { return target == "all" || target == name; };
            if (want("confluence")) reports.push_back(verify_confluence(max_len, window, seed, trials));
            if (want("presentations")) reports.push_back(verify_presentations_all());
            if (want("schur-weyl")) reports.push_back(verify_schur_weyl_all(opt_n5));
            if (want("structure")) reports.push_back(verify_structure_all(opt_n5));
            if (want("quotient")) reports.push_back(verify_quotient(seed));
            if (want("hecke-hopf")) reports.push_back(verify_hecke_hopf_all());
            if (want("counts")) reports.push_back(verify_counts_report());
            if (reports.empty()) throw std::invalid_argument("unknown verify target: " + target);
            bool all_ok = true;
            for (const auto& r : reports) {
                detail::print_report(r, opt, out);
                all_ok = all_ok && r.passed();
            }
            status = all_ok ? 0 : 1;
        } else if (*c_export) {
            if (what == "multable") {
                out << multiplication_table_csv(n);
            } else if (what == "peirce" || what == "cartan" || what == "structure") {
                StructureRecord rec = structure_report(n, opt_n5);
                if (what == "peirce") out << StructureRecord::matrix_csv(rec.peirce);
                else if (what == "cartan") out << StructureRecord::matrix_csv(rec.cartan);
                else out << rec.to_json().dump() << "\n";
            } else {
                throw std::invalid_argument("unknown export: " + what);
            }
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (!opt.cache.empty()) Rewriter::global().save_cache(opt.cache);
    return status;
}

}  // namespace looph::cli

#endif
